#include "netavg/observations.hpp"

#include <cmath>
#include <stdexcept>

#include "netavg/rng.hpp"

namespace netavg {

BeliefModel BeliefModel::uniform(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("uniform needs lo <= hi");
  return BeliefModel(Kind::Uniform, 0.5 * (lo + hi), lo, hi);
}

BeliefModel BeliefModel::truncated_gaussian(double mean, double stddev,
                                            double halfwidth) {
  if (!(stddev > 0.0)) throw std::invalid_argument("stddev must be positive");
  if (!(halfwidth > 0.0)) {
    throw std::invalid_argument("truncation halfwidth must be positive");
  }
  return BeliefModel(Kind::TruncatedGaussian, mean, stddev, halfwidth);
}

BeliefModel BeliefModel::truncated_gaussian(double mean, double stddev) {
  return truncated_gaussian(mean, stddev, 5.0 * stddev);
}

BeliefModel BeliefModel::constant(double c) {
  return BeliefModel(Kind::Constant, c, 0.0, 0.0);
}

double BeliefModel::stddev() const {
  switch (kind_) {
    case Kind::Uniform:
      return (p2_ - p1_) / std::sqrt(12.0);
    case Kind::TruncatedGaussian:
      return p1_;
    case Kind::Constant:
      return 0.0;
  }
  return 0.0;
}

double BeliefModel::max_abs() const {
  switch (kind_) {
    case Kind::Uniform:
      return std::max(std::abs(p1_), std::abs(p2_));
    case Kind::TruncatedGaussian:
      return std::abs(mean_) + p2_;
    case Kind::Constant:
      return std::abs(mean_);
  }
  return 0.0;
}

double BeliefModel::draw(int agent, long t, std::uint64_t seed) const {
  if (t < 1) throw std::invalid_argument("sample index starts at 1");
  const auto a = static_cast<std::uint64_t>(agent);
  const auto step = static_cast<std::uint64_t>(t);
  switch (kind_) {
    case Kind::Constant:
      return mean_;
    case Kind::Uniform: {
      const double u =
          rng::uniform01(rng::mix(seed, rng::kSample, a, step));
      return p1_ + u * (p2_ - p1_);
    }
    case Kind::TruncatedGaussian: {
      // Rejection against the symmetric window; the attempt index extends
      // the counter so retries stay deterministic.
      const std::uint64_t base = rng::mix(seed, rng::kSample, a, step);
      for (std::uint64_t attempt = 0;; ++attempt) {
        const double g = rng::standard_normal(rng::mix(base, attempt, 0),
                                              rng::mix(base, attempt, 1));
        const double dev = p1_ * g;
        if (std::abs(dev) <= p2_) return mean_ + dev;
      }
    }
  }
  throw std::logic_error("unreachable belief model kind");
}

double draw_sample(const BeliefModel& model, int agent, long t,
                   std::uint64_t seed) {
  return model.draw(agent, t, seed);
}

RunningAverage update_running_average(RunningAverage ra, double x_new) {
  const auto t = static_cast<double>(ra.count);
  ra.z = (t * ra.z + x_new) / (t + 1.0);
  ra.sum += x_new;
  ra.count += 1;
  return ra;
}

double round_to_grid(double x, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("grid delta must be > 0");
  return std::floor(x / delta + 0.5) * delta;
}

double quantized_running_average(double sum, long count, double delta) {
  if (count < 1) throw std::invalid_argument("average needs count >= 1");
  return round_to_grid(sum / static_cast<double>(count), delta);
}

bool is_half_grid(double x, double delta, double tol) {
  if (!(delta > 0.0)) throw std::invalid_argument("grid delta must be > 0");
  const double r = x / delta - 0.5;
  const double dist = std::abs(r - std::nearbyint(r)) * delta;
  return dist <= tol;
}

bool is_half_grid(double x, double delta) {
  return is_half_grid(x, delta, 1e-9 * delta);
}

double nearest_half_grid(double x, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("grid delta must be > 0");
  return (std::floor(x / delta) + 0.5) * delta;
}

}  // namespace netavg
