#include "netavg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "netavg/observations.hpp"
#include "netavg/protocols.hpp"

namespace netavg {

const char* verdict_name(ConsensusVerdict v) {
  switch (v) {
    case ConsensusVerdict::None:
      return "none";
    case ConsensusVerdict::Case1:
      return "case1";
    case ConsensusVerdict::Case2:
      return "case2";
    case ConsensusVerdict::Neither:
      return "neither";
  }
  return "none";
}

double seminorm_inf(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("seminorm of an empty vector");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return 0.5 * (*hi - *lo);
}

double average_error(std::span<const double> x, double x_bar) {
  if (x.empty()) throw std::invalid_argument("average error of an empty vector");
  double s = 0.0;
  for (double v : x) s += std::abs(v - x_bar);
  return s / static_cast<double>(x.size());
}

double matrix_seminorm(std::span<const double> row_major, int rows, int cols) {
  if (rows < 1 || cols < 1 ||
      row_major.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("matrix dimensions do not match the data");
  }
  for (double v : row_major) {
    if (v < 0.0) {
      throw std::invalid_argument("matrix seminorm expects nonnegative entries");
    }
  }
  double best = 0.0;
  for (int i = 0; i < rows; ++i) {
    for (int j = i + 1; j < rows; ++j) {
      double dist = 0.0;
      for (int k = 0; k < cols; ++k) {
        dist += std::abs(row_major[static_cast<std::size_t>(i) * cols + k] -
                         row_major[static_cast<std::size_t>(j) * cols + k]);
      }
      best = std::max(best, dist);
    }
  }
  return 0.5 * best;
}

RateFit fit_loglog(std::span<const double> ts,
                   std::span<const double> values) {
  if (ts.size() != values.size() || ts.size() < 10) {
    throw std::invalid_argument("log-log fit needs >= 10 matching points");
  }
  const auto n = static_cast<double>(ts.size());
  double sx = 0, sy = 0;
  std::vector<double> lx(ts.size()), ly(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts[i] > 0.0) || !(values[i] > 0.0)) {
      throw std::invalid_argument("log-log fit needs positive data");
    }
    lx[i] = std::log(ts[i]);
    ly[i] = std::log(values[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("degenerate fit window");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = static_cast<int>(ts.size());
  double rss = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    rss += r * r;
  }
  fit.residual_rms = std::sqrt(rss / n);
  return fit;
}

RateFit fit_rate(const std::vector<TraceRecord>& trace, long t_lo, long t_hi) {
  if (!(t_lo < t_hi)) throw std::invalid_argument("fit window is empty");
  std::vector<double> ts, vs;
  for (const TraceRecord& rec : trace) {
    if (rec.t < t_lo || rec.t > t_hi) continue;
    ts.push_back(static_cast<double>(rec.t));
    vs.push_back(std::max(rec.seminorm, 1e-15));
  }
  return fit_loglog(ts, vs);
}

ConsensusVerdict detect_quantized_consensus(std::span<const double> y,
                                            std::span<const double> alphas,
                                            double x_bar_r) {
  if (y.empty() || y.size() != alphas.size()) {
    throw std::invalid_argument("state and alpha sizes must match");
  }
  for (double a : alphas) {
    if (!(a > 0.0 && a < 0.5)) {
      throw std::invalid_argument("alpha values must lie in (0, 0.5)");
    }
  }
  bool case1 = true;
  const double floor0 = std::floor(y[0]);
  for (double yi : y) {
    if (std::floor(yi) != floor0 || !(std::abs(yi - x_bar_r) < 1.0)) {
      case1 = false;
      break;
    }
  }
  if (case1) return ConsensusVerdict::Case1;

  const double alpha_max = *std::max_element(alphas.begin(), alphas.end());
  bool case2 = true;
  for (std::size_t i = 0; i < y.size() && case2; ++i) {
    if (std::abs(y[i] - x_bar_r) > 2.0 * alpha_max) case2 = false;
    for (std::size_t j = i + 1; j < y.size() && case2; ++j) {
      if (std::abs(y[i] - y[j]) > alphas[i] + alphas[j]) case2 = false;
    }
  }
  return case2 ? ConsensusVerdict::Case2 : ConsensusVerdict::Neither;
}

std::vector<double> alpha_values(const WeightMatrix& w, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  const ValidationReport report = validate_assumption4(w);
  if (!report.pass()) {
    throw std::invalid_argument("weight matrix lacks a dominant diagonal: " +
                                report.violations.front());
  }
  std::vector<double> alphas(w.n());
  for (int i = 0; i < w.n(); ++i) {
    alphas[i] = 1.0 - w.at(i, i) + gamma;
    if (!(alphas[i] < 0.5)) {
      throw std::invalid_argument(
          "alpha_" + std::to_string(i) +
          " >= 1/2; gamma is too large for this diagonal");
    }
  }
  return alphas;
}

QuantizedTarget quantized_target(std::span<const double> beliefs,
                                 double delta) {
  if (beliefs.empty()) throw std::invalid_argument("no beliefs given");
  double rounded = 0.0, exact = 0.0;
  for (double b : beliefs) {
    rounded += round_to_grid(b, delta);
    exact += b;
  }
  QuantizedTarget target;
  target.x_bar_r = rounded / static_cast<double>(beliefs.size());
  target.deviation_from_mean =
      std::abs(target.x_bar_r - exact / static_cast<double>(beliefs.size()));
  if (target.deviation_from_mean > 0.5 * delta + 1e-12) {
    throw std::logic_error("grid-rounded mean strayed past delta/2");
  }
  return target;
}

double finite_time_bound(double c1, double c2, double lambda1, double k,
                         double x_bar_i, long t) {
  if (!(lambda1 >= 0.0 && lambda1 < 1.0)) {
    throw std::invalid_argument("lambda1 must be in [0, 1)");
  }
  if (!(c1 > 0.0 && c2 > 0.0)) {
    throw std::invalid_argument("constants must be positive");
  }
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  return c1 * std::pow(lambda1, static_cast<double>(t)) +
         (c2 + k + x_bar_i) / static_cast<double>(t);
}

double finite_time_min_iterations(double c2, double delta) {
  if (!(c2 > 0.0)) throw std::invalid_argument("c2 must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("confidence delta must be in (0, 1)");
  }
  const double denom = 1.0 - 2.0 * std::exp(-2.0 * c2);
  if (!(denom > 0.0)) {
    throw std::invalid_argument("c2 too small: 1 - 2 exp(-2 c2) must be > 0");
  }
  return std::log(2.0 / (delta * denom)) / (2.0 * c2);
}

MassReport mass_report(const NetworkState& state) {
  MassReport report;
  report.mass_y = state.mass_y();
  report.mass_z = state.mass_z();
  if (state.mode == ProtocolMode::DirectedPushSum) {
    report.mass_v = state.mass_v();
  }
  return report;
}

std::vector<TraceRecord> make_trace_records(const Trace& trace,
                                            const TraceContext& ctx) {
  std::vector<TraceRecord> records;
  records.reserve(trace.steps.size());
  for (const StepRecord& step : trace.steps) {
    TraceRecord rec;
    rec.t = step.t;
    rec.e_t = average_error(step.estimate, ctx.x_bar);
    rec.seminorm = seminorm_inf(step.estimate);
    rec.mass_y = step.mass_y;
    rec.mass_z = step.mass_z;
    const auto [lo, hi] =
        std::minmax_element(step.estimate.begin(), step.estimate.end());
    rec.floor_min = static_cast<long long>(std::floor(*lo));
    rec.floor_max = static_cast<long long>(std::floor(*hi));
    rec.verdict = ctx.classify
                      ? detect_quantized_consensus(step.estimate, ctx.alphas,
                                                   ctx.x_bar_r)
                      : ConsensusVerdict::None;
    if (ctx.keep_snapshots) rec.y = step.estimate;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace netavg
