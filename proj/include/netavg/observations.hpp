#pragma once

#include <cstdint>

namespace netavg {

// Bounded i.i.d. observation model for one agent. The declared mean is the
// distribution's true mean; every draw satisfies |x| <= max_abs().
class BeliefModel {
 public:
  enum class Kind { Uniform, TruncatedGaussian, Constant };

  static BeliefModel uniform(double lo, double hi);
  // Gaussian truncated symmetrically to [mean - halfwidth, mean + halfwidth],
  // which keeps the mean exact. Default halfwidth is 5 standard deviations.
  static BeliefModel truncated_gaussian(double mean, double stddev,
                                        double halfwidth);
  static BeliefModel truncated_gaussian(double mean, double stddev);
  static BeliefModel constant(double c);

  Kind kind() const { return kind_; }
  double mean() const { return mean_; }
  double stddev() const;
  double max_abs() const;  // support bound K for this agent

  // Pure function of (seed, agent, t): the counter-based stream makes draws
  // i.i.d. across t and independent across agents without shared state.
  double draw(int agent, long t, std::uint64_t seed) const;

 private:
  BeliefModel(Kind kind, double a, double b, double c)
      : kind_(kind), mean_(a), p1_(b), p2_(c) {}
  Kind kind_;
  double mean_;
  double p1_;  // Uniform: lo; Gaussian: stddev; Constant: unused
  double p2_;  // Uniform: hi; Gaussian: halfwidth
};

double draw_sample(const BeliefModel& model, int agent, long t,
                   std::uint64_t seed);

// Running average of the first `count` samples; z * count tracks sum.
struct RunningAverage {
  double sum = 0.0;
  long count = 0;
  double z = 0.0;
};

// z(t+1) = (t * z(t) + x) / (t + 1); sum and count advance with it.
RunningAverage update_running_average(RunningAverage ra, double x_new);

// Nearest multiple of delta; exact half-grid points round up.
double round_to_grid(double x, double delta);

// Grid-rounded quotient sum/count. Rounding the exact quotient each step
// keeps the division imprecision from accumulating.
double quantized_running_average(double sum, long count, double delta);

// True iff x is within tol of some half-grid point k*delta + delta/2.
bool is_half_grid(double x, double delta, double tol);
bool is_half_grid(double x, double delta);  // tol = 1e-9 * delta

// Nearest half-grid point to x (used to place beliefs on the unstable set).
double nearest_half_grid(double x, double delta);

}  // namespace netavg
