#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netavg/weights.hpp"

namespace netavg {

struct NetworkState;
struct Trace;

enum class ConsensusVerdict { None, Case1, Case2, Neither };
const char* verdict_name(ConsensusVerdict v);

// Half the spread: (max_i x_i - min_j x_j) / 2. Zero exactly on consensus.
double seminorm_inf(std::span<const double> x);

// (1/n) * sum_i |x_i - x_bar|.
double average_error(std::span<const double> x, double x_bar);

// (1/2) * max over row pairs of the L1 distance between rows.
double matrix_seminorm(std::span<const double> row_major, int rows, int cols);

// Per-step metrics distilled from a protocol trace.
struct TraceRecord {
  long t = 0;
  double e_t = 0;
  double seminorm = 0;
  double mass_y = 0;
  double mass_z = 0;
  long long floor_min = 0;
  long long floor_max = 0;
  ConsensusVerdict verdict = ConsensusVerdict::None;
  std::vector<double> y;  // per-agent snapshot (kept for small n)
};

struct RateFit {
  double slope = 0;
  double intercept = 0;
  double residual_rms = 0;
  int points = 0;
};

// Ordinary least squares on (log t, log v) pairs.
RateFit fit_loglog(std::span<const double> ts, std::span<const double> values);

// Log-log fit of the consensus seminorm over t in [t_lo, t_hi]; values are
// floored at 1e-15 so consensus plateaus stay finite. Needs >= 10 points.
RateFit fit_rate(const std::vector<TraceRecord>& trace, long t_lo, long t_hi);

// Case1: all floors equal and every |y_i - x_bar_r| < 1.
// Case2: |y_i - y_j| <= alpha_i + alpha_j and |y_i - x_bar_r| <= 2 max alpha.
// Case1 wins when both hold.
ConsensusVerdict detect_quantized_consensus(std::span<const double> y,
                                            std::span<const double> alphas,
                                            double x_bar_r);

// alpha_i = 1 - w_ii + gamma; throws unless every alpha_i < 1/2.
std::vector<double> alpha_values(const WeightMatrix& w, double gamma);

struct QuantizedTarget {
  double x_bar_r = 0;           // mean of the grid-rounded beliefs
  double deviation_from_mean = 0;  // |x_bar_r - x_bar|, at most delta/2
};
QuantizedTarget quantized_target(std::span<const double> beliefs,
                                 double delta);

// c1 * lambda1^t + (c2 + k + x_bar_i) / t.
double finite_time_bound(double c1, double c2, double lambda1, double k,
                         double x_bar_i, long t);

// Iteration count after which the bound holds with probability >= 1 - delta.
double finite_time_min_iterations(double c2, double delta);

struct MassReport {
  double mass_y = 0;
  double mass_z = 0;
  std::optional<double> mass_v;
};
MassReport mass_report(const NetworkState& state);

// Context for turning a raw trace into records: the consensus target, and
// for quantized runs the classification inputs.
struct TraceContext {
  double x_bar = 0;
  bool classify = false;
  std::vector<double> alphas;
  double x_bar_r = 0;
  bool keep_snapshots = true;
};
std::vector<TraceRecord> make_trace_records(const Trace& trace,
                                            const TraceContext& ctx);

}  // namespace netavg
