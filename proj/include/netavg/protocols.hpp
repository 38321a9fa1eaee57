#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "netavg/graph.hpp"
#include "netavg/observations.hpp"
#include "netavg/rational.hpp"
#include "netavg/topology.hpp"
#include "netavg/weights.hpp"

namespace netavg {

enum class ProtocolMode { UndirectedExact, DirectedPushSum, QuantizedUndirected };
enum class QuantizerKind { Truncation, Ceiling, Rounding };

// Communication quantizer plus the division-precision grid. delta == 0 keeps
// the communication quantizer but leaves the running average unrounded.
struct QuantizationConfig {
  QuantizerKind kind = QuantizerKind::Truncation;
  Rat delta = Rat(1, 10);

  double delta_double() const { return to_double(delta); }
  bool grid_enabled() const { return delta > 0; }
};

// Raised when a protocol-level conservation law breaks mid-run. This should
// be impossible; it surfaces as a hard fault rather than a bad result.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full network state at a single logical step. Which fields are live depends
// on the mode:
//   UndirectedExact:     y, avg
//   DirectedPushSum:     y, mu, v, avg
//   QuantizedUndirected: yq, ztilde, avg (y mirrors yq as doubles)
struct NetworkState {
  ProtocolMode mode = ProtocolMode::UndirectedExact;
  int n = 0;
  long t = 0;
  std::vector<double> y;
  std::vector<RunningAverage> avg;
  std::vector<double> mu, v;
  std::vector<Rat> yq, ztilde;

  double mass_y() const;
  double mass_z() const;  // sum of z (exact modes) or ztilde (quantized)
  double mass_v() const;
};

NetworkState init_state(const std::vector<double>& x1, ProtocolMode mode,
                        const std::optional<QuantizationConfig>& q = {});

// y(t+1) = W y(t) + z(t+1) - z(t), with the running averages advanced by
// x_next first.
NetworkState step_undirected(const NetworkState& state, const WeightMatrix& w,
                             const std::vector<double>& x_next);

// Push-sum transfer: each agent j splits y_j and v_j into 1 + out_degree(j)
// equal shares, keeping one and sending one to each out-neighbor. Receivers
// accumulate into mu and v, then y(t+1) = mu(t+1) + z(t+1) - z(t).
NetworkState step_push_sum(const NetworkState& state, const Graph& g,
                           const std::vector<double>& x_next);

// y(t+1) = W Q(y(t)) + y(t) - Q(y(t)) + (ztilde(t+1) - ztilde(t)), all in
// exact rational arithmetic. W must be in rational form.
NetworkState step_quantized(const NetworkState& state, const WeightMatrix& w,
                            const QuantizationConfig& q,
                            const std::vector<double>& x_next);

// h_i = mu_i / v_i, the push-sum estimate of the average belief.
std::vector<double> ratio_estimates(const NetworkState& state);

double quantize(double x, QuantizerKind kind);
std::vector<double> quantize(const std::vector<double>& values,
                             QuantizerKind kind);
BigInt quantize_rat(const Rat& x, QuantizerKind kind);

// How the per-step mixing matrix is obtained in undirected modes.
struct WeightPolicy {
  enum class Kind { None, MetropolisPerStep, Fixed, MaskedFixed };
  Kind kind = Kind::None;
  std::optional<WeightMatrix> base;

  static WeightPolicy none() { return {Kind::None, {}}; }
  static WeightPolicy metropolis_per_step() {
    return {Kind::MetropolisPerStep, {}};
  }
  static WeightPolicy fixed(WeightMatrix w) {
    return {Kind::Fixed, std::move(w)};
  }
  static WeightPolicy masked_fixed(WeightMatrix w) {
    return {Kind::MaskedFixed, std::move(w)};
  }
};

// One step's snapshot as recorded by run(). `estimate` is what each agent
// would report: y, the push-sum ratio h, or the quantized y as doubles.
struct StepRecord {
  long t = 0;
  std::vector<double> estimate;
  double mass_y = 0;
  double mass_z = 0;
  double v_min = 0;            // push-sum only
  bool ztilde_changed = false;  // quantized only
};

struct Trace {
  std::vector<StepRecord> steps;
  NetworkState final_state;
  double v_min_overall = 0;  // observed push-sum mass floor (epsilon)
};

struct RunSpec {
  TopologySchedule schedule;
  WeightPolicy weights;
  std::vector<BeliefModel> models;
  ProtocolMode mode = ProtocolMode::UndirectedExact;
  std::optional<QuantizationConfig> quant;
  long horizon = 1;
  std::uint64_t seed = 0;
};

// Executes init plus horizon-1 steps, checking the conservation invariants
// at every step. Fully deterministic in (spec, seed).
Trace run(const RunSpec& spec);

}  // namespace netavg
