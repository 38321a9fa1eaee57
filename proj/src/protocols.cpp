#include "netavg/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace netavg {

namespace {

double sum_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

Rat sum_of(const std::vector<Rat>& v) {
  Rat s(0);
  for (const Rat& x : v) s += x;
  return s;
}

void require_n(std::size_t got, int n, const char* what) {
  if (got != static_cast<std::size_t>(n)) {
    throw std::invalid_argument(std::string(what) +
                                ": expected one value per agent");
  }
}

// Grid-rounded running average as an exact rational: the grid index is
// computed in floating point (the samples are doubles anyway), the result
// is the exact multiple k * delta. With the grid disabled the quotient is
// converted exactly instead.
Rat quantized_average_rat(double sum, long count, const QuantizationConfig& q) {
  if (q.grid_enabled()) {
    const double quotient = sum / static_cast<double>(count);
    const double k = std::floor(quotient / q.delta_double() + 0.5);
    return Rat(rat_from_double_exact(k)) * q.delta;
  }
  return rat_from_double_exact(sum / static_cast<double>(count));
}

}  // namespace

double NetworkState::mass_y() const {
  if (mode == ProtocolMode::QuantizedUndirected) return to_double(sum_of(yq));
  return sum_of(y);
}

double NetworkState::mass_z() const {
  if (mode == ProtocolMode::QuantizedUndirected) {
    return to_double(sum_of(ztilde));
  }
  double s = 0.0;
  for (const RunningAverage& ra : avg) s += ra.z;
  return s;
}

double NetworkState::mass_v() const { return sum_of(v); }

NetworkState init_state(const std::vector<double>& x1, ProtocolMode mode,
                        const std::optional<QuantizationConfig>& q) {
  if (x1.empty()) throw std::invalid_argument("no initial samples");
  NetworkState st;
  st.mode = mode;
  st.n = static_cast<int>(x1.size());
  st.t = 1;
  st.avg.resize(st.n);
  for (int i = 0; i < st.n; ++i) {
    st.avg[i] = update_running_average(RunningAverage{}, x1[i]);
  }
  switch (mode) {
    case ProtocolMode::UndirectedExact:
      st.y = x1;
      break;
    case ProtocolMode::DirectedPushSum:
      st.y = x1;
      st.mu = x1;  // convention: mu(1) = y(1), so h(1) = x(1)
      st.v.assign(st.n, 1.0);
      break;
    case ProtocolMode::QuantizedUndirected: {
      if (!q) {
        throw std::invalid_argument(
            "quantized mode needs a quantization config");
      }
      st.yq.resize(st.n);
      st.ztilde.resize(st.n);
      st.y.resize(st.n);
      for (int i = 0; i < st.n; ++i) {
        st.ztilde[i] = quantized_average_rat(st.avg[i].sum, 1, *q);
        st.yq[i] = st.ztilde[i];  // makes 1'y(1) = 1'ztilde(1) hold exactly
        st.y[i] = to_double(st.yq[i]);
      }
      break;
    }
  }
  return st;
}

NetworkState step_undirected(const NetworkState& state, const WeightMatrix& w,
                             const std::vector<double>& x_next) {
  if (state.mode != ProtocolMode::UndirectedExact) {
    throw std::invalid_argument("step_undirected needs exact undirected mode");
  }
  const int n = state.n;
  if (w.n() != n) throw std::invalid_argument("weight matrix dimension mismatch");
  require_n(x_next.size(), n, "step_undirected");

  NetworkState next = state;
  next.t = state.t + 1;
  std::vector<double> dz(n);
  for (int i = 0; i < n; ++i) {
    next.avg[i] = update_running_average(state.avg[i], x_next[i]);
    dz[i] = next.avg[i].z - state.avg[i].z;
  }
  for (int i = 0; i < n; ++i) {
    double mixed = 0.0;
    for (int j = 0; j < n; ++j) mixed += w.at(i, j) * state.y[j];
    next.y[i] = mixed + dz[i];
  }
  return next;
}

NetworkState step_push_sum(const NetworkState& state, const Graph& g,
                           const std::vector<double>& x_next) {
  if (state.mode != ProtocolMode::DirectedPushSum) {
    throw std::invalid_argument("step_push_sum needs push-sum mode");
  }
  if (!g.is_directed()) {
    throw std::invalid_argument("push-sum needs a directed graph");
  }
  const int n = state.n;
  if (g.n() != n) throw std::invalid_argument("graph dimension mismatch");
  require_n(x_next.size(), n, "step_push_sum");

  NetworkState next = state;
  next.t = state.t + 1;
  std::vector<double> dz(n);
  for (int i = 0; i < n; ++i) {
    next.avg[i] = update_running_average(state.avg[i], x_next[i]);
    dz[i] = next.avg[i].z - state.avg[i].z;
  }

  // Each agent j keeps one (1 + o_j)-th share and transmits one to every
  // out-neighbor; receiving from in-neighbors keeps the transfer
  // column-stochastic, which is what conserves the totals.
  std::vector<double> y_share(n), v_share(n);
  for (int j = 0; j < n; ++j) {
    const double l = 1.0 / (1.0 + g.out_degree(j));
    y_share[j] = state.y[j] * l;
    v_share[j] = state.v[j] * l;
  }
  for (int i = 0; i < n; ++i) {
    double mu = y_share[i];
    double v = v_share[i];
    for (int j : g.in_neighbors(i)) {
      mu += y_share[j];
      v += v_share[j];
    }
    next.mu[i] = mu;
    next.v[i] = v;
    next.y[i] = mu + dz[i];
  }
  return next;
}

NetworkState step_quantized(const NetworkState& state, const WeightMatrix& w,
                            const QuantizationConfig& q,
                            const std::vector<double>& x_next) {
  if (state.mode != ProtocolMode::QuantizedUndirected) {
    throw std::invalid_argument("step_quantized needs quantized mode");
  }
  if (w.form() != WeightForm::Rational) {
    throw std::invalid_argument(
        "quantized update requires a rational-form weight matrix");
  }
  const int n = state.n;
  if (w.n() != n) throw std::invalid_argument("weight matrix dimension mismatch");
  require_n(x_next.size(), n, "step_quantized");

  NetworkState next = state;
  next.t = state.t + 1;
  std::vector<Rat> dz(n);
  for (int i = 0; i < n; ++i) {
    next.avg[i] = update_running_average(state.avg[i], x_next[i]);
    next.ztilde[i] =
        quantized_average_rat(next.avg[i].sum, next.avg[i].count, q);
    dz[i] = next.ztilde[i] - state.ztilde[i];
  }

  std::vector<Rat> qy(n);
  for (int i = 0; i < n; ++i) qy[i] = Rat(quantize_rat(state.yq[i], q.kind));
  for (int i = 0; i < n; ++i) {
    Rat mixed(0);
    for (int j = 0; j < n; ++j) {
      const Rat& wij = w.rat_at(i, j);
      if (wij != 0) mixed += wij * qy[j];
    }
    next.yq[i] = mixed + state.yq[i] - qy[i] + dz[i];
    next.y[i] = to_double(next.yq[i]);
  }
  return next;
}

std::vector<double> ratio_estimates(const NetworkState& state) {
  if (state.mode != ProtocolMode::DirectedPushSum) {
    throw std::invalid_argument("ratio estimates exist only in push-sum mode");
  }
  std::vector<double> h(state.n);
  for (int i = 0; i < state.n; ++i) {
    if (!(state.v[i] > 0.0)) {
      throw InvariantViolation("push-sum mass v_" + std::to_string(i) +
                               " is not positive at t=" +
                               std::to_string(state.t));
    }
    h[i] = state.mu[i] / state.v[i];
  }
  return h;
}

double quantize(double x, QuantizerKind kind) {
  switch (kind) {
    case QuantizerKind::Truncation:
      return std::floor(x);
    case QuantizerKind::Ceiling:
      return -std::floor(-x);
    case QuantizerKind::Rounding:
      return std::floor(x + 0.5);  // ties up, matching Q_t(x + 1/2)
  }
  throw std::logic_error("unreachable quantizer kind");
}

std::vector<double> quantize(const std::vector<double>& values,
                             QuantizerKind kind) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = quantize(values[i], kind);
  }
  return out;
}

BigInt quantize_rat(const Rat& x, QuantizerKind kind) {
  switch (kind) {
    case QuantizerKind::Truncation:
      return floor_rat(x);
    case QuantizerKind::Ceiling:
      return -floor_rat(-x);
    case QuantizerKind::Rounding:
      return floor_rat(x + Rat(1, 2));
  }
  throw std::logic_error("unreachable quantizer kind");
}

namespace {

// Conservation checks applied after init and after every step.
void check_invariants(const NetworkState& st, double* v_min_out) {
  const double mass_y = st.mass_y();
  const double mass_z = st.mass_z();
  double max_abs_y = 0.0;
  for (double yi : st.y) max_abs_y = std::max(max_abs_y, std::abs(yi));
  const double tol = 1e-9 * st.n * std::max(1.0, max_abs_y);
  if (st.mode == ProtocolMode::QuantizedUndirected) {
    // The rational state makes the identity exact; compare exactly.
    Rat diff(0);
    for (const Rat& v : st.yq) diff += v;
    for (const Rat& v : st.ztilde) diff -= v;
    if (diff != 0) {
      throw InvariantViolation("quantized mass identity broken at t=" +
                               std::to_string(st.t));
    }
  } else if (std::abs(mass_y - mass_z) > tol) {
    throw InvariantViolation("mass identity |1'y - 1'z| = " +
                             std::to_string(std::abs(mass_y - mass_z)) +
                             " exceeds tolerance at t=" + std::to_string(st.t));
  }
  if (st.mode == ProtocolMode::DirectedPushSum) {
    const double mass_v = st.mass_v();
    if (std::abs(mass_v - st.n) > 1e-9) {
      throw InvariantViolation("push-sum mass 1'v = " + std::to_string(mass_v) +
                               " drifted from n at t=" + std::to_string(st.t));
    }
    double v_min = st.v[0];
    for (double vi : st.v) v_min = std::min(v_min, vi);
    if (!(v_min > 0.0)) {
      throw InvariantViolation("push-sum mass floor is not positive at t=" +
                               std::to_string(st.t));
    }
    if (v_min_out) *v_min_out = v_min;
  }
}

StepRecord record_step(const NetworkState& st, bool ztilde_changed,
                       double v_min) {
  StepRecord rec;
  rec.t = st.t;
  rec.estimate = st.mode == ProtocolMode::DirectedPushSum
                     ? ratio_estimates(st)
                     : st.y;
  rec.mass_y = st.mass_y();
  rec.mass_z = st.mass_z();
  rec.v_min = v_min;
  rec.ztilde_changed = ztilde_changed;
  return rec;
}

}  // namespace

Trace run(const RunSpec& spec) {
  if (spec.horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  const int n = spec.schedule.n();
  require_n(spec.models.size(), n, "run");
  if (spec.mode == ProtocolMode::DirectedPushSum) {
    if (!spec.schedule.is_directed()) {
      throw std::invalid_argument("push-sum needs a directed schedule");
    }
  } else if (spec.schedule.is_directed()) {
    throw std::invalid_argument("undirected modes need an undirected schedule");
  }
  if (spec.mode == ProtocolMode::QuantizedUndirected && !spec.quant) {
    throw std::invalid_argument("quantized mode needs a quantization config");
  }

  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = draw_sample(spec.models[i], i, 1, spec.seed);
  }
  NetworkState st = init_state(x, spec.mode, spec.quant);

  Trace trace;
  double v_min = spec.mode == ProtocolMode::DirectedPushSum ? 1.0 : 0.0;
  check_invariants(st, &v_min);
  trace.v_min_overall = v_min;
  trace.steps.reserve(static_cast<std::size_t>(spec.horizon));
  trace.steps.push_back(record_step(st, false, v_min));

  for (long t = 1; t < spec.horizon; ++t) {
    for (int i = 0; i < n; ++i) {
      x[i] = draw_sample(spec.models[i], i, t + 1, spec.seed);
    }
    NetworkState next;
    switch (spec.mode) {
      case ProtocolMode::UndirectedExact: {
        const Graph g = spec.schedule.at(t);
        switch (spec.weights.kind) {
          case WeightPolicy::Kind::MetropolisPerStep:
            next = step_undirected(st, metropolis(g), x);
            break;
          case WeightPolicy::Kind::Fixed:
            next = step_undirected(st, *spec.weights.base, x);
            break;
          case WeightPolicy::Kind::MaskedFixed:
            next = step_undirected(st, mask_to_active(*spec.weights.base, g), x);
            break;
          case WeightPolicy::Kind::None:
            throw std::invalid_argument("undirected run needs a weight policy");
        }
        break;
      }
      case ProtocolMode::DirectedPushSum:
        next = step_push_sum(st, spec.schedule.at(t), x);
        break;
      case ProtocolMode::QuantizedUndirected: {
        const WeightMatrix* w = nullptr;
        WeightMatrix masked = WeightMatrix::rational(1, {Rat(1)});
        switch (spec.weights.kind) {
          case WeightPolicy::Kind::Fixed:
            w = &*spec.weights.base;
            break;
          case WeightPolicy::Kind::MaskedFixed:
            masked = mask_to_active(*spec.weights.base, spec.schedule.at(t));
            w = &masked;
            break;
          default:
            throw std::invalid_argument(
                "quantized run needs a fixed or masked weight policy");
        }
        next = step_quantized(st, *w, *spec.quant, x);
        break;
      }
    }
    const bool changed = spec.mode == ProtocolMode::QuantizedUndirected &&
                         next.ztilde != st.ztilde;
    st = std::move(next);
    check_invariants(st, &v_min);
    if (spec.mode == ProtocolMode::DirectedPushSum) {
      trace.v_min_overall = std::min(trace.v_min_overall, v_min);
    }
    trace.steps.push_back(record_step(st, changed, v_min));
  }
  trace.final_state = std::move(st);
  return trace;
}

}  // namespace netavg
