#pragma once

#include <cstdint>
#include <vector>

#include "netavg/graph.hpp"

namespace netavg {

// Per-step view of the neighbor graph. Sampling is a pure function of
// (schedule, seed, t): querying the same step twice gives the same graph.
class TopologySchedule {
 public:
  enum class Mode { Static, DynamicProbabilistic, Explicit };

  static TopologySchedule fixed(Graph g);
  // Each union edge appears independently with probability p at every step.
  static TopologySchedule dynamic_probabilistic(Graph union_g, double p,
                                                std::uint64_t seed);
  static TopologySchedule explicit_sequence(std::vector<Graph> gs);

  Mode mode() const { return mode_; }
  int n() const { return union_.n(); }
  bool is_directed() const { return union_.is_directed(); }
  const Graph& union_graph() const { return union_; }
  double activation_probability() const { return p_; }
  std::uint64_t seed() const { return seed_; }

  Graph at(long t) const;  // t >= 1

  // Same schedule with a different activation-stream seed (per-repetition).
  TopologySchedule with_seed(std::uint64_t seed) const;

 private:
  TopologySchedule(Mode mode, Graph union_g, double p, std::uint64_t seed,
                   std::vector<Graph> sequence);

  Mode mode_;
  Graph union_;
  double p_ = 1.0;
  std::uint64_t seed_ = 0;
  std::vector<Graph> sequence_;
};

inline Graph sample_graph(const TopologySchedule& schedule, long t) {
  return schedule.at(t);
}

// Random geometric graph: n points i.i.d. uniform in the unit square,
// undirected edge where the Euclidean distance is <= radius.
Graph make_rgg(int n, double radius, std::uint64_t seed);

// Retries sub-seeds derived from `seed` until the sample is connected.
Graph make_connected_rgg(int n, double radius, std::uint64_t seed);

// Directed variant: start from a connected RGG with both directions of every
// edge, delete each direction independently with probability deletion_prob,
// and reject samples that are not strongly connected.
Graph make_directed_rgg(int n, double radius, double deletion_prob,
                        std::uint64_t seed);

// sqrt(10 * ln(n) / n), the connectivity radius used by the experiment
// presets.
double default_rgg_radius(int n);

}  // namespace netavg
