#include "netavg/topology.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "netavg/rng.hpp"

namespace netavg {

TopologySchedule::TopologySchedule(Mode mode, Graph union_g, double p,
                                   std::uint64_t seed,
                                   std::vector<Graph> sequence)
    : mode_(mode),
      union_(std::move(union_g)),
      p_(p),
      seed_(seed),
      sequence_(std::move(sequence)) {}

TopologySchedule TopologySchedule::fixed(Graph g) {
  return TopologySchedule(Mode::Static, std::move(g), 1.0, 0, {});
}

TopologySchedule TopologySchedule::dynamic_probabilistic(Graph union_g,
                                                         double p,
                                                         std::uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("activation probability must be in (0, 1]");
  }
  const bool ok = union_g.is_directed() ? is_strongly_connected(union_g)
                                        : is_connected(union_g);
  if (!ok) {
    throw std::invalid_argument(
        "dynamic schedule requires a connected (strongly connected) union "
        "graph");
  }
  return TopologySchedule(Mode::DynamicProbabilistic, std::move(union_g), p,
                          seed, {});
}

TopologySchedule TopologySchedule::explicit_sequence(std::vector<Graph> gs) {
  if (gs.empty()) {
    throw std::invalid_argument("explicit schedule needs at least one graph");
  }
  Graph u = union_graph(gs);
  return TopologySchedule(Mode::Explicit, std::move(u), 1.0, 0,
                          std::move(gs));
}

Graph TopologySchedule::at(long t) const {
  if (t < 1) throw std::invalid_argument("step index starts at 1");
  switch (mode_) {
    case Mode::Static:
      return union_;
    case Mode::Explicit:
      if (static_cast<std::size_t>(t) > sequence_.size()) {
        throw std::out_of_range("explicit schedule index out of range");
      }
      return sequence_[static_cast<std::size_t>(t - 1)];
    case Mode::DynamicProbabilistic: {
      std::vector<std::pair<int, int>> active;
      const auto& edges = union_.edges();
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const double u = rng::uniform01(rng::mix(
            seed_, rng::kEdgeActivation, static_cast<std::uint64_t>(t), e));
        if (u < p_) active.push_back(edges[e]);
      }
      return Graph(union_.n(), union_.is_directed(), std::move(active));
    }
  }
  throw std::logic_error("unreachable schedule mode");
}

TopologySchedule TopologySchedule::with_seed(std::uint64_t seed) const {
  TopologySchedule copy = *this;
  copy.seed_ = seed;
  return copy;
}

Graph make_rgg(int n, double radius, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("an RGG needs at least two vertices");
  if (!(radius >= 0.0)) {
    throw std::invalid_argument("radius must be nonnegative");
  }
  std::vector<double> px(n), py(n);
  for (int i = 0; i < n; ++i) {
    px[i] = rng::uniform01(
        rng::mix(seed, rng::kRggPoint, static_cast<std::uint64_t>(i), 0));
    py[i] = rng::uniform01(
        rng::mix(seed, rng::kRggPoint, static_cast<std::uint64_t>(i), 1));
  }
  const double r2 = radius * radius;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = px[i] - px[j];
      const double dy = py[i] - py[j];
      if (dx * dx + dy * dy <= r2) edges.emplace_back(i, j);
    }
  }
  return Graph(n, false, std::move(edges));
}

namespace {
constexpr int kMaxGraphAttempts = 10000;
}

Graph make_connected_rgg(int n, double radius, std::uint64_t seed) {
  for (int attempt = 0; attempt < kMaxGraphAttempts; ++attempt) {
    Graph g = make_rgg(n, radius, rng::mix(seed, rng::kRggPoint, attempt));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error(
      "no connected RGG found; radius is too small for this n");
}

Graph make_directed_rgg(int n, double radius, double deletion_prob,
                        std::uint64_t seed) {
  if (!(deletion_prob >= 0.0 && deletion_prob < 1.0)) {
    throw std::invalid_argument("deletion probability must be in [0, 1)");
  }
  const Graph base = make_connected_rgg(n, radius, seed);
  for (int attempt = 0; attempt < kMaxGraphAttempts; ++attempt) {
    std::vector<std::pair<int, int>> arcs;
    const auto& edges = base.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [i, j] = edges[e];
      if (rng::uniform01(rng::mix(seed, rng::kEdgeDeletion,
                                  attempt * 2ull, e)) >= deletion_prob) {
        arcs.emplace_back(i, j);
      }
      if (rng::uniform01(rng::mix(seed, rng::kEdgeDeletion,
                                  attempt * 2ull + 1, e)) >= deletion_prob) {
        arcs.emplace_back(j, i);
      }
    }
    Graph candidate(n, true, std::move(arcs));
    if (is_strongly_connected(candidate)) return candidate;
  }
  throw std::runtime_error(
      "no strongly connected directed RGG found; lower the deletion "
      "probability");
}

double default_rgg_radius(int n) {
  if (n < 2) throw std::invalid_argument("radius formula needs n >= 2");
  return std::sqrt(10.0 * std::log(static_cast<double>(n)) / n);
}

}  // namespace netavg
