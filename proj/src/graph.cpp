#include "netavg/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace netavg {

Graph::Graph(int n, bool directed, std::vector<std::pair<int, int>> edges)
    : n_(n), directed_(directed) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::set<std::pair<int, int>> canon;
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    if (!directed_ && i > j) std::swap(i, j);
    canon.emplace(i, j);
  }
  edges_.assign(canon.begin(), canon.end());

  adj_.resize(n_);
  if (directed_) in_adj_.resize(n_);
  for (auto [i, j] : edges_) {
    adj_[i].push_back(j);
    if (directed_) {
      in_adj_[j].push_back(i);
    } else {
      adj_[j].push_back(i);
    }
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  for (auto& a : in_adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int i, int j) const {
  if (!directed_ && i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(),
                            std::make_pair(i, j));
}

const std::vector<int>& Graph::neighbors(int i) const {
  if (directed_) {
    throw std::invalid_argument("neighbors() is for undirected graphs");
  }
  return adj_.at(i);
}

const std::vector<int>& Graph::out_neighbors(int i) const {
  if (!directed_) {
    throw std::invalid_argument("out_neighbors() is for directed graphs");
  }
  return adj_.at(i);
}

const std::vector<int>& Graph::in_neighbors(int i) const {
  if (!directed_) {
    throw std::invalid_argument("in_neighbors() is for directed graphs");
  }
  return in_adj_.at(i);
}

int Graph::degree(int i) const {
  return static_cast<int>(neighbors(i).size());
}

int Graph::out_degree(int i) const {
  return static_cast<int>(out_neighbors(i).size());
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  out << "n " << n_ << ' ' << (directed_ ? "directed" : "undirected") << '\n';
  for (auto [i, j] : edges_) out << i << ' ' << j << '\n';
  return out.str();
}

Graph Graph::from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string tag, kind;
  int n = 0;
  if (!(in >> tag >> n >> kind) || tag != "n" ||
      (kind != "directed" && kind != "undirected")) {
    throw std::invalid_argument("malformed edge-list header");
  }
  std::vector<std::pair<int, int>> edges;
  int i = 0, j = 0;
  while (in >> i >> j) edges.emplace_back(i, j);
  return Graph(n, kind == "directed", std::move(edges));
}

namespace {

// Iterative reachability along the given adjacency accessor.
template <typename Adj>
int count_reachable(int n, int start, Adj adj) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.is_directed()) {
    throw std::invalid_argument(
        "is_connected expects an undirected graph; use "
        "is_strongly_connected");
  }
  if (g.n() == 1) return true;
  return count_reachable(g.n(), 0, [&](int u) -> const std::vector<int>& {
           return g.neighbors(u);
         }) == g.n();
}

bool is_strongly_connected(const Graph& g) {
  if (!g.is_directed()) {
    throw std::invalid_argument(
        "is_strongly_connected expects a directed graph; use is_connected");
  }
  if (g.n() == 1) return true;
  const bool forward =
      count_reachable(g.n(), 0, [&](int u) -> const std::vector<int>& {
        return g.out_neighbors(u);
      }) == g.n();
  if (!forward) return false;
  return count_reachable(g.n(), 0, [&](int u) -> const std::vector<int>& {
           return g.in_neighbors(u);
         }) == g.n();
}

Graph union_graph(std::span<const Graph> graphs) {
  if (graphs.empty()) {
    throw std::invalid_argument("union of an empty graph sequence");
  }
  const int n = graphs.front().n();
  const bool directed = graphs.front().is_directed();
  std::vector<std::pair<int, int>> edges;
  for (const Graph& g : graphs) {
    if (g.n() != n || g.is_directed() != directed) {
      throw std::invalid_argument(
          "union requires matching vertex count and directedness");
    }
    edges.insert(edges.end(), g.edges().begin(), g.edges().end());
  }
  return Graph(n, directed, std::move(edges));
}

bool is_repeatedly_jointly_connected(std::span<const Graph> graphs, int r) {
  if (r < 1) throw std::invalid_argument("window length must be >= 1");
  if (graphs.empty() || graphs.size() % static_cast<std::size_t>(r) != 0) {
    throw std::invalid_argument(
        "sequence length must be a positive multiple of the window length");
  }
  for (std::size_t k = 0; k < graphs.size(); k += r) {
    const Graph u = union_graph(graphs.subspan(k, r));
    const bool ok = u.is_directed() ? is_strongly_connected(u) : is_connected(u);
    if (!ok) return false;
  }
  return true;
}

}  // namespace netavg
