#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netavg {

// Communication topology over agents 0..n-1, immutable once built.
// Undirected edges are stored once as (min, max); for a directed graph the
// edge (i, j) means agent i can send to agent j.
class Graph {
 public:
  Graph(int n, bool directed, std::vector<std::pair<int, int>> edges);

  static Graph undirected(int n, std::vector<std::pair<int, int>> edges) {
    return Graph(n, false, std::move(edges));
  }
  static Graph directed(int n, std::vector<std::pair<int, int>> edges) {
    return Graph(n, true, std::move(edges));
  }

  int n() const { return n_; }
  bool is_directed() const { return directed_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int i, int j) const;

  // Undirected neighbor set (symmetric).
  const std::vector<int>& neighbors(int i) const;
  const std::vector<int>& out_neighbors(int i) const;
  const std::vector<int>& in_neighbors(int i) const;
  int degree(int i) const;
  int out_degree(int i) const;

  // Edge-list text form: "n <count> <directed|undirected>" then one
  // "i j" line per edge, 0-based, ascending.
  std::string to_edge_list() const;
  static Graph from_edge_list(const std::string& text);

 private:
  int n_ = 0;
  bool directed_ = false;
  std::vector<std::pair<int, int>> edges_;       // canonical, sorted, unique
  std::vector<std::vector<int>> adj_;            // neighbors / out-neighbors
  std::vector<std::vector<int>> in_adj_;         // directed only
};

bool is_connected(const Graph& g);
bool is_strongly_connected(const Graph& g);
Graph union_graph(std::span<const Graph> graphs);

// True iff every length-r window of the sequence has a connected
// (strongly connected, when directed) union.
bool is_repeatedly_jointly_connected(std::span<const Graph> graphs, int r);

}  // namespace netavg
