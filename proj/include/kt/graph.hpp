#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace kt {

/// Simple undirected graph on dense 0-based vertices. Immutable after
/// construction: edits return new values, so graphs can be shared freely
/// between threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const { return m_; }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  Graph add_edge(int u, int v) const;
  Graph remove_edge(int u, int v) const;
  /// New vertex with index order() joined to exactly `clique`.
  Graph add_vertex(std::span<const int> clique) const;

  std::vector<std::pair<int, int>> edge_list() const;  // u < v, lexicographic

  bool operator==(const Graph&) const = default;

  void check_vertex(int v) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

bool is_clique(const Graph& g, std::span<const int> vertices);
bool is_connected(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// All k-cliques as sorted vertex lists, in lexicographic order.
std::vector<std::vector<int>> k_cliques(const Graph& g, int k);

}  // namespace kt
