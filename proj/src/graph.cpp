#include "kt/graph.hpp"

#include <algorithm>
#include <string>

namespace kt {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g = g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range [0," + std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

Graph Graph::add_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop requested");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
  Graph g = *this;
  auto& a = g.adj_[static_cast<std::size_t>(u)];
  a.insert(std::lower_bound(a.begin(), a.end(), v), v);
  auto& b = g.adj_[static_cast<std::size_t>(v)];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++g.m_;
  return g;
}

Graph Graph::remove_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v)) throw std::invalid_argument("edge absent");
  Graph g = *this;
  auto& a = g.adj_[static_cast<std::size_t>(u)];
  a.erase(std::lower_bound(a.begin(), a.end(), v));
  auto& b = g.adj_[static_cast<std::size_t>(v)];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --g.m_;
  return g;
}

Graph Graph::add_vertex(std::span<const int> clique) const {
  Graph g = *this;
  g.adj_.emplace_back();
  ++g.n_;
  for (int v : clique) g = g.add_edge(n_, v);
  return g;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool is_clique(const Graph& g, std::span<const int> vertices) {
  for (int v : vertices) g.check_vertex(v);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.has_edge(vertices[i], vertices[j])) return false;
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("empty graph");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted) g.check_vertex(v);
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    index[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  Graph h(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (int w : g.neighbors(sorted[i])) {
      int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) h = h.add_edge(static_cast<int>(i), j);
    }
  return h;
}

namespace {

void clique_backtrack(const Graph& g, int k, std::vector<int>& partial,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(partial.size()) == k) {
    out.push_back(partial);
    return;
  }
  int start = partial.empty() ? 0 : partial.back() + 1;
  for (int v = start; v < g.order(); ++v) {
    bool ok = true;
    for (int u : partial)
      if (!g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (ok) {
      partial.push_back(v);
      clique_backtrack(g, k, partial, out);
      partial.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<int>> k_cliques(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> partial;
  clique_backtrack(g, k, partial, out);
  return out;
}

}  // namespace kt
