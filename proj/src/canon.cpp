#include "kt/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace kt {

namespace {

// Packed upper-triangle bitstring; 16 vertices need at most 120 bits.
struct BitString {
  std::array<std::uint64_t, 2> words{0, 0};
  auto operator<=>(const BitString&) const = default;
  void set(int t) { words[static_cast<std::size_t>(t / 64)] |= 1ULL << (63 - t % 64); }
};

struct Searcher {
  int n;
  std::array<std::uint16_t, 16> adj{};  // adjacency row masks

  bool have_best = false;
  BitString best;
  std::vector<int> best_perm;                 // position -> vertex
  std::vector<std::array<int, 16>> automorphisms;
  std::vector<int> placed;                    // individualization sequence

  explicit Searcher(const Graph& g) : n(g.order()) {
    for (int v = 0; v < n; ++v)
      for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= std::uint16_t(1u << w);
  }

  // Color refinement: signature of v is (color, nibble histogram of neighbor
  // colors). New colors are dense ranks in signature order, so the result is
  // isomorphism-invariant.
  void refine(std::vector<int>& color) const {
    for (;;) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> sig(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        std::uint64_t hist = 0;
        std::uint16_t row = adj[static_cast<std::size_t>(v)];
        while (row) {
          int w = std::countr_zero(row);
          row &= static_cast<std::uint16_t>(row - 1);
          hist += 1ULL << (4 * color[static_cast<std::size_t>(w)]);
        }
        sig[static_cast<std::size_t>(v)] = {
            static_cast<std::uint64_t>(color[static_cast<std::size_t>(v)]), hist};
      }
      std::vector<std::pair<std::uint64_t, std::uint64_t>> uniq(sig);
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      bool changed = false;
      for (int v = 0; v < n; ++v) {
        int c = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(),
                                                  sig[static_cast<std::size_t>(v)]) -
                                 uniq.begin());
        if (c != color[static_cast<std::size_t>(v)]) changed = true;
        color[static_cast<std::size_t>(v)] = c;
      }
      if (!changed) return;
    }
  }

  int first_non_singleton(const std::vector<int>& color) const {
    std::array<int, 16> count{};
    for (int v = 0; v < n; ++v) ++count[static_cast<std::size_t>(color[v])];
    int best_c = -1;
    for (int v = 0; v < n; ++v) {
      int c = color[static_cast<std::size_t>(v)];
      if (count[static_cast<std::size_t>(c)] > 1 && (best_c < 0 || c < best_c)) best_c = c;
    }
    return best_c;
  }

  void leaf(const std::vector<int>& color) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(color[v])] = v;
    BitString bits;
    int t = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++t)
        if (adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] &
            (1u << perm[static_cast<std::size_t>(j)]))
          bits.set(t);
    if (!have_best || bits < best) {
      have_best = true;
      best = bits;
      best_perm = perm;
    } else if (bits == best && automorphisms.size() < 256) {
      std::array<int, 16> g{};
      for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(best_perm[static_cast<std::size_t>(i)])] =
            perm[static_cast<std::size_t>(i)];
      bool identity = true;
      for (int v = 0; v < n; ++v)
        if (g[static_cast<std::size_t>(v)] != v) identity = false;
      if (!identity) automorphisms.push_back(g);
    }
  }

  // Orbits of the candidates under discovered automorphisms that fix the
  // current placement prefix pointwise; one representative per orbit suffices.
  std::array<int, 16> prefix_orbits() const {
    std::array<int, 16> parent{};
    std::iota(parent.begin(), parent.begin() + n, 0);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
      }
      return v;
    };
    for (const auto& g : automorphisms) {
      bool fixes = true;
      for (int p : placed)
        if (g[static_cast<std::size_t>(p)] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v);
        int b = find(g[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n; ++v) find(v);
    std::array<int, 16> root{};
    for (int v = 0; v < n; ++v) root[static_cast<std::size_t>(v)] = find(v);
    return root;
  }

  void search(std::vector<int> color) {
    refine(color);
    int cell = first_non_singleton(color);
    if (cell < 0) {
      leaf(color);
      return;
    }
    std::vector<char> tried(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] != cell) continue;
      auto root = prefix_orbits();
      if (tried[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])]) continue;
      tried[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])] = 1;
      std::vector<int> next(color);
      for (int w = 0; w < n; ++w) {
        if (next[static_cast<std::size_t>(w)] > cell ||
            (next[static_cast<std::size_t>(w)] == cell && w != v))
          ++next[static_cast<std::size_t>(w)];
      }
      placed.push_back(v);
      search(std::move(next));
      placed.pop_back();
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  int n = g.order();
  if (n > kCanonMaxOrder) throw std::invalid_argument("graph too large for canonical labeling");
  CanonicalForm out;
  if (n == 0) {
    out.label.bytes = {0};
    out.form = Graph(0);
    return out;
  }
  Searcher s(g);
  s.search(std::vector<int>(static_cast<std::size_t>(n), 0));
  out.permutation = s.best_perm;
  int t = 0;
  int total_bits = n * (n - 1) / 2;
  out.label.bytes.assign(1 + static_cast<std::size_t>((total_bits + 7) / 8), 0);
  out.label.bytes[0] = static_cast<std::uint8_t>(n);
  Graph form(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++t)
      if (g.has_edge(out.permutation[static_cast<std::size_t>(i)],
                     out.permutation[static_cast<std::size_t>(j)])) {
        out.label.bytes[1 + static_cast<std::size_t>(t / 8)] |=
            static_cast<std::uint8_t>(0x80u >> (t % 8));
        form = form.add_edge(i, j);
      }
  out.form = form;
  return out;
}

CanonicalLabel canonical_label(const Graph& g) { return canonical_form(g).label; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_label(a) == canonical_label(b);
}

}  // namespace kt
