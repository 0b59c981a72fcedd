#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "kt/graph.hpp"

namespace kt {

inline constexpr int kCanonMaxOrder = 16;

/// Isomorphism-invariant encoding: byte 0 is the order, the rest packs the
/// upper triangle of the canonically relabeled adjacency matrix MSB-first.
/// Equal labels <=> isomorphic graphs (for order <= kCanonMaxOrder).
struct CanonicalLabel {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const CanonicalLabel&) const = default;
};

struct CanonicalForm {
  CanonicalLabel label;
  std::vector<int> permutation;  // position -> original vertex
  Graph form;                    // the relabeled representative
};

CanonicalForm canonical_form(const Graph& g);
CanonicalLabel canonical_label(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace kt
