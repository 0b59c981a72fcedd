#pragma once

#include <string>

#include "kt/graph.hpp"

namespace kt {

/// Compact JSON interchange form: {"n": <int>, "edges": [[u,v], ...]} with
/// u < v and edges sorted lexicographically.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

/// Standard graph6 encoding (printable, 63-offset 6-bit groups), n <= 62.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

}  // namespace kt
