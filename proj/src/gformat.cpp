#include "kt/gformat.hpp"

#include <json.hpp>

namespace kt {

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
  j["edges"] = edges;
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("graph json: missing integer field \"n\"");
  Graph g(j["n"].get<int>());
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("graph json: edge must be a pair");
      g = g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
  }
  return g;
}

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6 encoder supports n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bit = 0;
  char cur = 0;
  // column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      cur = static_cast<char>(cur << 1);
      if (g.has_edge(i, j)) cur = static_cast<char>(cur | 1);
      if (++bit == 6) {
        out.push_back(static_cast<char>(cur + 63));
        bit = 0;
        cur = 0;
      }
    }
  }
  if (bit > 0) out.push_back(static_cast<char>((cur << (6 - bit)) + 63));
  return out;
}

Graph graph6_decode(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  int n = static_cast<int>(static_cast<unsigned char>(text[0])) - 63;
  if (n < 0 || n > 62) throw std::invalid_argument("graph6: unsupported order byte");
  std::size_t need = static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6);
  if (text.size() != 1 + need) throw std::invalid_argument("graph6: wrong length");
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      unsigned char c = static_cast<unsigned char>(text[1 + static_cast<std::size_t>(bit / 6)]);
      if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
      if ((c - 63) & (0x20 >> (bit % 6))) g = g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace kt
