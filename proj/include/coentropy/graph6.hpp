#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coentropy/graph.hpp"

namespace coentropy {

// Short-form graph6 only (n <= 62): one size byte n+63, then the upper
// triangle x(i,j), i<j, in column order, packed six bits per byte plus 63.

inline constexpr int kGraph6MaxOrder = 62;

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw SizeLimit("graph6 short form supports n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw MalformedGraph6("empty graph6 line");
  for (char c : line) {
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw MalformedGraph6("byte outside 63..126 in graph6 line");
  }
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n > kGraph6MaxOrder) throw MalformedGraph6("long-form graph6 is not supported");
  if (n < 1) throw MalformedGraph6("graph6 line encodes zero vertices");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != bytes + 1)
    throw MalformedGraph6("graph6 line has length " + std::to_string(line.size()) +
                          ", expected " + std::to_string(bytes + 1));

  std::vector<Edge> edges;
  std::size_t k = 0;
  auto bit = [&](std::size_t idx) {
    int byte = static_cast<unsigned char>(line[1 + idx / 6]) - 63;
    return (byte >> (5 - idx % 6)) & 1;
  };
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bit(k)) edges.push_back({i, j});
  for (; k < bytes * 6; ++k)
    if (bit(k)) throw MalformedGraph6("nonzero padding bits in graph6 line");
  return Graph::from_zero_based(n, std::move(edges));
}

}  // namespace coentropy
