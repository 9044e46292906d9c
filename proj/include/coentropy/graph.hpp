#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <regex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coentropy/errors.hpp"

namespace coentropy {

/// Undirected edge between 0-based vertices, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with a sorted, duplicate-free
/// edge list. Immutable once built; vertices are rendered 1-based in all I/O.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
  }

  bool operator==(const Graph&) const = default;

  /// Builds from 0-based edges; normalizes orientation, sorts, deduplicates.
  static Graph from_zero_based(int n, std::vector<Edge> edges) {
    if (n < 1) throw OutOfRange("graph must have at least one vertex");
    for (auto& e : edges) {
      if (e.u == e.v) throw LoopEdge("loop at vertex " + std::to_string(e.u + 1));
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw OutOfRange("edge endpoint outside 1.." + std::to_string(n));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    return g;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Builds a graph from 1-based vertex pairs.
inline Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 1 || b < 1 || a > n || b > n)
      throw OutOfRange("edge {" + std::to_string(a) + "," + std::to_string(b) +
                       "} has an endpoint outside 1.." + std::to_string(n));
    if (a == b) throw LoopEdge("loop at vertex " + std::to_string(a));
    edges.push_back({a - 1, b - 1});
  }
  return Graph::from_zero_based(n, std::move(edges));
}

inline Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs) {
  return from_edge_list(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

inline std::vector<int> degrees(const Graph& g) {
  std::vector<int> deg(g.order(), 0);
  for (const auto& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

inline bool has_isolated_vertex(const Graph& g) {
  auto deg = degrees(g);
  return std::find(deg.begin(), deg.end(), 0) != deg.end();
}

struct ComponentStructure {
  int count = 0;                  // w(G)
  std::vector<int> component_of;  // vertex -> component index 0..count-1
  int isolated_count = 0;
};

inline ComponentStructure components(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  ComponentStructure cs;
  cs.component_of.assign(n, -1);
  std::vector<int> label(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (label[r] < 0) label[r] = cs.count++;
    cs.component_of[v] = label[r];
  }
  for (int d : degrees(g))
    if (d == 0) ++cs.isolated_count;
  return cs;
}

/// Parses either `n; {u,v} {u,v} ...` or the brace-list notation
/// `{{u, v}, {u, v}, ...}`. Without a `n;` prefix the vertex count is taken
/// from `n_hint`, falling back to the largest label that appears.
inline Graph parse_edge_list(std::string_view text, std::optional<int> n_hint = std::nullopt) {
  std::string body(text);
  std::optional<int> n = n_hint;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    std::string head = body.substr(0, semi);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
    if (head.empty() || !std::all_of(head.begin(), head.end(), ::isdigit))
      throw MalformedEdgeList("bad vertex count before ';': '" + head + "'");
    n = std::stoi(head);
    body = body.substr(semi + 1);
  }

  static const std::regex pair_re(R"(\{\s*(-?\d+)\s*,\s*(-?\d+)\s*\})");
  std::vector<std::pair<int, int>> pairs;
  std::string rest;
  auto last = body.cbegin();
  for (std::sregex_iterator it(body.begin(), body.end(), pair_re), end; it != end; ++it) {
    rest.append(last, (*it)[0].first);
    last = (*it)[0].second;
    pairs.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]));
  }
  rest.append(last, body.cend());
  for (char c : rest)
    if (!(std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '{' || c == '}'))
      throw MalformedEdgeList(std::string("unexpected character '") + c + "' in edge list");

  if (!n) {
    int max_label = 0;
    for (auto [a, b] : pairs) max_label = std::max({max_label, a, b});
    if (max_label == 0) throw MalformedEdgeList("cannot infer vertex count from an empty edge list");
    n = max_label;
  }
  return from_edge_list(*n, pairs);
}

/// Renders `{{1, 2}, {1, 3}}` with 1-based labels.
inline std::string format_edge_list(const Graph& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) out += ", ";
    first = false;
    out += "{" + std::to_string(e.u + 1) + ", " + std::to_string(e.v + 1) + "}";
  }
  return out + "}";
}

/// Relabels vertex v as perm[v].
inline Graph permute(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph::from_zero_based(g.order(), std::move(edges));
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) edges.push_back({u, v});
  return Graph::from_zero_based(g.order(), std::move(edges));
}

}  // namespace coentropy
