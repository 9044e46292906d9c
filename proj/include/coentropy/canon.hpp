#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "coentropy/graph.hpp"

namespace coentropy {

inline constexpr int kCanonMaxOrder = 16;
inline constexpr int kEnumerateMaxOrder = 10;

/// Bit-row adjacency for n <= 16: bit v of rows[u] is set iff {u,v} in E.
struct Adjacency {
  int n = 0;
  std::array<std::uint16_t, kCanonMaxOrder> rows{};

  bool edge(int u, int v) const { return (rows[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(rows[v]); }
  int size() const {
    int s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
  }
  void add_edge(int u, int v) {
    rows[u] |= std::uint16_t(1U << v);
    rows[v] |= std::uint16_t(1U << u);
  }
};

inline Adjacency to_adjacency(const Graph& g) {
  if (g.order() > kCanonMaxOrder) throw SizeLimit("bit adjacency supports n <= 16");
  Adjacency a;
  a.n = g.order();
  for (const auto& e : g.edges()) a.add_edge(e.u, e.v);
  return a;
}

inline Graph to_graph(const Adjacency& a) {
  std::vector<Edge> edges;
  for (int u = 0; u < a.n; ++u)
    for (int v = u + 1; v < a.n; ++v)
      if (a.edge(u, v)) edges.push_back({u, v});
  return Graph::from_zero_based(a.n, std::move(edges));
}

inline bool is_connected(const Adjacency& a) {
  if (a.n <= 1) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= a.rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1U << a.n) - 1;
}

/// Upper-triangle adjacency bit string x(i,j), i<j, in column order (the
/// graph6 order), most significant bit first across two words. Comparison is
/// lexicographic on the bit string.
struct CanonicalForm {
  int n = 0;
  std::array<std::uint64_t, 2> words{};

  auto operator<=>(const CanonicalForm&) const = default;

  /// Packed single word, valid for n <= 11.
  std::uint64_t code() const { return words[0]; }
  int size() const { return std::popcount(words[0]) + std::popcount(words[1]); }

  std::string bytes() const {
    std::string b(1 + sizeof(words), '\0');
    b[0] = static_cast<char>(n);
    std::memcpy(b.data() + 1, words.data(), sizeof(words));
    return b;
  }
};

namespace detail {

inline constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

inline void set_bit(std::array<std::uint64_t, 2>& w, int k) { w[k / 64] |= std::uint64_t(1) << (63 - k % 64); }
inline bool get_bit(const std::array<std::uint64_t, 2>& w, int k) { return (w[k / 64] >> (63 - k % 64)) & 1U; }

using Labels = std::array<std::uint8_t, kCanonMaxOrder>;

/// Bit string of the graph relabeled so that position p holds vertex inv[p].
inline std::array<std::uint64_t, 2> relabeled_bits(const Adjacency& g, const Labels& inv) {
  std::array<std::uint64_t, 2> w{};
  int k = 0;
  for (int j = 1; j < g.n; ++j) {
    const std::uint16_t row = g.rows[inv[j]];
    for (int i = 0; i < j; ++i, ++k)
      if ((row >> inv[i]) & 1U) set_bit(w, k);
  }
  return w;
}

/// Ordered partition as a color per vertex; colors are cell indices 0..cells-1.
struct Coloring {
  Labels color{};
  int cells = 1;
};

/// 1-dimensional Weisfeiler-Leman refinement to the coarsest equitable
/// ordered partition refining `p`. The result depends only on the colored
/// graph, not on vertex names.
inline void refine(const Adjacency& g, Coloring& p) {
  const int n = g.n;
  std::array<std::array<std::uint8_t, kCanonMaxOrder + 1>, kCanonMaxOrder> sig;
  Labels order;
  while (true) {
    std::array<std::uint16_t, kCanonMaxOrder> mask{};
    for (int v = 0; v < n; ++v) mask[p.color[v]] |= std::uint16_t(1U << v);
    const int width = p.cells + 1;
    for (int v = 0; v < n; ++v) {
      sig[v][0] = p.color[v];
      for (int c = 0; c < p.cells; ++c) sig[v][c + 1] = std::uint8_t(std::popcount(std::uint16_t(g.rows[v] & mask[c])));
      order[v] = std::uint8_t(v);
    }
    auto less = [&](int a, int b) { return std::memcmp(sig[a].data(), sig[b].data(), width) < 0; };
    for (int i = 1; i < n; ++i) {
      std::uint8_t x = order[i];
      int j = i;
      for (; j > 0 && less(x, order[j - 1]); --j) order[j] = order[j - 1];
      order[j] = x;
    }
    int cells = 0;
    Labels next{};
    for (int i = 0; i < n; ++i) {
      if (i > 0 && less(order[i - 1], order[i])) ++cells;
      next[order[i]] = std::uint8_t(cells);
    }
    ++cells;
    const bool stable = cells == p.cells;
    p.color = next;
    p.cells = cells;
    if (stable) return;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Adjacency& g) : g_(g) {}

  void run() {
    Coloring c;
    c.cells = 1;
    Labels prefix{};
    descend(c, prefix, 0);
  }

  const std::array<std::uint64_t, 2>& best() const { return best_; }
  const Labels& best_inverse() const { return best_inv_; }

 private:
  static constexpr std::size_t kMaxStoredAutomorphisms = 64;

  void descend(Coloring c, Labels& prefix, int depth) {
    refine(g_, c);
    const int n = g_.n;
    if (c.cells == n) {
      Labels inv{};
      for (int v = 0; v < n; ++v) inv[c.color[v]] = std::uint8_t(v);
      leaf(inv);
      return;
    }
    // Target: first smallest non-singleton cell.
    std::array<int, kCanonMaxOrder> cell_size{};
    for (int v = 0; v < n; ++v) ++cell_size[c.color[v]];
    int target = -1;
    for (int k = 0; k < c.cells; ++k)
      if (cell_size[k] > 1 && (target < 0 || cell_size[k] < cell_size[target])) target = k;

    std::uint16_t explored = 0;
    for (int v = 0; v < n; ++v) {
      if (c.color[v] != target) continue;
      if (pruned(v, explored, prefix, depth)) continue;
      explored |= std::uint16_t(1U << v);
      Coloring child = c;
      for (int w = 0; w < n; ++w)
        if (w != v && child.color[w] >= target) ++child.color[w];
      ++child.cells;
      prefix[depth] = std::uint8_t(v);
      descend(child, prefix, depth + 1);
    }
  }

  bool pruned(int v, std::uint16_t explored, const Labels& prefix, int depth) const {
    // Exchanging twins fixes every other vertex, so it is an automorphism of
    // the individualized graph.
    for (std::uint16_t e = explored; e; e &= e - 1) {
      int u = std::countr_zero(e);
      std::uint16_t ru = g_.rows[u] & std::uint16_t(~(1U << v));
      std::uint16_t rv = g_.rows[v] & std::uint16_t(~(1U << u));
      if (ru == rv) return true;
    }
    if (automorphisms_.empty() || explored == 0) return false;
    // Orbits of the stored automorphisms that fix the prefix pointwise.
    Labels parent;
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : automorphisms_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = a[prefix[d]] == prefix[d];
      if (!fixes) continue;
      for (int x = 0; x < g_.n; ++x) {
        int r1 = find(x), r2 = find(a[x]);
        if (r1 != r2) parent[std::max(r1, r2)] = std::uint8_t(std::min(r1, r2));
      }
    }
    for (std::uint16_t e = explored; e; e &= e - 1)
      if (find(std::countr_zero(e)) == find(v)) return true;
    return false;
  }

  void leaf(const Labels& inv) {
    auto bits = relabeled_bits(g_, inv);
    if (!have_best_ || bits < best_) {
      have_best_ = true;
      best_ = bits;
      best_inv_ = inv;
      return;
    }
    if (bits == best_ && automorphisms_.size() < kMaxStoredAutomorphisms) {
      Labels a{};
      for (int p = 0; p < g_.n; ++p) a[inv[p]] = best_inv_[p];
      automorphisms_.push_back(a);
    }
  }

  const Adjacency& g_;
  bool have_best_ = false;
  std::array<std::uint64_t, 2> best_{};
  Labels best_inv_{};
  std::vector<Labels> automorphisms_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Adjacency& a) {
  detail::CanonicalSearch search(a);
  search.run();
  return CanonicalForm{a.n, search.best()};
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_form(to_adjacency(g)); }

/// Canonical relabeling: vertex v of g becomes labeling[v] in the canonical graph.
inline std::vector<int> canonical_labeling(const Graph& g) {
  Adjacency a = to_adjacency(g);
  detail::CanonicalSearch search(a);
  search.run();
  std::vector<int> lab(g.order());
  for (int p = 0; p < g.order(); ++p) lab[search.best_inverse()[p]] = p;
  return lab;
}

inline Adjacency to_adjacency(const CanonicalForm& f) {
  Adjacency a;
  a.n = f.n;
  int k = 0;
  for (int j = 1; j < f.n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (detail::get_bit(f.words, k)) a.add_edge(i, j);
  return a;
}

inline Graph to_graph(const CanonicalForm& f) { return to_graph(to_adjacency(f)); }

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

namespace detail {

inline Adjacency decode_code(int n, std::uint64_t code) { return to_adjacency(CanonicalForm{n, {code, 0}}); }

inline Adjacency complement_of(const Adjacency& a) {
  Adjacency c;
  c.n = a.n;
  const std::uint16_t all = std::uint16_t((1U << a.n) - 1);
  for (int v = 0; v < a.n; ++v) c.rows[v] = std::uint16_t(~a.rows[v] & all & ~(1U << v));
  return c;
}

inline void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Runs fn(worker_index) on `workers` threads (inline when workers <= 1).
inline void parallel_for_workers(unsigned workers, const std::function<void(unsigned)>& fn) {
  if (workers <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(fn, w);
  for (auto& t : pool) t.join();
}

/// Extends every graph on k-1 vertices with a new vertex k-1 joined to each
/// neighbor subset S. Only extensions in which the new vertex has minimum
/// degree are kept: every graph arises by re-adding a minimum-degree vertex to
/// the graph left after deleting it, so no class is lost. Extensions with more
/// than `edge_cap` edges are dropped.
inline std::vector<std::uint64_t> augment(const std::vector<std::uint64_t>& prev, int k, int edge_cap,
                                          unsigned workers) {
  std::vector<std::vector<std::uint64_t>> local(std::max(1U, workers));
  parallel_for_workers(workers, [&](unsigned w) {
    auto& out = local[w];
    const std::size_t flush_at = std::size_t(1) << 24;
    const unsigned stride = std::max(1U, workers);
    for (std::size_t idx = w; idx < prev.size(); idx += stride) {
      Adjacency r = decode_code(k - 1, prev[idx]);
      const int m = r.size();
      std::array<std::uint16_t, kCanonMaxOrder + 2> below{};  // below[d]: vertices of degree < d
      int min_deg = k;
      for (int v = 0; v < k - 1; ++v) {
        int d = r.degree(v);
        min_deg = std::min(min_deg, d);
        for (int t = d + 1; t <= k; ++t) below[t] |= std::uint16_t(1U << v);
      }
      if (k - 1 == 0) min_deg = 0;
      const std::uint32_t subsets = 1U << (k - 1);
      for (std::uint32_t s = 0; s < subsets; ++s) {
        const int d = std::popcount(s);
        if (m + d > edge_cap || d > min_deg + 1) continue;
        if ((s & below[d]) != below[d]) continue;
        Adjacency g = r;
        g.n = k;
        g.rows[k - 1] = std::uint16_t(s);
        for (std::uint32_t t = s; t; t &= t - 1) g.rows[std::countr_zero(t)] |= std::uint16_t(1U << (k - 1));
        out.push_back(canonical_form(g).code());
      }
      if (out.size() >= flush_at) sort_unique(out);
    }
    sort_unique(out);
  });
  std::vector<std::uint64_t> merged;
  for (auto& l : local) {
    merged.insert(merged.end(), l.begin(), l.end());
    l.clear();
    l.shrink_to_fit();
  }
  sort_unique(merged);
  return merged;
}

}  // namespace detail

/// One canonical form per isomorphism class of graphs on n vertices, ordered
/// by edge count, then by canonical bit string.
inline std::vector<CanonicalForm> enumerate_forms(int n, bool connected_only, unsigned workers = 1) {
  if (n < 1 || n > kEnumerateMaxOrder) throw SizeLimit("enumeration supports 1 <= n <= 10");
  const int total = n * (n - 1) / 2;
  const int cap = total / 2;  // the rest come from complements
  std::vector<std::uint64_t> level{0};
  for (int k = 2; k <= n; ++k) level = detail::augment(level, k, cap, workers);

  std::vector<std::uint64_t> all = level;
  for (std::uint64_t code : level) {
    if (std::popcount(code) >= total - cap) continue;
    all.push_back(canonical_form(detail::complement_of(detail::decode_code(n, code))).code());
  }
  detail::sort_unique(all);

  std::vector<CanonicalForm> out;
  out.reserve(all.size());
  for (std::uint64_t code : all) {
    CanonicalForm f{n, {code, 0}};
    if (connected_only && !is_connected(to_adjacency(f))) continue;
    out.push_back(f);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CanonicalForm& a, const CanonicalForm& b) { return a.size() < b.size(); });
  return out;
}

inline std::vector<Graph> enumerate_graphs(int n, bool connected_only, unsigned workers = 1) {
  std::vector<Graph> out;
  for (const auto& f : enumerate_forms(n, connected_only, workers)) out.push_back(to_graph(f));
  return out;
}

}  // namespace coentropy

template <>
struct std::hash<coentropy::CanonicalForm> {
  std::size_t operator()(const coentropy::CanonicalForm& f) const noexcept {
    std::uint64_t h = f.words[0] * 0x9E3779B97F4A7C15ULL ^ (f.words[1] + 0x632BE59BD9B4E019ULL + std::uint64_t(f.n));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};
