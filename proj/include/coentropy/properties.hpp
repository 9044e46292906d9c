#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "coentropy/canon.hpp"
#include "coentropy/entropy.hpp"
#include "coentropy/graph6.hpp"
#include "coentropy/quantum.hpp"
#include "coentropy/spectral.hpp"
#include "coentropy/spectrum.hpp"

namespace coentropy {

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && checked > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

namespace detail {

inline std::vector<Graph> graphs_up_to(int max_n, bool skip_isolated) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& f : enumerate_forms(n, false)) {
      Graph g = to_graph(f);
      if (skip_isolated && (g.size() == 0 || has_isolated_vertex(g))) continue;
      out.push_back(std::move(g));
    }
  return out;
}

/// Nonzero Laplacian eigenvalues from the exact spectrum, as doubles.
inline std::vector<double> nonzero_eigenvalues(const Graph& g) {
  Spectrum s = spectrum(charpoly(laplacian(g)));
  std::vector<double> out;
  for (int i = 0; i < s.size(); ++i) {
    const auto& e = s.eigenvalues[i];
    if (e.is_integer() && e.integer() == 0) continue;
    out.push_back(std::stod(refine_root(s, i, 20)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<double> squared_schmidt(const Graph& g) {
  SchmidtData sd = schmidt(to_floating(incidence_vector(g)));
  std::vector<double> sq;
  for (double c : sd.coefficients) sq.push_back(c * c);
  std::sort(sq.begin(), sq.end());
  return sq;
}

inline bool close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace detail

/// tr_E(psi psi^T) = L and tr_V(psi psi^T) = (1/2) Mbar^T Mbar, exactly.
inline PropertyResult check_purification(int max_n) {
  PropertyResult r{"purification identities"};
  for (const Graph& g : detail::graphs_up_to(max_n, true)) {
    ++r.checked;
    ExactPureState psi = incidence_vector(g);
    if (!(partial_trace_E(psi) == laplacian(g))) r.fail(graph6_encode(g) + ": tr_E != L");
    if (!(partial_trace_V(psi) == edge_laplacian_arcs(g))) r.fail(graph6_encode(g) + ": tr_V != Mbar^T Mbar / 2");
  }
  return r;
}

/// Schmidt rank = n - w, and squared Schmidt coefficients equal the nonzero
/// Laplacian spectrum to `tol`.
inline PropertyResult check_schmidt(int max_n, double tol = 1e-8) {
  PropertyResult r{"Schmidt rank and coefficients"};
  for (const Graph& g : detail::graphs_up_to(max_n, true)) {
    ++r.checked;
    if (schmidt_rank(g) != g.order() - components(g).count) r.fail(graph6_encode(g) + ": rank != n - w");
    if (!detail::close(detail::squared_schmidt(g), detail::nonzero_eigenvalues(g), tol))
      r.fail(graph6_encode(g) + ": Schmidt coefficients differ from spectrum");
  }
  return r;
}

/// lu_equivalent agrees with exact cospectrality and with equal Schmidt
/// coefficients on every same-(n, m) pair.
inline PropertyResult check_lu_equivalence(int max_n, double tol = 1e-8) {
  PropertyResult r{"LU-equivalence"};
  for (int n = 2; n <= max_n; ++n) {
    std::vector<Graph> gs;
    for (const auto& f : enumerate_forms(n, false)) {
      Graph g = to_graph(f);
      if (g.size() > 0 && !has_isolated_vertex(g)) gs.push_back(std::move(g));
    }
    std::vector<CharPoly> polys;
    std::vector<std::vector<double>> sq;
    for (const auto& g : gs) {
      polys.push_back(charpoly(laplacian(g)));
      sq.push_back(detail::squared_schmidt(g));
    }
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        if (gs[i].size() != gs[j].size()) continue;
        ++r.checked;
        bool lu = lu_equivalent(gs[i], gs[j]);
        if (lu != (polys[i] == polys[j])) r.fail(graph6_encode(gs[i]) + " " + graph6_encode(gs[j]) + ": charpoly");
        if (lu != detail::close(sq[i], sq[j], tol))
          r.fail(graph6_encode(gs[i]) + " " + graph6_encode(gs[j]) + ": Schmidt coefficients");
      }
  }
  return r;
}

/// tr_E(phi phi^T) = D + A exactly, and the same after dividing by 2m.
inline PropertyResult check_signless(int max_n) {
  PropertyResult r{"signless purification"};
  for (const Graph& g : detail::graphs_up_to(max_n, true)) {
    ++r.checked;
    ScaledSymMatrix t = partial_trace_E(signless_incidence_vector(g));
    IntSymMatrix q = signless_laplacian(g);
    const std::int64_t two_m = 2 * std::int64_t(g.size());
    ScaledSymMatrix t_norm{t.numerators, t.divisor * two_m};
    if (!(t == q) || !(t_norm == ScaledSymMatrix{q, two_m})) r.fail(graph6_encode(g));
  }
  return r;
}

/// 0 <= S(rho_G) <= ln(n - w) for every graph with at least one edge.
inline PropertyResult check_entropy_bounds(int max_n, unsigned digits = 30) {
  PropertyResult r{"entropy bounds"};
  for (int n = 2; n <= max_n; ++n)
    for (const auto& f : enumerate_forms(n, false)) {
      Graph g = to_graph(f);
      if (g.size() == 0) continue;
      ++r.checked;
      BigFloat s = von_neumann_entropy(g, digits).numeric;
      BigFloat upper = log(BigFloat(n - components(g).count));
      BigFloat slack = pow(BigFloat(10), -static_cast<int>(digits) + 5);
      if (s < -slack || s > upper + slack) r.fail(graph6_encode(g));
    }
  return r;
}

inline Graph random_graph(int n, int m, std::mt19937_64& rng) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(m);
  return Graph::from_zero_based(n, std::move(all));
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Canonical form, charpoly and entropy fingerprint are unchanged by
/// `relabelings` random vertex permutations of each graph.
inline PropertyResult check_relabeling_invariance(std::span<const Graph> graphs, int relabelings,
                                                  std::uint64_t seed = 1) {
  PropertyResult r{"relabeling invariance"};
  std::mt19937_64 rng(seed);
  for (const Graph& g : graphs) {
    const CanonicalForm form = canonical_form(g);
    const CharPoly poly = charpoly(laplacian(g));
    std::optional<EntropyFingerprint> fp;
    if (g.size() > 0) fp = von_neumann_entropy(g, 20);
    for (int k = 0; k < relabelings; ++k) {
      ++r.checked;
      Graph h = permute(g, random_permutation(g.order(), rng));
      if (canonical_form(h) != form) r.fail(graph6_encode(g) + ": canonical form");
      CharPoly ph = charpoly(laplacian(h));
      if (!(ph == poly)) r.fail(graph6_encode(g) + ": charpoly");
      if (fp) {
        EntropyFingerprint fh = von_neumann_entropy(h, 20);
        if (fh.is_exact() != fp->is_exact() || fh.exact != fp->exact || fh.numeric != fp->numeric)
          r.fail(graph6_encode(g) + ": fingerprint");
      }
    }
  }
  return r;
}

inline PropertyResult check_graph6_roundtrip(int max_n) {
  PropertyResult r{"graph6 round-trip"};
  for (const Graph& g : detail::graphs_up_to(max_n, false)) {
    ++r.checked;
    std::string s = graph6_encode(g);
    if (!(graph6_decode(s) == g) || graph6_encode(graph6_decode(s)) != s) r.fail(s);
  }
  return r;
}

}  // namespace coentropy
