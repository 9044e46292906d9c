#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coentropy/graph.hpp"
#include "coentropy/matrix.hpp"
#include "coentropy/spectral.hpp"

namespace coentropy {

// States live in H_V (x) H_E with H_E spanned by arc vectors d_(s,t). Arc
// order follows directed_incidence: edge e = {u,v}, u < v, contributes arc
// (u,v) at 2e and (v,u) at 2e+1.

/// Bipartite state whose amplitudes are integer multiples of 1/sqrt(2).
/// Index (v, arc) lives at v * dim_e + arc.
struct ExactPureState {
  int dim_v = 0;
  int dim_e = 0;
  std::vector<int> numerators;

  int at(int v, int arc) const { return numerators[std::size_t(v) * dim_e + arc]; }
  /// ||psi||^2 = sum k^2 / 2, always an integer for the graph states.
  BigRational norm_squared() const {
    long s = 0;
    for (int k : numerators) s += long(k) * k;
    return BigRational(s, 2);
  }
};

enum class NormConvention { raw, unit };

struct PureState {
  int dim_v = 0;
  int dim_e = 0;
  std::vector<double> amplitudes;
  NormConvention norm_convention = NormConvention::raw;

  double at(int v, int arc) const { return amplitudes[std::size_t(v) * dim_e + arc]; }
  double norm_squared() const {
    double s = 0;
    for (double a : amplitudes) s += a * a;
    return s;
  }
};

inline PureState to_floating(const ExactPureState& s, NormConvention convention = NormConvention::raw) {
  PureState out{s.dim_v, s.dim_e, {}, convention};
  double scale = 1.0 / std::sqrt(2.0);
  if (convention == NormConvention::unit) {
    double norm2 = s.norm_squared().convert_to<double>();
    if (norm2 == 0) throw EmptyGraph("cannot normalize the zero vector");
    scale /= std::sqrt(norm2);
  }
  out.amplitudes.reserve(s.numerators.size());
  for (int k : s.numerators) out.amplitudes.push_back(k * scale);
  return out;
}

namespace detail {

inline void require_state_graph(const Graph& g) {
  if (g.size() == 0) throw EmptyGraph("graph has no edges");
  require_no_isolated(g);
}

inline ExactPureState edge_state(const Graph& g, int sign_v) {
  require_state_graph(g);
  ExactPureState s{g.order(), 2 * g.size(), {}};
  s.numerators.assign(std::size_t(s.dim_v) * s.dim_e, 0);
  auto slot = [&](int v, int arc) -> int& { return s.numerators[std::size_t(v) * s.dim_e + arc]; };
  int e = 0;
  for (const auto& edge : g.edges()) {
    // (a_u + sign_v a_v) (x) (d_(u,v) + sign_v d_(v,u)), amplitude 1/sqrt2 each
    slot(edge.u, arc_index(e, false)) = 1;
    slot(edge.u, arc_index(e, true)) = sign_v;
    slot(edge.v, arc_index(e, false)) = sign_v;
    slot(edge.v, arc_index(e, true)) = 1;
    ++e;
  }
  return s;
}

}  // namespace detail

/// psi_G = (1/sqrt2) sum_{uv in E} (a_u - a_v) (x) (d_(u,v) - d_(v,u)).
inline ExactPureState incidence_vector(const Graph& g) { return detail::edge_state(g, -1); }

/// phi_G = sum_{uv in E} (a_u + a_v)/sqrt2 (x) (d_(u,v) + d_(v,u)).
inline ExactPureState signless_incidence_vector(const Graph& g) { return detail::edge_state(g, +1); }

/// tr_E(s s^T): entries sum_arc k_i k_j / 2, exact.
inline ScaledSymMatrix partial_trace_E(const ExactPureState& s) {
  IntMatrix m(s.dim_v, s.dim_v);
  for (int i = 0; i < s.dim_v; ++i)
    for (int j = i; j < s.dim_v; ++j) {
      std::int64_t acc = 0;
      for (int a = 0; a < s.dim_e; ++a) acc += std::int64_t(s.at(i, a)) * s.at(j, a);
      m(i, j) = m(j, i) = acc;
    }
  return ScaledSymMatrix{IntSymMatrix(std::move(m)), 2};
}

/// tr_V(s s^T), exact.
inline ScaledSymMatrix partial_trace_V(const ExactPureState& s) {
  IntMatrix m(s.dim_e, s.dim_e);
  for (int a = 0; a < s.dim_e; ++a)
    for (int b = a; b < s.dim_e; ++b) {
      std::int64_t acc = 0;
      for (int v = 0; v < s.dim_v; ++v) acc += std::int64_t(s.at(v, a)) * s.at(v, b);
      m(a, b) = m(b, a) = acc;
    }
  return ScaledSymMatrix{IntSymMatrix(std::move(m)), 2};
}

template <class Scalar>
struct DensityMatrix {
  Matrix<Scalar> entries;
  Scalar trace_value{};

  int dim() const { return entries.rows(); }
  const Scalar& operator()(int r, int c) const { return entries(r, c); }
  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;
};

using ExactDensityMatrix = DensityMatrix<BigRational>;

inline DensityMatrix<double> partial_trace_E(const PureState& s) {
  Matrix<double> m(s.dim_v, s.dim_v);
  for (int i = 0; i < s.dim_v; ++i)
    for (int j = 0; j < s.dim_v; ++j)
      for (int a = 0; a < s.dim_e; ++a) m(i, j) += s.at(i, a) * s.at(j, a);
  return {m, m.trace()};
}

inline DensityMatrix<double> partial_trace_V(const PureState& s) {
  Matrix<double> m(s.dim_e, s.dim_e);
  for (int a = 0; a < s.dim_e; ++a)
    for (int b = 0; b < s.dim_e; ++b)
      for (int v = 0; v < s.dim_v; ++v) m(a, b) += s.at(v, a) * s.at(v, b);
  return {m, m.trace()};
}

inline ExactDensityMatrix to_density(const ScaledSymMatrix& m) {
  Matrix<BigRational> d(m.dim(), m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) d(r, c) = m.at(r, c);
  return {d, d.trace()};
}

struct SchmidtData {
  std::vector<double> coefficients;  // descending, all above the cutoff
  int rank = 0;
};

/// Singular values of the dim_v x dim_e reshaping. Without an explicit
/// tolerance the cutoff is 1e-10 times the largest coefficient.
inline SchmidtData schmidt(const PureState& s, std::optional<double> tolerance = std::nullopt) {
  if (tolerance && !(*tolerance > 0)) throw std::invalid_argument("Schmidt tolerance must be positive");
  Eigen::MatrixXd m(s.dim_v, s.dim_e);
  for (int v = 0; v < s.dim_v; ++v)
    for (int a = 0; a < s.dim_e; ++a) m(v, a) = s.at(v, a);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  SchmidtData out;
  const double largest = sv.size() ? sv(0) : 0.0;
  const double cutoff = tolerance ? *tolerance : 1e-10 * largest;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) out.coefficients.push_back(sv(i));
  out.rank = static_cast<int>(out.coefficients.size());
  return out;
}

/// rank_S(psi_G) = rank L(G) = n - w(G), by exact rank.
inline int schmidt_rank(const Graph& g) {
  detail::require_state_graph(g);
  return exact_rank(laplacian(g));
}

/// LU-equivalence of psi_G and psi_H, decided by exact Laplacian cospectrality.
inline bool lu_equivalent(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size())
    throw DimensionMismatch("LU-equivalence needs equal vertex and edge counts");
  return charpoly(laplacian(g)) == charpoly(laplacian(h));
}

namespace detail {

inline BigRational exact_sqrt(const BigRational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (x < 0) throw std::domain_error("square root of a negative population product");
  BigInt n = numerator(x), d = denominator(x);
  BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d)
    throw std::domain_error("coherence is irrational; use a floating-point ensemble");
  return BigRational(rn, rd);
}
inline double exact_sqrt(double x) { return std::sqrt(x); }

template <class Scalar>
bool near(const Scalar& a, const Scalar& b) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return std::abs(a - b) <= 1e-12;
  } else {
    return a == b;
  }
}

}  // namespace detail

/// Unit vector |{u,v}> = alpha_u |u> + alpha_v |v> in a real gauge:
/// alpha_u = sqrt(p_u) >= 0, alpha_v = sign * sqrt(p_v).
template <class Scalar>
struct EdgeState {
  int u = 0;  // 0-based
  int v = 0;
  Scalar population_u{};
  Scalar population_v{};
  int sign = -1;

  static EdgeState uniform(int u, int v, int sign) {
    return {u, v, Scalar(1) / Scalar(2), Scalar(1) / Scalar(2), sign};
  }
};

template <class Scalar>
struct EdgeStateEnsemble {
  std::vector<std::pair<Scalar, EdgeState<Scalar>>> members;  // (weight, state)
};

/// rho = sum_e w_e |e><e|.
template <class Scalar>
DensityMatrix<Scalar> mixture_density(const EdgeStateEnsemble<Scalar>& ensemble, int n) {
  Scalar total(0);
  Matrix<Scalar> rho(n, n, Scalar(0));
  for (const auto& [w, e] : ensemble.members) {
    if (w < Scalar(0)) throw WeightError("ensemble weight is negative");
    if (!detail::near<Scalar>(e.population_u + e.population_v, Scalar(1)))
      throw WeightError("edge state is not unit norm");
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
      throw OutOfRange("edge state endpoints outside the vertex space");
    total += w;
    Scalar coherence = detail::exact_sqrt(e.population_u * e.population_v);
    if (e.sign < 0) coherence = -coherence;
    rho(e.u, e.u) += w * e.population_u;
    rho(e.v, e.v) += w * e.population_v;
    rho(e.u, e.v) += w * coherence;
    rho(e.v, e.u) += w * coherence;
  }
  if (!detail::near<Scalar>(total, Scalar(1))) throw WeightError("ensemble weights do not sum to 1");
  return {rho, rho.trace()};
}

/// Equal weights over edges; alpha_{uv} when sign = -1, varsigma_{uv} when +1.
template <class Scalar = BigRational>
EdgeStateEnsemble<Scalar> uniform_edge_ensemble(const Graph& g, int sign) {
  if (g.size() == 0) throw EmptyGraph("graph has no edges");
  EdgeStateEnsemble<Scalar> ens;
  for (const auto& e : g.edges())
    ens.members.emplace_back(Scalar(1) / Scalar(g.size()), EdgeState<Scalar>::uniform(e.u, e.v, sign));
  return ens;
}

/// rho_G = L(G) / 2m, exact.
inline ExactDensityMatrix normalized_laplacian_density(const Graph& g) {
  if (g.size() == 0) throw EmptyGraph("graph has no edges");
  IntSymMatrix l = laplacian(g);
  return to_density(ScaledSymMatrix{l, 2 * std::int64_t(g.size())});
}

/// 1-based (source, target) of an arc index.
inline std::pair<int, int> arc_endpoints(const Graph& g, int arc) {
  const Edge& e = g.edges()[arc / 2];
  return arc % 2 == 0 ? std::pair{e.u + 1, e.v + 1} : std::pair{e.v + 1, e.u + 1};
}

/// One line per nonzero amplitude: "a_1 (x) d_(1,2): +1/√2".
inline std::vector<std::string> dump_amplitudes(const ExactPureState& s, const Graph& g) {
  std::vector<std::string> lines;
  for (int v = 0; v < s.dim_v; ++v)
    for (int a = 0; a < s.dim_e; ++a) {
      int k = s.at(v, a);
      if (k == 0) continue;
      auto [src, dst] = arc_endpoints(g, a);
      lines.push_back("a_" + std::to_string(v + 1) + " ⊗ d_(" + std::to_string(src) + "," + std::to_string(dst) +
                      "): " + (k > 0 ? "+" : "-") + std::to_string(std::abs(k)) + "/√2");
    }
  return lines;
}

}  // namespace coentropy
