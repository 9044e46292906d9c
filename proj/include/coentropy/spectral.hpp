#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coentropy/graph.hpp"
#include "coentropy/matrix.hpp"
#include "coentropy/polynomial.hpp"

namespace coentropy {

inline IntSymMatrix laplacian(const Graph& g) {
  IntMatrix m(g.order(), g.order());
  for (const auto& e : g.edges()) {
    ++m(e.u, e.u);
    ++m(e.v, e.v);
    m(e.u, e.v) = m(e.v, e.u) = -1;
  }
  return IntSymMatrix(std::move(m));
}

/// D + A.
inline IntSymMatrix signless_laplacian(const Graph& g) {
  IntMatrix m(g.order(), g.order());
  for (const auto& e : g.edges()) {
    ++m(e.u, e.u);
    ++m(e.v, e.v);
    m(e.u, e.v) = m(e.v, e.u) = 1;
  }
  return IntSymMatrix(std::move(m));
}

/// Per-edge choice of the endpoint that receives +1 (0-based vertex ids,
/// indexed like Graph::edges()).
using Orientation = std::vector<int>;

inline Orientation default_orientation(const Graph& g) {
  Orientation o;
  for (const auto& e : g.edges()) o.push_back(e.u);
  return o;
}

/// n x m incidence matrix M_F for the given orientation.
inline IntMatrix oriented_incidence(const Graph& g, const Orientation& sources) {
  if (static_cast<int>(sources.size()) != g.size())
    throw DimensionMismatch("orientation must name one source per edge");
  IntMatrix m(g.order(), g.size());
  int col = 0;
  for (const auto& e : g.edges()) {
    int s = sources[col];
    if (s != e.u && s != e.v) throw OutOfRange("orientation source is not an endpoint of its edge");
    int t = s == e.u ? e.v : e.u;
    m(s, col) = 1;
    m(t, col) = -1;
    ++col;
  }
  return m;
}

inline void require_no_isolated(const Graph& g) {
  auto deg = degrees(g);
  for (int v = 0; v < g.order(); ++v)
    if (deg[v] == 0) throw IsolatedVertex("vertex " + std::to_string(v + 1) + " is isolated");
}

/// Arc index of (u -> v) for edge number e = {u,v}, u < v: 2e, and of
/// (v -> u): 2e + 1.
inline constexpr int arc_index(int edge, bool reversed) { return 2 * edge + (reversed ? 1 : 0); }

/// n x 2m incidence matrix of the symmetric digraph. Column of arc (s -> t)
/// is a_s - a_t.
inline IntMatrix directed_incidence(const Graph& g) {
  require_no_isolated(g);
  IntMatrix m(g.order(), 2 * g.size());
  int e = 0;
  for (const auto& edge : g.edges()) {
    m(edge.u, arc_index(e, false)) = 1;
    m(edge.v, arc_index(e, false)) = -1;
    m(edge.v, arc_index(e, true)) = 1;
    m(edge.u, arc_index(e, true)) = -1;
    ++e;
  }
  return m;
}

/// m x m edge Laplacian M_F^T M_F.
inline IntSymMatrix edge_laplacian_oriented(const Graph& g, const Orientation& sources) {
  IntMatrix mf = oriented_incidence(g, sources);
  return IntSymMatrix(mf.transpose() * mf);
}

/// 2m x 2m arc-space edge Laplacian (1/2) Mbar^T Mbar.
inline ScaledSymMatrix edge_laplacian_arcs(const Graph& g) {
  IntMatrix mb = directed_incidence(g);
  return ScaledSymMatrix{IntSymMatrix(mb.transpose() * mb), 2};
}

/// Monic characteristic polynomial det(xI - A) with exact integer
/// coefficients.
class CharPoly {
 public:
  CharPoly() = default;
  explicit CharPoly(IntPolynomial p) : p_(std::move(p)) {}

  int degree() const { return p_.degree(); }
  const IntPolynomial& polynomial() const { return p_; }
  const BigInt& coeff(int k) const { return p_.coefficients().at(k); }
  std::string to_string() const { return p_.to_string(); }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  IntPolynomial p_;
};

namespace detail {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }

/// Faddeev-LeVerrier over the integers: M_k = A M_{k-1} + c_{n-k+1} I,
/// c_{n-k} = -tr(A M_k) / k. Every division is exact for integer A.
/// `a` is row-major n x n, `out` receives n+1 ascending coefficients.
template <class T>
void faddeev_leverrier(std::span<const T> a, int n, std::span<T> out) {
  std::vector<T> mk(std::size_t(n) * n, T(0)), am(std::size_t(n) * n, T(0));
  out[n] = T(1);
  for (int i = 0; i < n; ++i) mk[std::size_t(i) * n + i] = T(1);
  for (int k = 1; k <= n; ++k) {
    // am = A * M_k where M_k is current mk
    T tr(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        T s(0);
        for (int l = 0; l < n; ++l) {
          const T& x = a[std::size_t(i) * n + l];
          if (x == 0) continue;
          s = checked_add(s, checked_mul(x, mk[std::size_t(l) * n + j]));
        }
        am[std::size_t(i) * n + j] = s;
        if (i == j) tr = checked_add(tr, s);
      }
    T c = -tr / T(k);
    if (c * T(k) != -tr) throw std::logic_error("Faddeev-LeVerrier division was not exact");
    out[n - k] = c;
    if (k == n) break;
    mk = am;
    for (int i = 0; i < n; ++i) mk[std::size_t(i) * n + i] = checked_add(mk[std::size_t(i) * n + i], c);
  }
}

}  // namespace detail

/// Fast path for small matrices: int64 arithmetic, returns false on overflow.
inline bool charpoly_i64(std::span<const std::int64_t> a, int n, std::span<std::int64_t> out) {
  try {
    detail::faddeev_leverrier<std::int64_t>(a, n, out);
    return true;
  } catch (const detail::Overflow&) {
    return false;
  }
}

inline CharPoly charpoly(const IntMatrix& m) {
  if (!m.square()) throw DimensionMismatch("characteristic polynomial needs a square matrix");
  const int n = m.rows();
  std::vector<std::int64_t> flat(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[std::size_t(i) * n + j] = m(i, j);
  std::vector<std::int64_t> small(n + 1);
  std::vector<BigInt> coeffs;
  if (charpoly_i64(flat, n, small)) {
    coeffs.assign(small.begin(), small.end());
  } else {
    std::vector<BigInt> big(flat.begin(), flat.end());
    coeffs.assign(n + 1, BigInt(0));
    detail::faddeev_leverrier<BigInt>(big, n, coeffs);
  }
  return CharPoly(IntPolynomial(std::move(coeffs)));
}

inline CharPoly charpoly(const IntSymMatrix& m) { return charpoly(m.matrix()); }

/// det(xI - B/d) = d^{-N} det(dxI - B): coefficient k is c_k(B) d^{k-N}.
inline RationalPolynomial charpoly(const ScaledSymMatrix& m) {
  CharPoly base = charpoly(m.numerators);
  const int n = m.dim();
  std::vector<BigRational> c;
  for (int k = 0; k <= n; ++k) {
    BigRational scale = BigRational(1, boost::multiprecision::pow(BigInt(m.divisor), n - k));
    c.push_back(BigRational(base.coeff(k)) * scale);
  }
  return RationalPolynomial(std::move(c));
}

/// Polynomial with the factor x^k (k = multiplicity of root 0) divided out;
/// two such polynomials are equal iff the nonzero spectra coincide.
inline RationalPolynomial nonzero_part(const RationalPolynomial& p) {
  return make_monic(p.shift_down(p.zero_root_multiplicity()));
}
inline RationalPolynomial nonzero_part(const CharPoly& p) { return nonzero_part(to_rational(p.polynomial())); }

inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi on a dense symmetric n x n buffer (destroyed). Writes the
/// eigenvalues, ascending, to `out`.
inline void jacobi_eigenvalues(std::span<double> a, int n, std::span<double> out) {
  auto at = [&](int i, int j) -> double& { return a[std::size_t(i) * n + j]; };
  for (int sweep = 0;; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (int i = 0; i < n; ++i) {
      diag += at(i, i) * at(i, i);
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    }
    if (off == 0.0 || off <= 1e-34 * diag) break;
    if (sweep == kJacobiMaxSweeps) throw NoConvergence("Jacobi did not converge in 100 sweeps");
    // Skip small rotations in the first sweeps.
    const double threshold = sweep < 3 ? 0.2 * std::sqrt(off) / (n * n) : 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0 || std::abs(apq) <= threshold) continue;
        double app = at(p, p), aqq = at(q, q);
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          double arp = at(r, p), arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = s * arp + c * arq;
        }
      }
  }
  for (int i = 0; i < n; ++i) out[i] = at(i, i);
  std::sort(out.begin(), out.begin() + n);
}

inline std::vector<double> eig_double(const Matrix<double>& m) {
  if (!m.is_symmetric()) throw DimensionMismatch("eig_double needs a symmetric matrix");
  const int n = m.rows();
  std::vector<double> a(std::size_t(n) * n), out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[std::size_t(i) * n + j] = m(i, j);
  jacobi_eigenvalues(a, n, out);
  return out;
}

inline std::vector<double> eig_double(const IntSymMatrix& m) {
  Matrix<double> d(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) d(i, j) = static_cast<double>(m(i, j));
  return eig_double(d);
}

}  // namespace coentropy
