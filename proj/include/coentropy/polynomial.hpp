#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "coentropy/bignum.hpp"

namespace coentropy {

/// Dense univariate polynomial, coefficients in ascending degree order. The
/// zero polynomial has no coefficients.
template <class C>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static Polynomial monomial(int degree, C coeff = C(1)) {
    std::vector<C> c(degree + 1, C(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coefficients() const { return c_; }
  C coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : C(0); }
  const C& leading() const { return c_.back(); }

  template <class X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<C> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * C(static_cast<long>(k)));
    return Polynomial(std::move(d));
  }

  /// Lowest k with a nonzero coefficient (multiplicity of the root 0).
  int zero_root_multiplicity() const {
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
    return k;
  }

  Polynomial shift_down(int k) const {
    return Polynomial(std::vector<C>(c_.begin() + std::min<std::size_t>(k, c_.size()), c_.end()));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<C> s(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) s[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) s[k] += b.c_[k];
    return Polynomial(std::move(s));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<C> s(a.c_);
    for (auto& x : s) x = -x;
    return Polynomial(std::move(s));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> p(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(p));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Ascending coefficients separated by spaces, e.g. "0 3 -4 1".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (k) s += ' ';
      s += c_[k].str();
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<C> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<BigRational>;

inline RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRational> c;
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

/// Quotient and remainder over a field.
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<BigRational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<BigRational> quo(a.degree() - db + 1, BigRational(0));
  for (int k = a.degree(); k >= db; --k) {
    BigRational f = rem[k] / b.leading();
    quo[k - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeff(j);
  }
  rem.resize(db);
  return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

inline RationalPolynomial make_monic(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  std::vector<BigRational> c = p.coefficients();
  BigRational lead = p.leading();
  for (auto& x : c) x /= lead;
  return RationalPolynomial(std::move(c));
}

inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Squarefree decomposition (Yun): returns (factor, multiplicity) pairs with
/// p = lc * prod factor^multiplicity, each factor monic, squarefree and of
/// positive degree.
inline std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(const RationalPolynomial& p) {
  std::vector<std::pair<RationalPolynomial, int>> out;
  if (p.degree() < 1) return out;
  RationalPolynomial f = make_monic(p);
  RationalPolynomial d = f.derivative();
  RationalPolynomial a = gcd(f, d);
  RationalPolynomial b = divmod(f, a).first;
  RationalPolynomial c = divmod(d, a).first;
  RationalPolynomial dd = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    RationalPolynomial g = gcd(b, dd);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(dd, g).first;
    dd = c - b.derivative();
  }
  return out;
}

/// Sturm chain p, p', -rem(...), ...
inline std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

inline int sign_variations(const std::vector<RationalPolynomial>& chain, const BigRational& x) {
  int variations = 0, last = 0;
  for (const auto& q : chain) {
    BigRational v = q(x);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Number of distinct real roots in (lo, hi] via Sturm's theorem.
inline int count_roots(const std::vector<RationalPolynomial>& chain, const BigRational& lo, const BigRational& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

/// Cauchy bound: every root has |x| < 1 + max |a_k / a_n|.
inline BigRational root_bound(const RationalPolynomial& p) {
  BigRational best = 0;
  for (int k = 0; k < p.degree(); ++k) {
    BigRational r = abs(p.coeff(k) / p.leading());
    if (r > best) best = r;
  }
  return best + 1;
}

struct RootInterval {
  BigRational lo;
  BigRational hi;  // lo == hi marks an exactly known rational root
};

/// Isolates every real root of a squarefree polynomial into disjoint
/// intervals (lo, hi], sorted ascending.
inline std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& p) {
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  const auto chain = sturm_chain(p);
  const BigRational bound = root_bound(p);
  struct Work {
    BigRational lo, hi;
    int count;
  };
  std::vector<Work> stack{{-bound, bound, count_roots(chain, -bound, bound)}};
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    if (w.count == 0) continue;
    if (w.count == 1) {
      if (p(w.hi) == 0) {
        out.push_back({w.hi, w.hi});
      } else {
        out.push_back({w.lo, w.hi});
      }
      continue;
    }
    BigRational mid = (w.lo + w.hi) / 2;
    int left = count_roots(chain, w.lo, mid);
    stack.push_back({mid, w.hi, w.count - left});
    stack.push_back({w.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

/// Shrinks an isolating interval of a squarefree polynomial by bisection
/// until hi - lo <= width. The root is kept in (lo, hi].
inline void bisect_to_width(const RationalPolynomial& p, RootInterval& iv, const BigRational& width) {
  if (iv.lo == iv.hi) return;
  // Sign at hi is nonzero unless hi is the root itself.
  while (iv.hi - iv.lo > width) {
    BigRational mid = (iv.lo + iv.hi) / 2;
    BigRational fm = p(mid);
    if (fm == 0) {
      iv.lo = iv.hi = mid;
      return;
    }
    BigRational fh = p(iv.hi);
    if (fh == 0) {
      iv.lo = iv.hi;
      return;
    }
    if ((fm > 0) == (fh > 0)) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
}

}  // namespace coentropy
