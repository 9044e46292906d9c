#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coentropy/bignum.hpp"
#include "coentropy/polynomial.hpp"
#include "coentropy/spectral.hpp"

namespace coentropy {

/// A real root of a squarefree rational polynomial, known by an isolating
/// interval (lo, hi] that contains no other root of that factor and no integer.
struct IsolatedRoot {
  std::shared_ptr<const RationalPolynomial> factor;
  RootInterval interval;
};

struct Eigenvalue {
  std::variant<BigInt, IsolatedRoot> value;

  bool is_integer() const { return std::holds_alternative<BigInt>(value); }
  const BigInt& integer() const { return std::get<BigInt>(value); }
  const IsolatedRoot& isolated() const { return std::get<IsolatedRoot>(value); }
};

/// Eigenvalue multiset, ascending, one entry per eigenvalue (multiplicities
/// are expanded).
struct Spectrum {
  std::vector<Eigenvalue> eigenvalues;
  bool is_integral = true;

  int size() const { return static_cast<int>(eigenvalues.size()); }

  int multiplicity_of(long value) const {
    int count = 0;
    for (const auto& e : eigenvalues)
      if (e.is_integer() && e.integer() == value) ++count;
    return count;
  }

  std::optional<std::vector<long>> integers() const {
    if (!is_integral) return std::nullopt;
    std::vector<long> out;
    for (const auto& e : eigenvalues) out.push_back(e.integer().convert_to<long>());
    return out;
  }
};

namespace detail {

/// Divides p by (x - r) exactly; p(r) must be 0.
inline RationalPolynomial deflate(const RationalPolynomial& p, const BigRational& r) {
  const int d = p.degree();
  std::vector<BigRational> q(d, BigRational(0));
  BigRational carry = 0;
  for (int k = d; k >= 1; --k) {
    carry = p.coeff(k) + carry * r;
    q[k - 1] = carry;
  }
  return RationalPolynomial(std::move(q));
}

inline BigInt isqrt_floor(const BigRational& x) {
  if (x <= 0) return 0;
  BigInt floor_x = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
  return boost::multiprecision::sqrt(floor_x);
}

/// Rational sort key for an eigenvalue; see Spectrum.
inline BigRational sort_key(const Eigenvalue& e) {
  if (e.is_integer()) return BigRational(e.integer());
  return e.isolated().interval.lo;
}

inline bool contains_integer(const RootInterval& iv) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  // floor(lo) < floor(hi) or hi integral means an integer lies in (lo, hi].
  BigInt flo = numerator(iv.lo) / denominator(iv.lo);
  if (iv.lo < 0 && BigRational(flo) != iv.lo) flo -= 1;
  BigInt fhi = numerator(iv.hi) / denominator(iv.hi);
  if (iv.hi < 0 && BigRational(fhi) != iv.hi) fhi -= 1;
  return flo != fhi || BigRational(fhi) == iv.hi || BigRational(flo) == iv.lo;
}

inline bool overlaps(const RootInterval& a, const RootInterval& b) { return !(a.hi < b.lo || b.hi < a.lo); }

}  // namespace detail

/// Exact spectrum of a monic polynomial whose roots are all real.
inline Spectrum spectrum(const RationalPolynomial& monic_poly) {
  RationalPolynomial p = make_monic(monic_poly);
  Spectrum s;
  std::vector<Eigenvalue> ints;

  const int zeros = p.zero_root_multiplicity();
  for (int i = 0; i < zeros; ++i) ints.push_back({BigInt(0)});
  p = p.shift_down(zeros);

  if (p.degree() >= 1) {
    // All roots real, so sum of squares = e1^2 - 2 e2 bounds |root|.
    const int d = p.degree();
    BigRational e1 = -p.coeff(d - 1);
    BigRational e2 = d >= 2 ? p.coeff(d - 2) : BigRational(0);
    BigInt bound = detail::isqrt_floor(e1 * e1 - 2 * e2) + 1;
    for (BigInt k = -bound; k <= bound && p.degree() >= 1; ++k) {
      if (k == 0) continue;
      while (p.degree() >= 1 && p(BigRational(k)) == 0) {
        ints.push_back({k});
        p = detail::deflate(p, BigRational(k));
      }
    }
  }

  std::vector<Eigenvalue> irrational;
  std::vector<int> root_id;  // equal ids are copies of one repeated root
  if (p.degree() >= 1) {
    for (auto& [factor, mult] : squarefree_decomposition(p)) {
      auto shared = std::make_shared<const RationalPolynomial>(factor);
      for (auto iv : isolate_real_roots(factor)) {
        const int id = root_id.empty() ? 0 : root_id.back() + 1;
        for (int i = 0; i < mult; ++i) {
          irrational.push_back({IsolatedRoot{shared, iv}});
          root_id.push_back(id);
        }
      }
    }
    // Shrink until no interval holds an integer or meets another root's interval.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < irrational.size(); ++i) {
        auto& a = std::get<IsolatedRoot>(irrational[i].value);
        bool shrink = a.interval.lo != a.interval.hi && detail::contains_integer(a.interval);
        for (std::size_t j = 0; j < irrational.size() && !shrink; ++j) {
          if (root_id[j] == root_id[i]) continue;
          const auto& b = std::get<IsolatedRoot>(irrational[j].value);
          shrink = detail::overlaps(a.interval, b.interval);
        }
        if (shrink) {
          bisect_to_width(*a.factor, a.interval, (a.interval.hi - a.interval.lo) / 2);
          changed = true;
        }
      }
      // Copies of a repeated root must keep identical intervals.
      for (std::size_t i = 1; i < irrational.size(); ++i) {
        auto& a = std::get<IsolatedRoot>(irrational[i].value);
        const auto& prev = std::get<IsolatedRoot>(irrational[i - 1].value);
        if (root_id[i] == root_id[i - 1]) a.interval = prev.interval;
      }
    }
  }

  const int expected = monic_poly.degree();
  s.is_integral = irrational.empty();
  s.eigenvalues = std::move(ints);
  s.eigenvalues.insert(s.eigenvalues.end(), irrational.begin(), irrational.end());
  if (s.size() != expected)
    throw std::domain_error("polynomial has non-real roots; not the spectrum of a symmetric matrix");
  std::stable_sort(s.eigenvalues.begin(), s.eigenvalues.end(),
                   [](const Eigenvalue& a, const Eigenvalue& b) { return detail::sort_key(a) < detail::sort_key(b); });
  return s;
}

inline Spectrum spectrum(const CharPoly& p) { return spectrum(to_rational(p.polynomial())); }

/// Rational within 10^-digits of eigenvalue `index`. Bisection to a coarse
/// width, Newton polishing in BigFloat, then an exact sign check of the
/// final bracket; falls back to pure bisection if the check fails.
inline BigRational refine_root_rational(const Spectrum& s, int index, unsigned digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  const Eigenvalue& e = s.eigenvalues.at(index);
  if (e.is_integer()) return BigRational(e.integer());
  const IsolatedRoot& root = e.isolated();
  RootInterval iv = root.interval;
  if (iv.lo == iv.hi) return iv.lo;
  const RationalPolynomial& f = *root.factor;
  const BigRational eps = BigRational(1, boost::multiprecision::pow(BigInt(10), digits + 1));

  bisect_to_width(f, iv, BigRational(1, BigInt(1) << 40));
  if (iv.lo == iv.hi) return iv.lo;

  if (digits <= kMaxDigits && iv.hi - iv.lo > eps) {
    std::vector<BigFloat> fc, dc;
    for (const auto& c : f.coefficients()) fc.push_back(to_big_float(c));
    const RationalPolynomial df = f.derivative();
    for (const auto& c : df.coefficients()) dc.push_back(to_big_float(c));
    auto horner = [](const std::vector<BigFloat>& c, const BigFloat& x) {
      BigFloat acc = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
      return acc;
    };
    const BigFloat lo = to_big_float(iv.lo), hi = to_big_float(iv.hi);
    const BigFloat tol = BigFloat(1) / boost::multiprecision::pow(BigFloat(10), digits + 10);
    BigFloat x = (lo + hi) / 2;
    bool ok = true;
    for (int it = 0; it < 200; ++it) {
      BigFloat step = horner(fc, x) / horner(dc, x);
      x -= step;
      if (x <= lo || x > hi) {
        ok = false;
        break;
      }
      if (abs(step) < tol) break;
    }
    if (ok) {
      BigRational xr = to_rational(x);
      BigRational a = xr - eps, b = xr + eps;
      BigRational fa = f(a), fb = f(b);
      if (fa != 0 && fb != 0 && ((fa > 0) != (fb > 0))) return xr;
    }
  }
  bisect_to_width(f, iv, eps);
  return (iv.lo + iv.hi) / 2;
}

/// Decimal string of eigenvalue `index` within 10^-digits.
inline std::string refine_root(const Spectrum& s, int index, unsigned digits) {
  return to_fixed(refine_root_rational(s, index, digits + 1), digits);
}

/// "[0, 1, 3]" for integral spectra; irrational entries shown to 12 digits
/// with a "~" prefix.
inline std::string to_string(const Spectrum& s) {
  std::string out = "[";
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    const auto& e = s.eigenvalues[i];
    out += e.is_integer() ? e.integer().str() : "~" + refine_root(s, i, 12);
  }
  return out + "]";
}

}  // namespace coentropy
