#pragma once

#include <cmath>
#include <map>
#include <span>
#include <string>

#include "coentropy/bignum.hpp"
#include "coentropy/graph.hpp"
#include "coentropy/spectral.hpp"
#include "coentropy/spectrum.hpp"

namespace coentropy {

inline constexpr unsigned kDefaultDigits = 60;

enum class FingerprintKind { exact, numeric };

/// Entropy value. For integral spectra the value is sum_p c_p ln p with
/// rational c_p (the logs of distinct primes are linearly independent over
/// Q, so equal maps <=> equal values). The decimal value is always present.
struct EntropyFingerprint {
  FingerprintKind kind = FingerprintKind::numeric;
  std::map<long, BigRational> exact;  // prime -> nonzero coefficient
  BigFloat numeric = 0;
  unsigned precision_digits = kDefaultDigits;

  bool is_exact() const { return kind == FingerprintKind::exact; }

  std::string numeric_text() const { return to_fixed(numeric, precision_digits); }

  /// "2:3/5;3:-1/5;5:1", primes ascending; "0" for the zero map.
  std::string exact_text(std::string_view sep = ";") const {
    if (exact.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : exact) {
      if (!s.empty()) s += sep;
      s += std::to_string(p) + ":" + c.str();
    }
    return s;
  }

  /// "ln(5) + 3/5 ln(2) - 1/5 ln(3)" style, primes in ascending order.
  std::string closed_form() const {
    if (!is_exact()) return numeric_text();
    if (exact.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : exact) {
      BigRational mag = abs(c);
      if (s.empty()) {
        s += c < 0 ? "-" : "";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (mag != 1) s += mag.str() + " ";
      s += "ln(" + std::to_string(p) + ")";
    }
    return s;
  }

  std::string to_string() const {
    std::string num = "numeric(" + std::to_string(precision_digits) + "): " + numeric_text();
    if (!is_exact()) return num;
    return "exact: " + exact_text("; ") + " | " + num;
  }
};

namespace detail {

inline std::map<long, int> factorize(long x) {
  std::map<long, int> f;
  for (long p = 2; p * p <= x; ++p)
    while (x % p == 0) {
      ++f[p];
      x /= p;
    }
  if (x > 1) ++f[x];
  return f;
}

inline BigFloat big_log(long x) { return log(BigFloat(x)); }

inline void check_entropy_digits(unsigned digits) { check_digits(digits); }

/// Entropy of the spectrum scaled by 1/two_m; two_m == 0 means un-normalized
/// (-sum lambda ln lambda).
inline EntropyFingerprint fingerprint_from_spectrum(const Spectrum& s, long two_m, unsigned digits) {
  check_entropy_digits(digits);
  EntropyFingerprint f;
  f.precision_digits = digits;
  const bool normalized = two_m > 0;
  if (s.is_integral) {
    f.kind = FingerprintKind::exact;
    std::map<long, BigRational> c;
    for (const auto& e : s.eigenvalues) {
      long lambda = e.integer().convert_to<long>();
      if (lambda == 0) continue;
      if (lambda < 0) throw std::domain_error("negative eigenvalue in entropy");
      for (auto [p, k] : factorize(lambda)) c[p] -= BigRational(lambda * k);
    }
    if (normalized) {
      for (auto& [p, v] : c) v /= two_m;
      for (auto [p, k] : factorize(two_m)) c[p] += k;
    }
    for (auto& [p, v] : c)
      if (v != 0) f.exact.emplace(p, v);
    BigFloat value = 0;
    for (const auto& [p, v] : f.exact) value += to_big_float(v) * big_log(p);
    f.numeric = value;
    return f;
  }
  f.kind = FingerprintKind::numeric;
  BigFloat sum = 0;
  for (int i = 0; i < s.size(); ++i) {
    const auto& e = s.eigenvalues[i];
    if (e.is_integer()) {
      long lambda = e.integer().convert_to<long>();
      if (lambda > 0) sum += BigFloat(lambda) * big_log(lambda);
      continue;
    }
    BigFloat lambda = to_big_float(refine_root_rational(s, i, digits + 20));
    if (lambda < 0) throw std::domain_error("negative eigenvalue in entropy");
    sum += lambda * log(lambda);
  }
  f.numeric = normalized ? big_log(two_m) - sum / BigFloat(two_m) : -sum;
  return f;
}

}  // namespace detail

/// S(rho_G) for rho_G = L(G) / 2m.
inline EntropyFingerprint von_neumann_entropy(const Graph& g, unsigned digits = kDefaultDigits) {
  if (g.size() == 0) throw EmptyGraph("entropy of rho_G needs at least one edge");
  return detail::fingerprint_from_spectrum(spectrum(charpoly(laplacian(g))), 2L * g.size(), digits);
}

/// Same, from an already computed Laplacian characteristic polynomial.
inline EntropyFingerprint von_neumann_entropy(const CharPoly& laplacian_poly, long edges,
                                              unsigned digits = kDefaultDigits) {
  if (edges == 0) throw EmptyGraph("entropy of rho_G needs at least one edge");
  return detail::fingerprint_from_spectrum(spectrum(laplacian_poly), 2 * edges, digits);
}

/// S^(G) = -sum lambda ln lambda over the un-normalized Laplacian spectrum.
inline EntropyFingerprint unnormalized_entropy(const Graph& g, unsigned digits = kDefaultDigits) {
  return detail::fingerprint_from_spectrum(spectrum(charpoly(laplacian(g))), 0, digits);
}

/// Bucketing key: the exact map, or the decimal value truncated to
/// `quantization` digits after the point.
inline std::string entropy_key(const EntropyFingerprint& f, unsigned quantization) {
  if (quantization > f.precision_digits)
    throw std::invalid_argument("quantization exceeds fingerprint precision");
  if (f.is_exact()) return f.exact_text();
  std::string text = to_fixed(f.numeric, f.precision_digits + 5);
  auto point = text.find('.');
  return text.substr(0, point + 1 + quantization);
}

struct EntropyMatch {
  enum class Kind { equal_exact, equal_to_digits, different };
  Kind kind = Kind::different;
  unsigned digits = 0;

  bool equal() const { return kind != Kind::different; }
  std::string to_string() const {
    switch (kind) {
      case Kind::equal_exact: return "EqualExact";
      case Kind::equal_to_digits: return "EqualToDigits(" + std::to_string(digits) + ")";
      default: return "Different";
    }
  }
  friend bool operator==(const EntropyMatch&, const EntropyMatch&) = default;
};

inline EntropyMatch compare_entropy(const EntropyFingerprint& a, const EntropyFingerprint& b, unsigned digits) {
  if (digits < 10) throw std::invalid_argument("entropy comparison needs at least 10 digits");
  if (digits > std::min(a.precision_digits, b.precision_digits))
    throw std::invalid_argument("comparison digits exceed fingerprint precision");
  using K = EntropyMatch::Kind;
  if (a.is_exact() && b.is_exact()) return a.exact == b.exact ? EntropyMatch{K::equal_exact, 0} : EntropyMatch{};
  BigFloat threshold = pow(BigFloat(10), -static_cast<int>(digits) + 2);
  if (abs(a.numeric - b.numeric) > threshold) return {};
  return {K::equal_to_digits, digits};
}

inline EntropyMatch compare_entropy(const Graph& g, const Graph& h, unsigned digits) {
  unsigned precision = std::min(digits + 10, kMaxDigits);
  return compare_entropy(von_neumann_entropy(g, precision), von_neumann_entropy(h, precision), digits);
}

/// Number of agreeing decimal places, floor(-log10 |a - b|), capped at the
/// common precision.
inline unsigned matching_digits(const EntropyFingerprint& a, const EntropyFingerprint& b) {
  unsigned cap = std::min(a.precision_digits, b.precision_digits);
  if (a.is_exact() && b.is_exact() && a.exact == b.exact) return cap;
  BigFloat diff = abs(a.numeric - b.numeric);
  if (diff == 0) return cap;
  BigFloat d = floor(-log10(diff));
  if (d < 0) return 0;
  return std::min(cap, d.convert_to<unsigned>());
}

/// Double-precision entropy of eigenvalues scaled by 1/two_m; the `zeros`
/// smallest eigenvalues are taken as exactly 0.
inline double entropy_double(std::span<const double> eigenvalues, double two_m, int zeros) {
  double s = 0;
  for (std::size_t i = zeros; i < eigenvalues.size(); ++i) {
    double x = eigenvalues[i] / two_m;
    if (x > 0) s -= x * std::log(x);
  }
  return s;
}

}  // namespace coentropy
