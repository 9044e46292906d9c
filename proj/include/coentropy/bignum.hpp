#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace coentropy {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

/// Largest decimal precision a numeric result may be requested at. BigFloat
/// carries guard digits beyond this.
inline constexpr unsigned kMaxDigits = 150;
using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<kMaxDigits + 30>,
                                               boost::multiprecision::et_off>;

inline void check_digits(unsigned digits) {
  if (digits < 1 || digits > kMaxDigits)
    throw std::invalid_argument("precision must be in 1.." + std::to_string(kMaxDigits) + " digits");
}

inline BigFloat to_big_float(const BigInt& z) { return BigFloat(z.str()); }

inline BigFloat to_big_float(const BigRational& q) {
  return to_big_float(boost::multiprecision::numerator(q)) /
         to_big_float(boost::multiprecision::denominator(q));
}

/// Nearest-rounded fixed-point rendering of an exact rational.
inline std::string to_fixed(const BigRational& q, unsigned digits) {
  BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
  BigRational scaled = q * scale;
  BigInt num = boost::multiprecision::numerator(scaled);
  BigInt den = boost::multiprecision::denominator(scaled);
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt rounded = (2 * num + den) / (2 * den);
  std::string s = rounded.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (negative && rounded != 0) s.insert(0, "-");
  return s;
}

inline std::string to_fixed(const BigFloat& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::fixed);
}

/// Exact value of a binary float as a rational.
inline BigRational to_rational(const BigFloat& x) {
  int exponent = 0;
  BigFloat mantissa = boost::multiprecision::frexp(x, &exponent);
  constexpr int kBits = std::numeric_limits<BigFloat>::digits;
  std::string digits = boost::multiprecision::ldexp(mantissa, kBits).str(0, std::ios_base::fixed);
  BigInt m(digits.substr(0, digits.find('.')));
  int shift = exponent - kBits;
  if (shift >= 0) return BigRational(m << shift);
  return BigRational(m, BigInt(1) << -shift);
}

}  // namespace coentropy
