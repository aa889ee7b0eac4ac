#pragma once

// Exact integer and rational scalars used throughout the library.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prymal {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Canonical rendering: "a/b" with b > 0, integers without "/1".
inline std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Integer to_integer(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("not an integer: " + to_string(q));
  return boost::multiprecision::numerator(q);
}

inline std::int64_t to_int64(const Rational& q) {
  return to_integer(q).convert_to<std::int64_t>();
}

inline Integer factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

/// Binomial coefficient with the usual conventions: zero outside 0 <= k <= n
/// for n >= 0, and the generalized value for negative upper index.
inline Integer binomial(int n, int k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Integer r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

/// g!/(g-k)!; zero when k > g.
inline Integer falling_factorial(int g, int k) {
  if (k < 0) throw std::domain_error("negative falling factorial length");
  if (k > g) return 0;
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= (g - i);
  return r;
}

inline Integer pow(const Integer& base, int e) {
  if (e < 0) throw std::domain_error("negative exponent for Integer");
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline Rational pow(const Rational& base, int e) {
  Rational r = 1;
  const Rational b = e < 0 ? Rational(1) / base : base;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
  return r;
}

inline int sign_power(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace prymal
