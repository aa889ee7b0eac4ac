#pragma once

// Truncated univariate formal power and Laurent series over the rationals.
//
// A PowerSeries knows its coefficients for exponents in [min_degree, order).
// Nothing at or beyond `order` is ever read or written; arithmetic shrinks the
// order to whatever the operands actually determine.

#include "prymal/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prymal {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultTruncation = 12;
inline constexpr int kDeepestPole = -16;

/// Default truncation order; PRYMAL_TRUNCATION overrides it when set to a
/// positive integer.
inline int default_truncation() {
  if (const char* env = std::getenv("PRYMAL_TRUNCATION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 4096) return static_cast<int>(v);
  }
  return kDefaultTruncation;
}

class PowerSeries {
 public:
  /// The zero series known through `order`.
  explicit PowerSeries(int order = default_truncation()) : min_degree_(0), order_(order) {
    if (order_ < min_degree_) order_ = min_degree_;
    coeffs_.assign(static_cast<std::size_t>(order_ - min_degree_), Rational(0));
  }

  /// Coefficients c[0], c[1], ... attached to exponents min_degree, min_degree+1, ...
  PowerSeries(int min_degree, std::vector<Rational> coeffs, int order)
      : min_degree_(min_degree), order_(order), coeffs_(std::move(coeffs)) {
    if (min_degree_ < kDeepestPole)
      throw SeriesError("pole of order " + std::to_string(-min_degree_) +
                        " exceeds the supported principal part");
    if (order_ < min_degree_) order_ = min_degree_;
    coeffs_.resize(static_cast<std::size_t>(order_ - min_degree_), Rational(0));
  }

  static PowerSeries constant(const Rational& c, int order = default_truncation()) {
    PowerSeries s(order);
    if (order > 0) s.coeffs_[0] = c;
    return s;
  }

  /// The monomial c * z^k.
  static PowerSeries monomial(int k, const Rational& c, int order = default_truncation()) {
    const int lo = std::min(0, k);
    std::vector<Rational> v(static_cast<std::size_t>(std::max(order - lo, 0)), Rational(0));
    if (k < order) v[static_cast<std::size_t>(k - lo)] = c;
    return PowerSeries(lo, std::move(v), order);
  }

  static PowerSeries variable(int order = default_truncation()) { return monomial(1, 1, order); }

  /// Polynomial with coefficients p[0] + p[1] z + ...
  static PowerSeries polynomial(const std::vector<Rational>& p, int order = default_truncation()) {
    PowerSeries s(order);
    for (std::size_t k = 0; k < p.size() && static_cast<int>(k) < order; ++k) s.coeffs_[k] = p[k];
    return s;
  }

  int min_degree() const { return min_degree_; }
  int order() const { return order_; }

  /// Coefficient of z^k; throws when k is at or beyond the truncation order.
  const Rational& operator[](int k) const {
    static const Rational zero(0);
    if (k >= order_)
      throw SeriesError("coefficient z^" + std::to_string(k) + " is beyond truncation order " +
                        std::to_string(order_));
    if (k < min_degree_) return zero;
    return coeffs_[static_cast<std::size_t>(k - min_degree_)];
  }

  void set(int k, const Rational& c) {
    if (k >= order_ || k < min_degree_)
      throw SeriesError("write outside the known window at z^" + std::to_string(k));
    coeffs_[static_cast<std::size_t>(k - min_degree_)] = c;
  }

  /// Lowest exponent with a nonzero coefficient, if any.
  std::optional<int> valuation() const {
    for (int k = min_degree_; k < order_; ++k)
      if ((*this)[k] != 0) return k;
    return std::nullopt;
  }

  bool is_zero() const { return !valuation().has_value(); }

  /// Same series with order lowered to `order` (never raised).
  PowerSeries truncated(int order) const {
    if (order >= order_) return *this;
    std::vector<Rational> v(coeffs_.begin(),
                            coeffs_.begin() + std::max(0, order - min_degree_));
    return PowerSeries(min_degree_, std::move(v), order);
  }

  /// Multiply by z^k.
  PowerSeries shifted(int k) const {
    return PowerSeries(min_degree_ + k, coeffs_, order_ + k);
  }

  /// Equality on the common known window.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    const int lo = std::min(a.min_degree_, b.min_degree_);
    const int hi = std::min(a.order_, b.order_);
    for (int k = lo; k < hi; ++k)
      if (a[k] != b[k]) return false;
    return true;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    return combine(a, b, 1);
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    return combine(a, b, -1);
  }
  PowerSeries operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend PowerSeries operator*(const Rational& c, PowerSeries s) {
    for (auto& x : s.coeffs_) x *= c;
    return s;
  }
  friend PowerSeries operator*(PowerSeries s, const Rational& c) { return c * std::move(s); }

  /// Cauchy product. With a known on [ma, Na) and b on [mb, Nb), the product
  /// is known on [ma + mb, min(Na + mb, Nb + ma)).
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int lo = a.min_degree_ + b.min_degree_;
    const int order = std::min(a.order_ + b.min_degree_, b.order_ + a.min_degree_);
    std::vector<Rational> v(static_cast<std::size_t>(std::max(order - lo, 0)), Rational(0));
    for (int i = a.min_degree_; i < a.order_; ++i) {
      const Rational& ai = a[i];
      if (ai == 0) continue;
      for (int j = b.min_degree_; j < b.order_ && i + j < order; ++j) {
        const Rational& bj = b[j];
        if (bj == 0) continue;
        v[static_cast<std::size_t>(i + j - lo)] += ai * bj;
      }
    }
    return PowerSeries(lo, std::move(v), order);
  }

  std::string to_string(char var = 'z') const {
    std::string out;
    for (int k = min_degree_; k < order_; ++k) {
      const Rational& c = (*this)[k];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const bool unit = mag == 1;
      if (k == 0 || !unit) out += prymal::to_string(mag);
      if (k != 0) {
        if (!unit) out += "*";
        out += var;
        if (k != 1) out += "^" + std::to_string(k);
      }
    }
    if (out.empty()) out = "0";
    return out + " + O(" + var + "^" + std::to_string(order_) + ")";
  }

 private:
  static PowerSeries combine(const PowerSeries& a, const PowerSeries& b, int sign) {
    const int lo = std::min(a.min_degree_, b.min_degree_);
    const int order = std::min(a.order_, b.order_);
    std::vector<Rational> v(static_cast<std::size_t>(std::max(order - lo, 0)), Rational(0));
    for (int k = lo; k < order; ++k) {
      Rational c = a[k];
      if (sign > 0) c += b[k]; else c -= b[k];
      v[static_cast<std::size_t>(k - lo)] = c;
    }
    return PowerSeries(lo, std::move(v), order);
  }

  int min_degree_;
  int order_;
  std::vector<Rational> coeffs_;
};

/// Sum of s^k / k!; s must have no constant term (and no principal part).
inline PowerSeries series_exp(const PowerSeries& s) {
  const int N = s.order();
  for (int k = s.min_degree(); k < std::min(1, N); ++k)
    if (s[k] != 0) throw SeriesError("exp of unit-shifted series unsupported");
  std::vector<Rational> body(static_cast<std::size_t>(std::max(N, 0)), Rational(0));
  for (int k = 1; k < N; ++k) body[static_cast<std::size_t>(k)] = s[k];
  const PowerSeries x(0, std::move(body), N);
  PowerSeries result = PowerSeries::constant(1, N);
  PowerSeries term = PowerSeries::constant(1, N);
  for (int k = 1; k < N; ++k) {
    term = (term * x) * Rational(1, k);
    result = result + term;
  }
  return result;
}

/// Multiplicative inverse of a series with nonzero constant term.
inline PowerSeries series_inverse(const PowerSeries& s) {
  const int N = s.order();
  if (N <= 0 || s[0] == 0) throw SeriesError("inverse requires a nonzero constant term");
  for (int k = s.min_degree(); k < 0; ++k)
    if (s[k] != 0) throw SeriesError("inverse requires a power series without principal part");
  std::vector<Rational> inv(static_cast<std::size_t>(N), Rational(0));
  const Rational a0inv = Rational(1) / s[0];
  inv[0] = a0inv;
  for (int n = 1; n < N; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += s[k] * inv[static_cast<std::size_t>(n - k)];
    inv[static_cast<std::size_t>(n)] = -acc * a0inv;
  }
  return PowerSeries(0, std::move(inv), N);
}

/// log of a series with constant term 1, via the integral of s'/s.
inline PowerSeries series_log(const PowerSeries& s) {
  const int N = s.order();
  if (N <= 0 || s[0] != 1) throw SeriesError("log requires constant term 1");
  for (int k = s.min_degree(); k < 0; ++k)
    if (s[k] != 0) throw SeriesError("log requires a power series without principal part");
  std::vector<Rational> d(static_cast<std::size_t>(std::max(N - 1, 0)), Rational(0));
  for (int k = 1; k < N; ++k) d[static_cast<std::size_t>(k - 1)] = s[k] * k;
  const PowerSeries q = PowerSeries(0, std::move(d), N - 1) * series_inverse(s.truncated(N - 1));
  std::vector<Rational> out(static_cast<std::size_t>(N), Rational(0));
  for (int k = 1; k < N; ++k) out[static_cast<std::size_t>(k)] = q[k - 1] / k;
  return PowerSeries(0, std::move(out), N);
}

/// (1 + z)^e for any integer e, as a binomial series.
inline PowerSeries binomial_series(int e, int order = default_truncation()) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(order, 0)), Rational(0));
  for (int k = 0; k < order; ++k) c[static_cast<std::size_t>(k)] = Rational(binomial(e, k));
  return PowerSeries(0, std::move(c), order);
}

/// Non-negative integer power by repeated multiplication.
inline PowerSeries series_pow(const PowerSeries& s, int e) {
  if (e < 0) throw SeriesError("negative power; invert first");
  if (e == 0) return PowerSeries::constant(1, s.order());
  PowerSeries r = s;
  for (int i = 1; i < e; ++i) r = r * s;
  return r;
}

/// Coefficient of z^-1.
inline Rational residue_at_zero(const PowerSeries& s) {
  if (s.order() <= -1)
    throw SeriesError("insufficient precision: residue lies beyond truncation order " +
                      std::to_string(s.order()));
  return s[-1];
}

/// Composition s(t(z)). t must vanish at 0; Laurent s is allowed when t has a
/// nonzero leading coefficient (negative powers of t are taken by inversion).
inline PowerSeries substitute(const PowerSeries& s, const PowerSeries& t) {
  for (int k = t.min_degree(); k < std::min(1, t.order()); ++k)
    if (t[k] != 0) throw SeriesError("substituted series must have no constant term");
  const auto val = t.valuation();
  if (!val) throw SeriesError("cannot substitute a series with no known nonzero term");
  const int m = *val;
  // t = z^m u with u(0) != 0, u known to relative precision P.
  const int P = t.order() - m;
  std::vector<Rational> uc(static_cast<std::size_t>(P), Rational(0));
  for (int k = 0; k < P; ++k) uc[static_cast<std::size_t>(k)] = t[m + k];
  const PowerSeries u(0, std::move(uc), P);

  int order = m * s.order();
  for (int k = s.min_degree(); k < s.order(); ++k)
    if (s[k] != 0) order = std::min(order, m * k + P);
  const int lo = std::min(0, m * s.min_degree());
  PowerSeries result(lo, {}, order);

  auto accumulate = [&](int k, const PowerSeries& uk) {
    // s_k z^{mk} u^k
    const PowerSeries term = (s[k] * uk).shifted(m * k);
    for (int e = std::max(term.min_degree(), lo); e < order; ++e)
      result.set(e, result[e] + term[e]);
  };
  if (s.min_degree() < 0) {
    const PowerSeries uinv = series_inverse(u);
    PowerSeries uk = PowerSeries::constant(1, P);
    for (int k = -1; k >= s.min_degree(); --k) {
      uk = uk * uinv;
      if (s[k] != 0) accumulate(k, uk);
    }
  }
  PowerSeries uk = PowerSeries::constant(1, P);
  for (int k = 0; k < s.order(); ++k) {
    if (k > 0) uk = uk * u;
    if (m * k >= order) break;
    if (s[k] != 0) accumulate(k, uk);
  }
  return result;
}

}  // namespace prymal
