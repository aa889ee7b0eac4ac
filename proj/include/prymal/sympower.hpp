#pragma once

// The subring of H*(C^(d), Q) generated by eta and theta for a genus-g curve C.
//
// eta is the class of C^(d-1) + point and theta the pullback of the theta class
// of the Jacobian. Both have cohomological degree 2; the grading used here is
// the complex one, so eta^a theta^b sits in degree a + b. Monomials with
// a + b > d or b > g vanish and are never stored.

#include "prymal/linalg.hpp"
#include "prymal/polynomial.hpp"
#include "prymal/rational.hpp"
#include "prymal/series.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace prymal {

inline bool is_zero_coefficient(const Rational& c) { return c == 0; }
inline bool is_zero_coefficient(const Polynomial& c) { return c.is_zero(); }

inline std::string coefficient_string(const Rational& c) { return to_string(c); }
inline std::string coefficient_string(const Polynomial& c) { return c.to_string(); }

/// Exponent pair (a, b) of eta^a theta^b.
using Monomial = std::pair<int, int>;

template <class R = Rational>
class SymClass {
 public:
  SymClass(int genus, int degree) : g_(genus), d_(degree) {
    if (g_ < 0 || d_ < 0) throw std::invalid_argument("genus and degree must be non-negative");
  }

  static SymClass unit(int g, int d) { return monomial(g, d, 0, 0, R(1)); }
  static SymClass eta(int g, int d) { return monomial(g, d, 1, 0, R(1)); }
  static SymClass theta(int g, int d) { return monomial(g, d, 0, 1, R(1)); }
  static SymClass monomial(int g, int d, int a, int b, const R& c) {
    SymClass s(g, d);
    s.add_term(a, b, c);
    return s;
  }

  int genus() const { return g_; }
  int degree() const { return d_; }
  const std::map<Monomial, R>& terms() const { return terms_; }

  /// Whether eta^a theta^b survives in this ring.
  bool admissible(int a, int b) const { return a >= 0 && b >= 0 && a + b <= d_ && b <= g_; }

  R coefficient(int a, int b) const {
    const auto it = terms_.find({a, b});
    return it == terms_.end() ? R(0) : it->second;
  }

  void add_term(int a, int b, const R& c) {
    if (!admissible(a, b) || is_zero_coefficient(c)) return;
    auto [it, inserted] = terms_.try_emplace(Monomial{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coefficient(it->second)) terms_.erase(it);
    }
  }

  R constant_term() const { return coefficient(0, 0); }
  bool is_zero() const { return terms_.empty(); }

  /// Homogeneous component of degree k.
  SymClass degree_part(int k) const {
    SymClass out(g_, d_);
    for (const auto& [m, c] : terms_)
      if (m.first + m.second == k) out.terms_.emplace(m, c);
    return out;
  }

  /// Highest total degree present, or -1 for zero.
  int max_degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) best = std::max(best, m.first + m.second);
    return best;
  }

  SymClass& operator+=(const SymClass& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, c);
    return *this;
  }
  SymClass& operator-=(const SymClass& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, R(0) - c);
    return *this;
  }
  friend SymClass operator+(SymClass a, const SymClass& b) { return a += b; }
  friend SymClass operator-(SymClass a, const SymClass& b) { return a -= b; }
  SymClass operator-() const { return SymClass(g_, d_) - *this; }

  friend SymClass operator*(const SymClass& x, const SymClass& y) {
    x.check_compatible(y);
    SymClass out(x.g_, x.d_);
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_)
        out.add_term(mx.first + my.first, mx.second + my.second, cx * cy);
    return out;
  }

  friend SymClass operator*(const R& c, const SymClass& x) {
    SymClass out(x.g_, x.d_);
    for (const auto& [m, v] : x.terms_) out.add_term(m.first, m.second, c * v);
    return out;
  }

  friend bool operator==(const SymClass& a, const SymClass& b) {
    return a.g_ == b.g_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SymClass& a, const SymClass& b) { return !(a == b); }

  /// Same class with coefficients mapped into another ring.
  template <class S, class F>
  SymClass<S> map_coefficients(F&& f) const {
    SymClass<S> out(g_, d_);
    for (const auto& [m, c] : terms_) out.add_term(m.first, m.second, f(c));
    return out;
  }

  /// Ascending degree; within a degree, higher powers of eta first.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::map<std::pair<int, int>, const R*> ordered;
    for (const auto& [m, c] : terms_) ordered.emplace(std::pair{m.first + m.second, m.second}, &c);
    std::string out;
    for (const auto& [key, cp] : ordered) {
      const int b = key.second;
      const int a = key.first - b;
      std::string coeff = coefficient_string(*cp);
      bool neg = false;
      if constexpr (std::is_same_v<R, Rational>) {
        neg = *cp < 0;
        if (neg) coeff = prymal::to_string(Rational(-*cp));
      } else {
        coeff = "(" + coeff + ")";
      }
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono;
      if (a > 0) mono += a == 1 ? "eta" : "eta^" + std::to_string(a);
      if (b > 0) mono += std::string(a > 0 ? "*" : "") + (b == 1 ? "theta" : "theta^" + std::to_string(b));
      if (mono.empty()) {
        out += coeff;
      } else if (coeff == "1") {
        out += mono;
      } else {
        out += coeff + "*" + mono;
      }
    }
    return out;
  }

 private:
  void check_compatible(const SymClass& o) const {
    if (g_ != o.g_ || d_ != o.d_)
      throw std::invalid_argument("classes live on different symmetric powers");
  }

  int g_;
  int d_;
  std::map<Monomial, R> terms_;
};

/// Integral of eta^a theta^b over C^(d): g!/(g-b)! when b <= g, else 0.
inline Rational eval_integral(int g, int d, int a, int b) {
  if (a < 0 || b < 0 || a + b != d) throw std::invalid_argument("not a top-degree monomial");
  return Rational(falling_factorial(g, b));
}

/// Integral over C^(d) of the top-degree part.
template <class R>
R integrate(const SymClass<R>& x) {
  R total(0);
  for (const auto& [m, c] : x.terms())
    if (m.first + m.second == x.degree()) total += c * R(eval_integral(x.genus(), x.degree(), m.first, m.second));
  return total;
}

/// f(y) for a univariate series f and an element y without constant term.
template <class R>
SymClass<R> apply_series(const PowerSeries& f, const SymClass<R>& y) {
  if (!is_zero_coefficient(y.constant_term()))
    throw std::invalid_argument("series argument must have no constant term");
  if (f.min_degree() < 0) throw std::invalid_argument("cannot apply a Laurent series");
  const int d = y.degree();
  if (f.order() <= d)
    throw SeriesError("insufficient precision: need " + std::to_string(d + 1) + " terms, have " +
                      std::to_string(f.order()));
  SymClass<R> out(y.genus(), d);
  SymClass<R> power = SymClass<R>::unit(y.genus(), d);
  for (int k = 0; k <= d; ++k) {
    if (k > 0) power = power * y;
    if (power.is_zero()) break;
    if (f[k] != 0) out += R(f[k]) * power;
  }
  return out;
}

template <class R>
SymClass<R> exp(const SymClass<R>& y) {
  return apply_series(series_exp(PowerSeries::variable(y.degree() + 1)), y);
}

/// log(x) for x with constant term 1.
template <class R>
SymClass<R> log(const SymClass<R>& x) {
  if (x.constant_term() != R(1)) throw std::invalid_argument("log requires constant term 1");
  const int N = x.degree() + 1;
  const PowerSeries log1p = series_log(PowerSeries::polynomial({1, 1}, N));
  return apply_series(log1p, x - SymClass<R>::unit(x.genus(), x.degree()));
}

/// Total Chern class of C^(d): (1 + eta)^(d - g + 1) exp(-theta / (1 + eta)).
inline SymClass<> chern_total_sympower(int g, int d) {
  if (g < 0 || d < 1) throw std::invalid_argument("need g >= 0 and d >= 1");
  const int N = d + 1;
  const auto eta = SymClass<>::eta(g, d);
  const auto theta = SymClass<>::theta(g, d);
  const auto one_plus_eta_pow = apply_series(binomial_series(d - g + 1, N), eta);
  const auto inv_one_plus_eta = apply_series(binomial_series(-1, N), eta);
  return one_plus_eta_pow * exp(-(theta * inv_one_plus_eta));
}

namespace detail {

/// Coefficients a_k of log(z / (1 - e^{-z})) = sum a_k z^k.
inline PowerSeries log_todd_generator(int order) {
  // (1 - e^{-z}) / z = sum_{k>=0} (-1)^k z^k / (k+1)!
  std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
  for (int k = 0; k < order; ++k) c[static_cast<std::size_t>(k)] = Rational(sign_power(k)) / Rational(factorial(k + 1));
  const PowerSeries denom(0, std::move(c), order);
  return series_log(series_inverse(denom));
}

/// sum_k a_k p_k, where p_k are the Chern-root power sums of c.
inline SymClass<> log_todd(const SymClass<>& c) {
  if (c.constant_term() != 1) throw std::invalid_argument("total Chern class must have constant term 1");
  const int d = c.degree();
  // log c(t) = sum_k (-1)^{k-1} p_k / k, so p_k = (-1)^{k-1} k [log c]_k.
  const auto logc = log(c);
  const PowerSeries a = log_todd_generator(d + 1);
  SymClass<> out(c.genus(), d);
  for (int k = 1; k <= d; ++k) {
    const Rational factor = a[k] * Rational(sign_power(k - 1) * k);
    if (factor != 0) out += factor * logc.degree_part(k);
  }
  return out;
}

}  // namespace detail

/// Todd class from a total Chern class, through Newton power sums.
inline SymClass<> todd_of(const SymClass<>& c) { return exp(detail::log_todd(c)); }

inline SymClass<> todd_inverse_of(const SymClass<>& c) { return exp(-detail::log_todd(c)); }

/// A projective space P^s sitting in a fiber of the Abel-Jacobi map of C^(d).
struct ProjClass {
  int dimension = 0;
  SymClass<> cls{0, 0};
};

/// The class in span{eta^(c-k) theta^k : k <= s} (c = d - s) whose pairings
/// reproduce the restriction to P^s: eta restricts to the hyperplane class and
/// theta to zero, so the pairing with eta^(s-j) theta^j is 1 for j = 0 and
/// 0 otherwise.
inline ProjClass linear_subspace_class(int g, int d, int s) {
  if (s < 0 || s > d) throw std::invalid_argument("subspace dimension out of range");
  const int codim = d - s;
  const std::size_t n = static_cast<std::size_t>(s) + 1;
  Matrix pairing(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const int b = static_cast<int>(j + k);
      pairing(j, k) = eval_integral(g, d, d - b, b);
    }
  std::vector<Rational> rhs(n, Rational(0));
  rhs[0] = 1;
  const auto x = solve_unique(pairing, rhs);
  ProjClass out{s, SymClass<>(g, d)};
  for (std::size_t k = 0; k < n; ++k)
    out.cls.add_term(codim - static_cast<int>(k), static_cast<int>(k), x[k]);
  return out;
}

struct SecantClasses {
  ProjClass full;
  std::optional<ProjClass> pencil;  // absent when r = 0
  ProjClass point;
};

/// Classes of a complete g^r_d, a pencil inside it, and a point, in C^(d).
inline SecantClasses secant_classes(int g, int d, int r) {
  if (r < 0) throw std::invalid_argument("linear system dimension must be non-negative");
  if (r > d) throw std::invalid_argument("linear system dimension exceeds the degree");
  SecantClasses out{linear_subspace_class(g, d, r), std::nullopt, linear_subspace_class(g, d, 0)};
  if (r >= 1) out.pencil = linear_subspace_class(g, d, 1);
  return out;
}

}  // namespace prymal
