#pragma once

// Cohomology of the d-fold product X^d of a genus-g curve, modeled as the
// d-fold graded tensor power of H*(X) = <1> + H^1 + <pt>.
//
// H^1 carries a symplectic basis lambda_i, mu_i with lambda_i mu_i = pt and
// mu_i lambda_i = -pt. A basis monomial is rho_1^*(s_1) ... rho_d^*(s_d) in
// increasing factor order; reordering odd classes produces Koszul signs.
// Classes on X^(d) are represented by their (symmetric) pullbacks to X^d.

#include "prymal/rational.hpp"
#include "prymal/sympower.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace prymal {

/// Per-factor state: 0 is the unit, 1..2g are H^1 basis elements
/// (lambda_i = 2i + 1, mu_i = 2i + 2 for i = 0..g-1), 2g + 1 is the point.
using FactorState = std::uint8_t;

class ProductClass {
 public:
  static constexpr int kBitsPerFactor = 6;
  static constexpr int kMaxFactors = 10;

  ProductClass(int genus, int factors) : g_(genus), d_(factors) {
    if (genus < 0 || 2 * genus + 1 >= (1 << kBitsPerFactor))
      throw std::invalid_argument("genus too large for the product model");
    if (factors < 0 || factors > kMaxFactors)
      throw std::invalid_argument("too many factors for the product model");
  }

  int genus() const { return g_; }
  int factors() const { return d_; }
  FactorState unit_state() const { return 0; }
  FactorState point_state() const { return static_cast<FactorState>(2 * g_ + 1); }
  static FactorState lambda_state(int i) { return static_cast<FactorState>(2 * i + 1); }
  static FactorState mu_state(int i) { return static_cast<FactorState>(2 * i + 2); }

  const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  static ProductClass unit(int g, int d) {
    ProductClass c(g, d);
    c.add(0, 1);
    return c;
  }

  /// rho_k^*(state), the pullback of a single-curve class along projection k.
  static ProductClass pulled_back(int g, int d, int k, FactorState s) {
    ProductClass c(g, d);
    c.add(set_state(0, k, s), 1);
    return c;
  }

  /// sum_k rho_k^*(state)
  static ProductClass diagonal_sum(int g, int d, FactorState s) {
    ProductClass c(g, d);
    for (int k = 0; k < d; ++k) c.add(set_state(0, k, s), 1);
    return c;
  }

  /// Pullback of eta: sum of point classes over the factors.
  static ProductClass eta(int g, int d) { return diagonal_sum(g, d, static_cast<FactorState>(2 * g + 1)); }

  /// xi_i and zeta_i of the symplectic pair i.
  static ProductClass xi(int g, int d, int i) { return diagonal_sum(g, d, lambda_state(i)); }
  static ProductClass zeta(int g, int d, int i) { return diagonal_sum(g, d, mu_state(i)); }

  /// Pullback of theta: sum_i xi_i zeta_i.
  static ProductClass theta(int g, int d) {
    ProductClass t(g, d);
    for (int i = 0; i < g; ++i) t += xi(g, d, i) * zeta(g, d, i);
    return t;
  }

  static FactorState state_of(std::uint64_t key, int k) {
    return static_cast<FactorState>((key >> (kBitsPerFactor * k)) & ((1u << kBitsPerFactor) - 1));
  }
  static std::uint64_t set_state(std::uint64_t key, int k, FactorState s) {
    const std::uint64_t mask = ((std::uint64_t{1} << kBitsPerFactor) - 1) << (kBitsPerFactor * k);
    return (key & ~mask) | (std::uint64_t{s} << (kBitsPerFactor * k));
  }

  /// Parity of the cohomological degree of a factor state.
  bool odd(FactorState s) const { return s != 0 && s != point_state(); }

  void add(std::uint64_t key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ProductClass& operator+=(const ProductClass& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  ProductClass& operator-=(const ProductClass& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend ProductClass operator+(ProductClass a, const ProductClass& b) { return a += b; }
  friend ProductClass operator-(ProductClass a, const ProductClass& b) { return a -= b; }

  friend ProductClass operator*(const Rational& s, const ProductClass& x) {
    ProductClass out(x.g_, x.d_);
    for (const auto& [k, c] : x.terms_) out.add(k, s * c);
    return out;
  }

  friend ProductClass operator*(const ProductClass& x, const ProductClass& y) {
    x.check_compatible(y);
    ProductClass out(x.g_, x.d_);
    for (const auto& [kx, cx] : x.terms_)
      for (const auto& [ky, cy] : y.terms_) {
        int sign = 1;
        const std::uint64_t key = x.multiply_keys(kx, ky, sign);
        if (sign != 0) out.add(key, sign > 0 ? Rational(cx * cy) : Rational(-(cx * cy)));
      }
    return out;
  }

  friend bool operator==(const ProductClass& a, const ProductClass& b) {
    return a.g_ == b.g_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }

  /// Integral over X^d: coefficient of pt x ... x pt.
  Rational integral() const {
    std::uint64_t key = 0;
    for (int k = 0; k < d_; ++k) key = set_state(key, k, point_state());
    const auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

 private:
  /// Product of two basis monomials; sign is set to 0 when it vanishes.
  std::uint64_t multiply_keys(std::uint64_t a, std::uint64_t b, int& sign) const {
    std::uint64_t out = 0;
    // Moving b_k left past a_{k+1..d} costs (-1)^{|b_k| * sum_{j>k} |a_j|}.
    int odd_a_after = 0;
    for (int k = d_ - 1; k >= 0; --k) {
      const FactorState sa = state_of(a, k);
      const FactorState sb = state_of(b, k);
      if (odd(sb) && (odd_a_after % 2 == 1)) sign = -sign;
      if (odd(sa)) ++odd_a_after;
      FactorState prod = 0;
      if (sa == 0) {
        prod = sb;
      } else if (sb == 0) {
        prod = sa;
      } else if (odd(sa) && odd(sb)) {
        // lambda_i mu_i = pt, mu_i lambda_i = -pt
        const int ia = (sa - 1) / 2, ib = (sb - 1) / 2;
        if (ia != ib || sa == sb) {
          sign = 0;
          return 0;
        }
        if (sa > sb) sign = -sign;
        prod = point_state();
      } else {
        sign = 0;
        return 0;
      }
      out = set_state(out, k, prod);
    }
    return out;
  }

  void check_compatible(const ProductClass& o) const {
    if (g_ != o.g_ || d_ != o.d_) throw std::invalid_argument("product classes on different spaces");
  }

  int g_;
  int d_;
  std::map<std::uint64_t, Rational> terms_;
};

/// eta^a theta^b pulled back to X^d.
inline ProductClass product_monomial(int g, int d, int a, int b) {
  const ProductClass eta = ProductClass::eta(g, d);
  const ProductClass theta = ProductClass::theta(g, d);
  ProductClass out = ProductClass::unit(g, d);
  for (int i = 0; i < a; ++i) out = out * eta;
  for (int i = 0; i < b; ++i) out = out * theta;
  return out;
}

/// Pullback of a SymClass along X^d -> X^(d).
inline ProductClass to_product_model(const SymClass<>& x) {
  ProductClass out(x.genus(), x.degree());
  for (const auto& [m, c] : x.terms()) out += c * product_monomial(x.genus(), x.degree(), m.first, m.second);
  return out;
}

/// Integral over C^(d) computed in the product model: (1/d!) times the
/// integral of the pullback over C^d.
inline Rational integral_via_product_model(int g, int d, int a, int b) {
  if (a + b != d) throw std::invalid_argument("not a top-degree monomial");
  return product_monomial(g, d, a, b).integral() / Rational(factorial(d));
}

/// Two classes agree in H*(C^(d), Q) when their pullbacks to C^d agree.
inline bool equal_in_cohomology(const SymClass<>& x, const SymClass<>& y) {
  return to_product_model(x) == to_product_model(y);
}

}  // namespace prymal
