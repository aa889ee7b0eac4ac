#pragma once

// Pushforward along the map of d-th symmetric powers induced by an etale
// double cover of a genus-g curve by a genus-(2g-1) curve.
//
// Two independent routes:
//   * pushforward_closed: the closed formula
//       pi_*(eta~^p theta~^q) = 2^(d-p-q) sum_l C(g-1, q-l) q!/l! eta^(p+q-l) theta^l
//   * pushforward_oracle: expand eta~^p theta~^q in the product model of the
//     cover, push forward factor by factor, and read the result back in terms
//     of eta and theta.

#include "prymal/exterior_model.hpp"
#include "prymal/linalg.hpp"
#include "prymal/sympower.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace prymal {

class PushforwardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kOracleMaxGenus = 3;
inline constexpr int kOracleMaxDegree = 3;

inline int cover_genus(int g) { return 2 * g - 1; }

/// Image of eta~^p theta~^q on the base C^(d).
inline SymClass<> pushforward_closed(int g, int d, int p, int q) {
  if (g < 1) throw std::invalid_argument("base genus must be positive");
  if (p < 0 || q < 0) throw std::invalid_argument("negative exponent");
  if (p + q > d) throw PushforwardError("exceeds top degree");
  SymClass<> out(g, d);
  const Rational scale = pow(Rational(2), d - p - q);
  for (int l = 0; l <= q; ++l) {
    const Rational c = scale * Rational(binomial(g - 1, q - l)) * Rational(factorial(q)) /
                       Rational(factorial(l));
    out.add_term(p + q - l, l, c);
  }
  return out;
}

/// Linear extension of the closed formula to an arbitrary class upstairs.
template <class R>
SymClass<R> pushforward_closed(const SymClass<R>& upstairs, int base_genus) {
  if (upstairs.genus() != cover_genus(base_genus))
    throw std::invalid_argument("upstairs class must live on the genus 2g-1 cover");
  SymClass<R> out(base_genus, upstairs.degree());
  for (const auto& [m, c] : upstairs.terms()) {
    const auto image = pushforward_closed(base_genus, upstairs.degree(), m.first, m.second);
    for (const auto& [mi, ci] : image.terms()) out.add_term(mi.first, mi.second, c * R(ci));
  }
  return out;
}

using PushforwardTable = std::map<Monomial, SymClass<>>;

/// pi_*(eta~^p theta~^q) for all p + q <= max_degree.
inline PushforwardTable pushforward_table(int g, int d, int max_degree) {
  PushforwardTable table;
  for (int k = 0; k <= std::min(max_degree, d); ++k)
    for (int q = 0; q <= k; ++q) table.emplace(Monomial{k - q, q}, pushforward_closed(g, d, k - q, q));
  return table;
}

/// The cover's symplectic basis, indexed by pairs of the genus-(2g-1) model:
/// pair 0 is (lambda~_1, mu~_1); for base pair i >= 1, pair 2i-1 carries
/// (lambda_i^+, mu_i^+) and pair 2i carries (lambda_i^-, mu_i^-).
class DoubleCoverModel {
 public:
  explicit DoubleCoverModel(int base_genus, int factors) : g_(base_genus), d_(factors) {
    if (g_ < 1) throw std::invalid_argument("base genus must be positive");
  }

  int base_genus() const { return g_; }
  int cover_genus() const { return 2 * g_ - 1; }
  int factors() const { return d_; }

  ProductClass cover_eta() const { return ProductClass::eta(cover_genus(), d_); }
  ProductClass cover_theta() const { return ProductClass::theta(cover_genus(), d_); }

  /// eta~^p theta~^q in the cover model.
  ProductClass cover_monomial(int p, int q) const { return product_monomial(cover_genus(), d_, p, q); }

  /// Factorwise pushforward of a class on X~^d to X^d.
  ProductClass push(const ProductClass& x) const {
    ProductClass out(g_, d_);
    for (const auto& [key, c] : x.terms()) {
      std::uint64_t image = 0;
      Rational factor = c;
      for (int k = 0; k < d_; ++k) {
        const auto [s, mult] = push_state(ProductClass::state_of(key, k));
        image = ProductClass::set_state(image, k, s);
        factor *= mult;
      }
      out.add(image, factor);
    }
    return out;
  }

  /// Factorwise pullback of a class on X^d to X~^d.
  ProductClass pull(const ProductClass& y) const {
    ProductClass out(cover_genus(), d_);
    for (const auto& [key, c] : y.terms()) {
      // Each factor pulls back to a short sum; expand the tensor product.
      std::vector<std::pair<std::uint64_t, Rational>> partial{{0, c}};
      for (int k = 0; k < d_; ++k) {
        std::vector<std::pair<std::uint64_t, Rational>> next;
        for (const auto& [s, mult] : pull_state(ProductClass::state_of(key, k)))
          for (const auto& [pk, pc] : partial) next.emplace_back(ProductClass::set_state(pk, k, s), pc * mult);
        partial = std::move(next);
      }
      for (const auto& [pk, pc] : partial) out.add(pk, pc);
    }
    return out;
  }

 private:
  std::pair<FactorState, Rational> push_state(FactorState s) const {
    const int gc = cover_genus();
    if (s == 0) return {0, 2};
    if (s == 2 * gc + 1) return {static_cast<FactorState>(2 * g_ + 1), 1};
    const int pair = (s - 1) / 2;
    const bool is_lambda = (s % 2) == 1;
    if (pair == 0) return {is_lambda ? ProductClass::lambda_state(0) : ProductClass::mu_state(0), is_lambda ? 2 : 1};
    const int base = (pair + 1) / 2;
    return {is_lambda ? ProductClass::lambda_state(base) : ProductClass::mu_state(base), 1};
  }

  std::vector<std::pair<FactorState, Rational>> pull_state(FactorState s) const {
    const int gc = cover_genus();
    if (s == 0) return {{0, 1}};
    if (s == 2 * g_ + 1) return {{static_cast<FactorState>(2 * gc + 1), 2}};
    const int i = (s - 1) / 2;
    const bool is_lambda = (s % 2) == 1;
    auto st = [&](int pair) { return is_lambda ? ProductClass::lambda_state(pair) : ProductClass::mu_state(pair); };
    if (i == 0) return {{st(0), is_lambda ? 1 : 2}};
    return {{st(2 * i - 1), 1}, {st(2 * i), 1}};
  }

  int g_;
  int d_;
};

/// Express a class of the product model that lies in the eta-theta subring,
/// homogeneous of degree k, as a SymClass. When the monomials are dependent in
/// cohomology the reduced-echelon solution (free coefficients zero) is returned.
inline SymClass<> read_back(const ProductClass& x, int k) {
  const int g = x.genus(), d = x.factors();
  SymClass<> probe(g, d);
  std::vector<Monomial> monos;
  for (int b = 0; b <= k; ++b)
    if (probe.admissible(k - b, b)) monos.emplace_back(k - b, b);
  std::vector<ProductClass> images;
  std::map<std::uint64_t, std::size_t> rows;
  for (const auto& [a, b] : monos) {
    images.push_back(product_monomial(g, d, a, b));
    for (const auto& [key, c] : images.back().terms()) rows.try_emplace(key, rows.size());
  }
  for (const auto& [key, c] : x.terms()) rows.try_emplace(key, rows.size());
  Matrix m(rows.size(), monos.size());
  std::vector<Rational> rhs(rows.size(), Rational(0));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [key, c] : images[j].terms()) m(rows.at(key), j) = c;
  for (const auto& [key, c] : x.terms()) rhs[rows.at(key)] = c;
  Solution sol;
  try {
    sol = solve(m, rhs);
  } catch (const LinearSystemError&) {
    throw PushforwardError("class does not lie in the eta-theta subring");
  }
  SymClass<> out(g, d);
  for (std::size_t j = 0; j < monos.size(); ++j) out.add_term(monos[j].first, monos[j].second, sol.values[j]);
  return out;
}

inline void check_oracle_bounds(int g, int d) {
  if (g < 1 || d < 0 || g > kOracleMaxGenus || d > kOracleMaxDegree) throw PushforwardError("oracle bound");
}

/// Brute-force pushforward through the product model (small cases only).
inline SymClass<> pushforward_oracle(int g, int d, int p, int q) {
  check_oracle_bounds(g, d);
  if (p < 0 || q < 0) throw std::invalid_argument("negative exponent");
  if (p + q > d) throw PushforwardError("exceeds top degree");
  const DoubleCoverModel model(g, d);
  return read_back(model.push(model.cover_monomial(p, q)), p + q);
}

/// Projection formula pi_*(x~ . pi^* y) = pi_*(x~) . y.
///
/// Within the oracle bounds this is checked in the product model for every
/// x~ = eta~^p theta~^q and every y among eta, theta, xi_i, zeta_i. At any
/// size it also checks the closed formula against pi^* eta = 2 eta~, i.e.
/// 2 pi_*(eta~^(p+1) theta~^q) = pi_*(eta~^p theta~^q) . eta.
inline bool projection_formula_check(int g, int d) {
  for (int k = 0; k < d; ++k)
    for (int q = 0; q <= k; ++q) {
      const int p = k - q;
      const auto lhs = Rational(2) * pushforward_closed(g, d, p + 1, q);
      const auto rhs = pushforward_closed(g, d, p, q) * SymClass<>::eta(g, d);
      if (lhs != rhs && !(g <= kOracleMaxGenus && d <= kOracleMaxDegree && equal_in_cohomology(lhs, rhs)))
        return false;
    }
  if (g > kOracleMaxGenus || d > kOracleMaxDegree) return true;

  const DoubleCoverModel model(g, d);
  std::vector<ProductClass> ys{ProductClass::eta(g, d), ProductClass::theta(g, d)};
  for (int i = 0; i < g; ++i) {
    ys.push_back(ProductClass::xi(g, d, i));
    ys.push_back(ProductClass::zeta(g, d, i));
  }
  for (int k = 0; k <= d; ++k)
    for (int q = 0; q <= k; ++q) {
      const ProductClass x = model.cover_monomial(k - q, q);
      const ProductClass pushed = model.push(x);
      for (const auto& y : ys)
        if (!(model.push(x * model.pull(y)) == pushed * y)) return false;
    }
  return true;
}

}  // namespace prymal
