#pragma once

// Combinatorics of the primal cohomology K of a theta divisor in a g-dimensional
// ppav: Hodge numbers of K and of its (+1)-eigenpart under -1, ranks of the
// eigenparts, Euler characteristics, and the residue computations that feed
// the quotient identity.

#include "prymal/rational.hpp"
#include "prymal/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace prymal {

class HodgeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// h^{p, g-1-p} for p = 0..g-1.
struct HodgeVector {
  int g = 0;
  std::vector<Integer> values;

  Integer total() const {
    Integer s = 0;
    for (const auto& v : values) s += v;
    return s;
  }
  bool palindromic() const { return std::equal(values.begin(), values.end(), values.rbegin()); }
  bool nonnegative() const {
    return std::all_of(values.begin(), values.end(), [](const Integer& v) { return v >= 0; });
  }
  friend bool operator==(const HodgeVector&, const HodgeVector&) = default;
};

struct RankPair {
  Integer plus;
  Integer minus;
};

namespace detail {

inline void require_genus(int g) {
  if (g < 2) throw std::invalid_argument("genus must be at least 2, got " + std::to_string(g));
}

inline Integer choose(int n, int k) { return (k < 0 || k > n) ? Integer(0) : binomial(n, k); }

inline int epsilon(int k) { return k % 2 == 0 ? 1 : 0; }

inline int delta(int g, int p) { return (p > 0 && p < g - 1) ? 1 : 0; }

}  // namespace detail

/// Eulerian number <g, p> by the alternating sum.
inline Integer eulerian(int g, int p) {
  if (p < 0 || p >= g) throw std::out_of_range("eulerian index p=" + std::to_string(p) + " outside [0, g)");
  Integer s = 0;
  for (int k = 0; k <= p; ++k) s += Integer(sign_power(k)) * detail::choose(g + 1, k) * pow(Integer(p + 1 - k), g);
  return s;
}

inline HodgeVector hodge_K(int g) {
  detail::require_genus(g);
  HodgeVector h{g, {}};
  for (int p = 0; p < g; ++p)
    h.values.push_back(eulerian(g, p) - detail::choose(g, p) * detail::choose(g - 1, p) +
                       detail::choose(g, p + 1) * detail::choose(g - 1, p - 1));
  return h;
}

inline Integer checked_hodge_number(const Rational& v, int g, int p) {
  if (!is_integer(v) || v < 0)
    throw HodgeError("formula inconsistency at g=" + std::to_string(g) + ", p=" + std::to_string(p) + ": " +
                     to_string(v));
  return to_integer(v);
}

/// Hodge numbers of the invariant part, by the closed formula; the extremal
/// entries vanish.
inline HodgeVector hodge_Kplus(int g) {
  detail::require_genus(g);
  using detail::choose;
  using detail::epsilon;
  HodgeVector h{g, {}};
  for (int p = 0; p < g; ++p) {
    if (p == 0 || p == g - 1) {
      h.values.push_back(0);
      continue;
    }
    Integer first = 0, second = 0;
    for (int q = 0; q <= g - 1 - p; ++q) first += choose(g, q) * epsilon(p + q);
    for (int q = g - p; q <= g - 1; ++q) second += choose(g, q + 1) * epsilon(p + q);
    const Rational inner = Rational(choose(g, p) * first + choose(g, p + 1) * second) -
                           Rational(choose(g - 1, p) * (pow(Integer(2), g) - 1), 2);
    const Rational v = Rational(eulerian(g, p), 2) + Rational(sign_power(g)) * inner;
    h.values.push_back(checked_hodge_number(v, g, p));
  }
  return h;
}

inline HodgeVector hodge_Kminus(int g) {
  const HodgeVector k = hodge_K(g), kp = hodge_Kplus(g);
  HodgeVector h{g, {}};
  for (int p = 0; p < g; ++p) h.values.push_back(k.values[p] - kp.values[p]);
  return h;
}

/// Closed-form ranks of the two eigenparts, with the printed parity split.
inline RankPair rank_Kpm(int g) {
  detail::require_genus(g);
  const Integer half_fact = factorial(g) / 2;
  const Integer two_term = pow(Integer(2), g - 2) * (pow(Integer(2), g) + 1);
  const Integer up = detail::choose(2 * g, g + 1), mid = detail::choose(2 * g, g);
  RankPair r;
  if (g % 2 == 0) {
    r.minus = half_fact - two_term + up;
    r.plus = half_fact + two_term - mid;
  } else {
    r.minus = half_fact + two_term - mid;
    r.plus = half_fact - two_term + up;
  }
  return r;
}

/// rank K = g! + C(2g, g+1) - C(2g, g).
inline Integer rank_K(int g) { return factorial(g) + detail::choose(2 * g, g + 1) - detail::choose(2 * g, g); }

/// rank K = g! - Catalan(g), the second printed form.
inline Integer rank_K_catalan(int g) { return factorial(g) - detail::choose(2 * g, g) / (g + 1); }

struct ThetaQuotientChi {
  Integer chi_abelian_quotient;  // chi(A/(-1))
  Integer chi_theta_quotient;    // chi(Theta/(-1)), closed form
  Integer chi_theta_quotient_fixed_points;  // (chi(Theta) + #Theta[2]) / 2
};

inline ThetaQuotientChi chi_theta_quotient(int g) {
  detail::require_genus(g);
  const Integer chi_theta = Integer(sign_power(g - 1)) * factorial(g);
  const Integer two_torsion_on_theta = pow(Integer(2), g - 1) * (pow(Integer(2), g) - 1);
  ThetaQuotientChi r;
  r.chi_abelian_quotient = pow(Integer(2), 2 * g - 1);
  const Rational closed = Rational(chi_theta, 2) + Rational(pow(Integer(2), g - 2) * (pow(Integer(2), g) - 1));
  const Rational fixed = Rational(chi_theta + two_torsion_on_theta, 2);
  if (closed != fixed || !is_integer(closed))
    throw HodgeError("Euler characteristic routes disagree at g=" + std::to_string(g));
  r.chi_theta_quotient = to_integer(closed);
  r.chi_theta_quotient_fixed_points = to_integer(fixed);
  return r;
}

/// chi(Omega^p_Theta) by the closed alternating sum.
inline Integer chi_omega_closed(int g, int p) {
  Integer s = 0;
  for (int k = 0; k <= p; ++k)
    s += detail::choose(g + 1, k) * Integer(sign_power(p + 1 - k)) * pow(Integer(k - p - 1), g);
  return s;
}

/// chi(Omega^p_Theta) from the Hodge numbers of K and of the ambient torus.
inline Integer chi_omega_hodge(int g, int p) {
  using detail::choose;
  const Integer hk = hodge_K(g).values.at(p);
  return Integer(sign_power(g - 1 - p)) * (hk + choose(g, p) * choose(g - 1, p)) +
         Integer(sign_power(g - p)) * choose(g, p + 1) * choose(g - 1, p - 1);
}

inline Integer chi_omega_p(int g, int p) {
  detail::require_genus(g);
  if (p < 0 || p >= g) throw std::out_of_range("p outside [0, g)");
  const Integer a = chi_omega_closed(g, p), b = chi_omega_hodge(g, p);
  if (a != b)
    throw HodgeError("chi(Omega^p) routes disagree at g=" + std::to_string(g) + ", p=" + std::to_string(p));
  return a;
}

/// Invariant Hodge numbers recovered from chi(Omega^p_Theta) and the torus.
inline HodgeVector hodge_Kplus_via_euler(int g) {
  detail::require_genus(g);
  using detail::choose;
  using detail::epsilon;
  HodgeVector h{g, {}};
  for (int p = 0; p < g; ++p) {
    Rational v = Rational(chi_omega_p(g, p), 2) +
                 Rational(sign_power(p)) * Rational((pow(Integer(2), g) - 1) * choose(g - 1, p), 2);
    for (int q = 0; q <= g - 1 - p; ++q) v -= Rational(sign_power(q) * choose(g, p) * choose(g, q) * epsilon(p + q));
    for (int q = g - p; q <= g - 1; ++q)
      v -= Rational(sign_power(q) * choose(g, p + 1) * choose(g, q + 1) * epsilon(p + q));
    h.values.push_back(checked_hodge_number(Rational(sign_power(g - 1 - p)) * v, g, p));
  }
  return h;
}

// Residue calculus.

namespace detail {

/// Working precision for integrands with a pole of order g.
inline int residue_order(int g) { return std::max(default_truncation(), g + 2); }

/// e^{c z}
inline PowerSeries exp_linear(const Rational& c, int order) {
  return series_exp(c * PowerSeries::variable(order));
}

/// 1 / (e^z - 1)^n as a Laurent series.
inline PowerSeries inverse_expm1_power(int n, int order) {
  // e^z - 1 = z u(z), u(0) = 1
  const PowerSeries u = (exp_linear(1, order + 1) - PowerSeries::constant(1, order + 1)).shifted(-1);
  return series_pow(series_inverse(u), n).shifted(-n);
}

}  // namespace detail

/// 2 (w+1)^{g-1-p} / (w^g (w+2)) in the variable w.
inline PowerSeries chi2_integrand_w(int g, int p) {
  const int order = detail::residue_order(g);
  std::vector<Rational> num;
  for (int k = 0; k <= g - 1 - p; ++k) num.push_back(Rational(2 * binomial(g - 1 - p, k)));
  const PowerSeries numerator = PowerSeries::polynomial(num, order);
  const PowerSeries denominator = PowerSeries::polynomial({Rational(2), Rational(1)}, order);
  return (numerator * series_inverse(denominator)).shifted(-g);
}

/// 2 e^{(g-p) z} / ((e^z - 1)^g (e^z + 1)) in the variable z.
inline PowerSeries chi2_integrand_z(int g, int p) {
  const int order = detail::residue_order(g);
  const PowerSeries ez = detail::exp_linear(1, order);
  return 2 * detail::exp_linear(g - p, order) * detail::inverse_expm1_power(g, order) *
         series_inverse(ez + PowerSeries::constant(1, order));
}

/// The w-integrand pulled back along w = e^z - 1, times dw/dz = e^z.
inline PowerSeries chi2_integrand_substituted(int g, int p) {
  const int order = detail::residue_order(g);
  const PowerSeries ez = detail::exp_linear(1, order);
  return substitute(chi2_integrand_w(g, p), ez - PowerSeries::constant(1, order)) * ez;
}

inline Rational chi2_residue(int g, int p) { return residue_at_zero(chi2_integrand_w(g, p)); }
inline Rational chi2_closed(int g, int p) { return Rational(sign_power(p)) / Rational(pow(Integer(2), g - 1)); }

/// The two-sum integrand on the contracted locus, in z.
inline PowerSeries chi4_integrand(int g, int p) {
  const int order = detail::residue_order(g);
  PowerSeries numerator(order);
  for (int k = 0; k <= p; ++k)
    numerator = numerator + Rational(sign_power(p - k) * binomial(g - 1, k)) * detail::exp_linear(g - 1 - k, order);
  for (int k = 0; k < p; ++k)
    numerator = numerator + Rational(sign_power(p - k) * binomial(g - 1, k)) * detail::exp_linear(g - k, order);
  const PowerSeries ez = detail::exp_linear(1, order);
  return 2 * numerator * detail::inverse_expm1_power(g - 1, order) *
         series_inverse(ez + PowerSeries::constant(1, order));
}

inline Rational chi4_residue(int g, int p) { return residue_at_zero(chi4_integrand(g, p)); }
inline Rational chi4_closed(int g, int p) {
  return Rational(sign_power(p) * binomial(g - 1, p)) / Rational(pow(Integer(2), g - 2)) +
         Rational(2 * sign_power(p) * detail::delta(g, p));
}

struct QuotientIdentityReport {
  Rational chi2;
  Rational chi4;
  Rational chi1;
  Rational chi3;
  Rational lhs;
  Rational rhs;
  bool chi2_matches_closed = false;
  bool chi4_matches_closed = false;
  bool holds = false;
};

/// 2 chi(Omega^p of the quotient) computed from residues, against the
/// simplified right-hand side.
inline QuotientIdentityReport chi_quotient_report(int g, int p) {
  detail::require_genus(g);
  if (p < 0 || p >= g) throw std::out_of_range("p outside [0, g)");
  QuotientIdentityReport r;
  const Integer two_torsion_on_theta = pow(Integer(2), g - 1) * (pow(Integer(2), g) - 1);
  const Integer chi = chi_omega_p(g, p);
  r.chi2 = chi2_residue(g, p);
  r.chi4 = chi4_residue(g, p);
  r.chi2_matches_closed = r.chi2 == chi2_closed(g, p);
  r.chi4_matches_closed = r.chi4 == chi4_closed(g, p);
  r.chi1 = Rational(chi) - Rational(binomial(g - 1, p) * two_torsion_on_theta) * r.chi2;
  r.chi3 = Rational(two_torsion_on_theta) * r.chi4;
  r.lhs = r.chi1 + r.chi3;
  r.rhs = Rational(chi) + Rational(sign_power(p) * (pow(Integer(2), g) - 1) *
                                   (binomial(g - 1, p) + pow(Integer(2), g) * detail::delta(g, p)));
  r.holds = r.lhs == r.rhs && r.chi2_matches_closed && r.chi4_matches_closed;
  return r;
}

inline bool chi_quotient_identity(int g, int p) { return chi_quotient_report(g, p).holds; }

/// Entries outside the band |2p - (g-1)| <= level vanish (negative level: all vanish).
inline bool within_level(const HodgeVector& h, int level) {
  for (int p = 0; p < h.g; ++p) {
    const int offset = std::abs(2 * p - (h.g - 1));
    if ((level < 0 || offset > level) && h.values[p] != 0) return false;
  }
  return true;
}

/// The eigenpart with sign (-1)^(g-1) has level g-5, the other level g-3.
inline bool level_constraints_hold(int g) {
  const HodgeVector plus = hodge_Kplus(g), minus = hodge_Kminus(g);
  const HodgeVector& odd_sign = (g - 1) % 2 == 0 ? plus : minus;  // sign (-1)^(g-1)
  const HodgeVector& even_sign = (g - 1) % 2 == 0 ? minus : plus;
  return within_level(odd_sign, g - 5) && within_level(even_sign, g - 3);
}

}  // namespace prymal
