#pragma once

// Hilbert polynomials of the special surfaces through Grothendieck-Riemann-Roch
// on symmetric powers, and the companion computation on the fourfold B.

#include "prymal/linalg.hpp"
#include "prymal/polynomial.hpp"
#include "prymal/pushforward.hpp"
#include "prymal/series.hpp"
#include "prymal/sympower.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace prymal {

using IntPolynomial = Polynomial;

/// Whether p takes integer values at every integer in [lo, hi].
inline bool integer_valued_on(const Polynomial& p, int lo, int hi) {
  for (int n = lo; n <= hi; ++n)
    if (!is_integer(p(n))) return false;
  return true;
}

/// Todd class of P^r as coefficients of powers of the hyperplane class h.
inline std::vector<Rational> todd_projective_space(int r) {
  const int N = r + 1;
  std::vector<Rational> c(static_cast<std::size_t>(N), Rational(0));
  for (int k = 0; k < N; ++k) c[static_cast<std::size_t>(k)] = Rational(sign_power(k)) / Rational(factorial(k + 1));
  // h / (1 - e^{-h}) raised to r + 1
  const PowerSeries todd_line = series_inverse(PowerSeries(0, std::move(c), N));
  const PowerSeries t = series_pow(todd_line, r + 1);
  std::vector<Rational> out;
  for (int k = 0; k <= r; ++k) out.push_back(t[k]);
  return out;
}

struct HilbertSResult {
  int base_genus = 6;
  int degree = 6;
  SymClass<Polynomial> ch_times_todd{11, 6};   // ch(H) todd(Z~^(6))
  SymClass<Polynomial> pushed{6, 6};           // pi_*(ch(H) todd(Z~^(6)))
  SymClass<Polynomial> ch_pushforward{6, 6};   // ch(pi_* H)
  std::array<Polynomial, 3> restricted{};      // coefficients of h^0, h^1, h^2 on |L|
  Polynomial chi;                               // chi(O_S(n Theta~))
};

/// chi(O_S(n Theta~)) by GRR along Z~^(6) -> Z^(6), restricted to a g^2_6.
inline HilbertSResult hilbert_S() {
  constexpr int g = 6, d = 6, r = 2;
  const int gc = cover_genus(g);
  HilbertSResult res;
  res.base_genus = g;
  res.degree = d;

  const auto to_poly = [](const Rational& c) { return Polynomial(c); };
  const auto n = Polynomial::variable();
  const auto ch_H = exp(n * SymClass<Polynomial>::theta(gc, d));
  const auto todd_cover = todd_of(chern_total_sympower(gc, d)).map_coefficients<Polynomial>(to_poly);
  res.ch_times_todd = ch_H * todd_cover;
  res.pushed = pushforward_closed(res.ch_times_todd, g);
  const auto todd_inv_base = todd_inverse_of(chern_total_sympower(g, d)).map_coefficients<Polynomial>(to_poly);
  res.ch_pushforward = res.pushed * todd_inv_base;

  const SecantClasses sec = secant_classes(g, d, r);
  const auto pair_with = [&](int k, const ProjClass& cls) {
    return integrate(res.ch_pushforward.degree_part(k) * cls.cls.map_coefficients<Polynomial>(to_poly));
  };
  // Codimension-k part of the restriction, paired against a P^k in |L|.
  res.restricted[0] = pair_with(0, sec.point);
  res.restricted[1] = pair_with(1, *sec.pencil);
  res.restricted[2] = pair_with(2, sec.full);

  const auto todd_plane = todd_projective_space(r);
  Polynomial chi;
  for (int k = 0; k <= r; ++k) chi += res.restricted[static_cast<std::size_t>(k)] * Polynomial(todd_plane[static_cast<std::size_t>(r - k)]);
  res.chi = chi;
  return res;
}

struct HilbertVResult {
  Polynomial doubled_S;               // chi(O_S(n Theta_t)) = chi_S(n/2)
  std::array<Polynomial, 3> components;  // one per component surface
  Polynomial chi;                     // the common (symmetric) value
};

/// Split chi(O_S(n Theta_t)) over the tetragonal triple. Each of the three
/// curves gives a surface that is the union of two components, and each
/// component is shared by exactly two curves:
///   c1 + c2 = c2 + c3 = c1 + c3 = chi(O_S(n Theta_t)).
inline HilbertVResult hilbert_V_from_S(const Polynomial& chi_S) {
  HilbertVResult res;
  res.doubled_S = chi_S.scaled_argument(Rational(1, 2));
  Matrix incidence(3, 3);
  const int rows[3][3] = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) incidence(i, j) = rows[i][j];
  std::array<std::vector<Rational>, 3> coeffs;
  for (int k = 0; k <= res.doubled_S.degree(); ++k) {
    const Rational t = res.doubled_S.coefficient(k);
    const auto x = solve_unique(incidence, {t, t, t});
    for (std::size_t i = 0; i < 3; ++i) coeffs[i].push_back(x[i]);
  }
  for (std::size_t i = 0; i < 3; ++i) res.components[i] = Polynomial(coeffs[i]);
  if (!(res.components[0] == res.components[1] && res.components[1] == res.components[2]))
    throw LinearSystemError("tetragonal system has no symmetric solution", 3, 3);
  res.chi = res.components[0];
  return res;
}

inline HilbertVResult hilbert_V_from_S() { return hilbert_V_from_S(hilbert_S().chi); }

// Intersection numbers on the surface W inside the fourfold B, in units of the
// point class zeta.
inline constexpr int kXiSquared = 24;     // xi^2 = 4! zeta
inline constexpr int kXiOmega = 8;        // from 1/2 [Phi]^2 = 12 zeta + xi.omega = 20 zeta
inline constexpr int kOmegaSquared = 0;   // adjunction on the curve class
inline constexpr int kXiFourthOnB = 24;   // integral of xi^4 over B
inline constexpr int kCurveGenus = 9;     // genus of W_d

/// The algebra spanned by 1, xi, omega (degree 1) and zeta (degree 2) on W.
template <class R = Rational>
struct FourfoldClass {
  R unit{0};
  R xi{0};
  R omega{0};
  R zeta{0};
  R omega_squared{kOmegaSquared};  // value of omega^2 in units of zeta

  static FourfoldClass one() { return {R(1), R(0), R(0), R(0)}; }

  friend FourfoldClass operator+(const FourfoldClass& a, const FourfoldClass& b) {
    return {a.unit + b.unit, a.xi + b.xi, a.omega + b.omega, a.zeta + b.zeta, a.omega_squared};
  }
  friend FourfoldClass operator-(const FourfoldClass& a, const FourfoldClass& b) {
    return {a.unit - b.unit, a.xi - b.xi, a.omega - b.omega, a.zeta - b.zeta, a.omega_squared};
  }
  friend FourfoldClass operator*(const R& c, const FourfoldClass& a) {
    return {c * a.unit, c * a.xi, c * a.omega, c * a.zeta, a.omega_squared};
  }
  friend FourfoldClass operator*(const FourfoldClass& a, const FourfoldClass& b) {
    FourfoldClass out;
    out.omega_squared = a.omega_squared;
    out.unit = a.unit * b.unit;
    out.xi = a.unit * b.xi + a.xi * b.unit;
    out.omega = a.unit * b.omega + a.omega * b.unit;
    out.zeta = a.unit * b.zeta + a.zeta * b.unit + a.xi * b.xi * R(kXiSquared) +
               (a.xi * b.omega + a.omega * b.xi) * R(kXiOmega) + a.omega * b.omega * a.omega_squared;
    return out;
  }
  friend bool operator==(const FourfoldClass& a, const FourfoldClass& b) {
    return a.unit == b.unit && a.xi == b.xi && a.omega == b.omega && a.zeta == b.zeta;
  }

  /// Nilpotent part (everything but the unit coefficient).
  FourfoldClass nilpotent() const { return {R(0), xi, omega, zeta, omega_squared}; }
};

/// f(y) for y nilpotent (products of degree > 2 vanish, so y^3 = 0).
template <class R>
FourfoldClass<R> apply_series(const PowerSeries& f, const FourfoldClass<R>& y) {
  if (!(y.unit == R(0))) throw std::invalid_argument("series argument must be nilpotent");
  if (f.order() < 3) throw SeriesError("insufficient precision for a surface class");
  const FourfoldClass<R> one = FourfoldClass<R>::one();
  const FourfoldClass<R> y2 = y * y;
  return R(f[0]) * one + R(f[1]) * y + R(f[2]) * y2;
}

template <class R>
FourfoldClass<R> inverse(const FourfoldClass<R>& x) {
  if (!(x.unit == R(1))) throw std::invalid_argument("inverse expects unit coefficient 1");
  const auto n = x.nilpotent();
  return FourfoldClass<R>::one() - n + n * n;
}

struct HilbertWResult {
  FourfoldClass<> todd_line;          // todd(O_B(Xi)) restricted to W
  FourfoldClass<> todd_W;             // todd(O_B(Xi))^{-2}
  FourfoldClass<> todd_W_series;      // ((1 - e^{-x}) / x)^2 evaluated at xi
  FourfoldClass<> phi;                // [Phi] = xi + omega
  Rational half_phi_squared_expanded = 0;  // 1/2 (xi + omega)^2
  Rational half_phi_squared_split = 0;     // 12 zeta + xi.omega
  Polynomial chi_W;                   // chi(O_W(n Phi))
  Polynomial curve_correction;        // chi(O_{W_d}(n Phi)) = 8n + 1 - 9
  Polynomial chi;                     // Hilbert polynomial of W-bar
};

inline HilbertWResult hilbert_Wbar() {
  HilbertWResult res;
  const FourfoldClass<> xi{0, 1, 0, 0};
  const FourfoldClass<> omega{0, 0, 1, 0};

  const int N = 3;
  std::vector<Rational> c(N, Rational(0));
  for (int k = 0; k < N; ++k) c[static_cast<std::size_t>(k)] = Rational(sign_power(k)) / Rational(factorial(k + 1));
  const PowerSeries inv_todd_gen(0, c, N);  // (1 - e^{-x}) / x
  res.todd_line = apply_series(series_inverse(inv_todd_gen), xi);
  const auto inv = inverse(res.todd_line);
  res.todd_W = inv * inv;
  res.todd_W_series = apply_series(series_pow(inv_todd_gen, 2), xi);

  res.phi = xi + omega;
  res.half_phi_squared_expanded = (Rational(1, 2) * (res.phi * res.phi)).zeta;
  res.half_phi_squared_split = Rational(kXiSquared, 2) + (xi * omega).zeta;

  const Polynomial n = Polynomial::variable();
  const auto lift = [](const FourfoldClass<>& a) {
    return FourfoldClass<Polynomial>{a.unit, a.xi, a.omega, a.zeta, a.omega_squared};
  };
  const auto nphi = n * lift(res.phi);
  const auto ch = FourfoldClass<Polynomial>::one() + nphi + Polynomial(Rational(1, 2)) * (nphi * nphi);
  res.chi_W = (ch * lift(res.todd_W)).zeta;

  const Rational degree_per_n = (res.phi * omega).zeta;  // Phi . W_d
  res.curve_correction = Polynomial(std::vector<Rational>{Rational(1 - kCurveGenus), degree_per_n});
  res.chi = res.chi_W - res.curve_correction;
  return res;
}

struct SelfIntersectionResult {
  // [W~] = (xi^2, xi - omega) in the blowup decomposition.
  int ambient_xi_power = 2;
  FourfoldClass<> exceptional_part;
  Rational ambient_term = 0;      // integral of xi^4 over B
  Rational exceptional_term = 0;  // integral of (xi - omega)^2 over Xi . Xi_beta
  Rational value = 0;
};

/// [W~]^2 with omega^2 = omega_squared (zero by adjunction).
inline SelfIntersectionResult self_intersection_Wtilde(const Rational& omega_squared = kOmegaSquared) {
  SelfIntersectionResult res;
  res.exceptional_part = FourfoldClass<>{0, 1, -1, 0, omega_squared};
  res.ambient_term = kXiFourthOnB;
  res.exceptional_term = (res.exceptional_part * res.exceptional_part).zeta;
  res.value = res.ambient_term - res.exceptional_term;
  return res;
}

}  // namespace prymal
