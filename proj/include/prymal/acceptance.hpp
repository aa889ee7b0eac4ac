#pragma once

// The acceptance suite: eight criteria with runtime limits, shared by the
// `verify` command and the acceptance test binary.

#include "prymal/cubic27.hpp"
#include "prymal/hilbert.hpp"
#include "prymal/hodge.hpp"
#include "prymal/lattice.hpp"
#include "prymal/pairings.hpp"
#include "prymal/polynomial.hpp"
#include "prymal/pushforward.hpp"
#include "prymal/report.hpp"
#include "prymal/sympower.hpp"

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace prymal {

inline constexpr int kSurfaceSelf = 16;
inline constexpr int kSurfaceTripleTotal = 40;
inline constexpr int kCurveSelf = 0;
// Degree of the theta divisor on each curve: xi.omega = 8.
inline constexpr int kCurveTripleTotal = kXiOmega;

namespace acceptance {

using P = Provenance;

inline std::string yes(bool b) { return b ? "true" : "false"; }

/// Distinct off-diagonal values of a table on meeting and on skew pairs.
inline std::pair<std::set<Rational>, std::set<Rational>> incidence_values(const PairingTable& t) {
  std::set<Rational> meet, skew;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      if (i != j) (line_dot(t.line(i), t.line(j)) == 1 ? meet : skew).insert(t(i, j));
  return {meet, skew};
}

inline std::string render(const std::set<Rational>& s) {
  std::string out = "{";
  for (const auto& v : s) out += (out.size() > 1 ? "," : "") + to_string(v);
  return out + "}";
}

inline void criterion_pairings(CriterionResult& r) {
  PairingSystemReport rep;
  const auto surfaces = solve_pairings(kSurfaceSelf, kSurfaceTripleTotal, &rep);
  r.expect("surfaces: constraint rank", "351/351", std::to_string(rep.rank) + "/" + std::to_string(rep.unknowns),
           P::Identity);
  r.expect_equal("surfaces: equations", std::size_t{27 * 45}, rep.equations, P::Identity);
  const auto [sm, ss] = incidence_values(surfaces);
  r.expect("surfaces: meeting lines", "{12}", render(sm), P::Reference);
  r.expect("surfaces: skew lines", "{14}", render(ss), P::Reference);

  const auto curves = solve_pairings(kCurveSelf, kCurveTripleTotal, &rep);
  r.expect("curves: constraint rank", "351/351", std::to_string(rep.rank) + "/" + std::to_string(rep.unknowns),
           P::Identity);
  const auto [cm, cs] = incidence_values(curves);
  r.expect("curves: meeting lines", "{4}", render(cm), P::Reference);
  r.expect("curves: skew lines", "{2}", render(cs), P::Reference);

  const auto zero = solve_pairings(0, 0);
  const auto [zm, zs] = incidence_values(zero);
  r.expect("zero data: all pairings", "{0}", render(zm) == render(zs) ? render(zm) : "mixed", P::Identity);
}

inline void criterion_gram(CriterionResult& r) {
  const auto curves = solve_pairings(kCurveSelf, kCurveTripleTotal);
  const auto surfaces = solve_pairings(kSurfaceSelf, kSurfaceTripleTotal);
  const Matrix gc = gram_delta(curves), gs = gram_delta(surfaces);
  r.expect_equal("curves: Gram determinant", Rational(192), determinant(gc), P::Reference);
  r.expect_true("curves: isometric to E6(-2)", check_E6_isometry(gc, -2), P::Reference);
  r.expect_equal("surfaces: Gram determinant", Rational(192), determinant(gs), P::Oracle);
  r.expect_true("surfaces: Gram is minus the curves Gram", gs == scaled(gc, -1), P::Oracle);
  r.expect_true("surfaces: positive definite", is_positive_definite(gs), P::Reference);
  r.expect_true("surfaces: isometric to E6(2)", check_E6_isometry(gs, 2), P::Reference);
  r.expect_true("identity is not E6(-2)", !check_E6_isometry(Matrix::identity(6), -2), P::Identity);

  const auto configs = all_delta_configs(curves);
  bool invariant = true;
  for (const auto& c : configs) invariant = invariant && determinant(gram_delta(curves, c)) == 192;
  r.expect_equal("valid (sixer, line) configurations", std::size_t{1080}, configs.size(), P::Oracle);
  r.expect_true("determinant independent of configuration", invariant, P::Identity);
}

inline void criterion_isometry_sweep(CriterionResult& r) {
  const auto surfaces = solve_pairings(kSurfaceSelf, kSurfaceTripleTotal);
  r.expect_true("all 27^4 quadruples", check_primal_minus_two_isometry(surfaces), P::Reference);
  const auto e1 = surfaces.index_of("E1"), e2 = surfaces.index_of("E2");
  const Rational lhs = surfaces(e1, e1) - 2 * surfaces(e1, e2) + surfaces(e2, e2);
  const Line& l1 = surfaces.line(e1);
  const Line& l2 = surfaces.line(e2);
  const Rational rhs = Rational(-2 * (line_dot(l1, l1) - 2 * line_dot(l1, l2) + line_dot(l2, l2)));
  r.expect_equal("spot value (V_E1 - V_E2)^2", Rational(4), lhs, P::Oracle);
  r.expect_equal("spot value -2 (E1 - E2)^2", Rational(4), rhs, P::Oracle);
}

inline void criterion_lines(CriterionResult& r) {
  const auto lines = enumerate_lines();
  r.expect_equal("lines", std::size_t{27}, lines.size(), P::Reference);
  const auto triples = tritangent_triples(lines);
  r.expect_equal("tritangent triples", std::size_t{45}, triples.size(), P::Reference);
  const PicVector minus_k = -1 * canonical_class();
  bool sums = true;
  for (const auto& t : triples) sums = sums && lines[t[0]].v + lines[t[1]].v + lines[t[2]].v == minus_k;
  r.expect_true("each triple sums to -K", sums, P::Reference);
  const auto six = sixers(lines);
  r.expect_equal("sixers", std::size_t{72}, six.size(), P::Reference);

  const WeylGroup w;
  r.expect_equal("Weyl group order", std::size_t{51840}, w.order(), P::Reference);
  std::vector<PicVector> line_vectors;
  for (const auto& l : lines) line_vectors.push_back(l.v);
  r.expect_true("transitive on lines", w.is_transitive(line_vectors), P::Reference);
  std::set<std::set<PicVector>> sixer_sets;
  for (const auto& s : six) {
    std::set<PicVector> vs;
    for (auto i : s) vs.insert(lines[i].v);
    sixer_sets.insert(vs);
  }
  const auto orbit = w.orbit(*sixer_sets.begin());
  r.expect_true("transitive on sixers", orbit == sixer_sets, P::Reference);
}

inline SymClass<> sym(int g, int d, std::initializer_list<std::tuple<int, int, int>> terms) {
  SymClass<> s(g, d);
  for (const auto& [a, b, c] : terms) s.add_term(a, b, Rational(c));
  return s;
}

inline void criterion_pushforward(CriterionResult& r) {
  const struct {
    int p, q;
    SymClass<> expected;
  } table[] = {
      {1, 0, sym(6, 6, {{1, 0, 32}})},
      {0, 1, sym(6, 6, {{1, 0, 160}, {0, 1, 32}})},
      {2, 0, sym(6, 6, {{2, 0, 16}})},
      {1, 1, sym(6, 6, {{2, 0, 80}, {1, 1, 16}})},
      {0, 2, sym(6, 6, {{2, 0, 320}, {1, 1, 160}, {0, 2, 16}})},
  };
  for (const auto& e : table) {
    const auto got = pushforward_closed(6, 6, e.p, e.q);
    r.expect("table entry (p,q)=(" + std::to_string(e.p) + "," + std::to_string(e.q) + ")", e.expected.to_string(),
             got.to_string(), P::Reference);
  }
  const auto eta = SymClass<>::eta(6, 6);
  r.expect("pi_*(eta~ . pi^* eta) = 32 eta^2",
           sym(6, 6, {{2, 0, 32}}).to_string(), (Rational(2) * pushforward_closed(6, 6, 2, 0)).to_string(),
           P::Reference);
  r.expect_true("closed route consistent with pi^* eta = 2 eta~",
                Rational(2) * pushforward_closed(6, 6, 2, 0) == pushforward_closed(6, 6, 1, 0) * eta, P::Oracle);

  for (const auto& [g, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    int agree = 0, total = 0;
    for (int k = 0; k <= d; ++k)
      for (int q = 0; q <= k; ++q, ++total)
        if (equal_in_cohomology(pushforward_closed(g, d, k - q, q), pushforward_oracle(g, d, k - q, q))) ++agree;
    r.expect("closed = oracle at (g,d)=(" + std::to_string(g) + "," + std::to_string(d) + ")",
             std::to_string(total) + "/" + std::to_string(total), std::to_string(agree) + "/" + std::to_string(total),
             P::Oracle);
    r.expect_true("projection formula at (g,d)=(" + std::to_string(g) + "," + std::to_string(d) + ")",
                  projection_formula_check(g, d), P::Oracle);
  }
}

inline Polynomial poly(std::initializer_list<Rational> ascending) { return Polynomial(std::vector<Rational>(ascending)); }

inline void criterion_hilbert(CriterionResult& r) {
  const auto s = hilbert_S();
  r.expect("chi S", poly({44, -160, 160}).to_string(), s.chi.to_string(), P::Reference);
  r.expect("restriction degree 0", "64", s.restricted[0].to_string(), P::Reference);
  r.expect("restriction degree 1", poly({-176, 160}).to_string(), s.restricted[1].to_string(), P::Reference);
  r.expect("restriction degree 2", poly({244, -400, 160}).to_string(), s.restricted[2].to_string(), P::Reference);
  const auto v = hilbert_V_from_S(s.chi);
  const std::string target = poly({22, -40, 20}).to_string();
  r.expect("chi V from S", target, v.chi.to_string(), P::Reference);
  const auto w = hilbert_Wbar();
  r.expect("chi W-bar", target, w.chi.to_string(), P::Reference);
  r.expect("chi O_W(n Phi)", poly({14, -32, 20}).to_string(), w.chi_W.to_string(), P::Reference);
  r.expect_true("todd routes agree", w.todd_W == w.todd_W_series, P::Oracle);
  r.expect_equal("1/2 Phi^2 two ways", w.half_phi_squared_split, w.half_phi_squared_expanded, P::Oracle);
  r.expect_equal("self-intersection of W~", Rational(16), self_intersection_Wtilde().value, P::Reference);
}

inline std::string render(const HodgeVector& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.values.size(); ++i) out += (i ? "," : "") + to_string(h.values[i]);
  return out + ")";
}

inline void criterion_hodge(CriterionResult& r) {
  const auto r5 = rank_Kpm(5), r4 = rank_Kpm(4);
  r.expect("ranks at g=5", "(6,72)", "(" + to_string(r5.plus) + "," + to_string(r5.minus) + ")", P::Reference);
  r.expect("ranks at g=4", "(10,0)", "(" + to_string(r4.plus) + "," + to_string(r4.minus) + ")", P::Reference);
  r.expect("invariant Hodge numbers at g=5", "(0,0,6,0,0)", render(hodge_Kplus(5)), P::Reference);
  bool sums = true, nonneg = true, euler = true;
  for (int g = 2; g <= 10; ++g) {
    const auto rk = rank_Kpm(g);
    const auto minus = hodge_Kminus(g);
    sums = sums && hodge_Kplus(g).total() == rk.plus && minus.total() == rk.minus;
    nonneg = nonneg && minus.nonnegative();
    Integer alt = 0;
    for (int p = 0; p < g; ++p) alt += Integer(sign_power(p)) * chi_omega_p(g, p);
    euler = euler && alt == Integer(sign_power(g - 1)) * factorial(g);
  }
  r.expect_true("Hodge sums equal ranks, g=2..10", sums, P::Reference);
  r.expect_true("anti-invariant Hodge numbers nonnegative, g=2..10", nonneg, P::Identity);
  r.expect_true("alternating sum of chi(Omega^p) = (-1)^(g-1) g!, g=2..10", euler, P::Reference);
  bool residues = true;
  for (int g = 2; g <= 8; ++g)
    for (int p = 0; p < g; ++p) {
      const auto q = chi_quotient_report(g, p);
      residues = residues && q.chi2_matches_closed && q.chi4_matches_closed && q.holds;
    }
  r.expect_true("residue routes equal closed forms, g=2..8", residues, P::Reference);
}

inline SymClass<> random_class(std::mt19937& rng, int g, int d) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), keep(0, 2);
  SymClass<> s(g, d);
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d && b <= g; ++b)
      if (keep(rng) != 0) s.add_term(a, b, Rational(num(rng), den(rng)));
  return s;
}

inline void criterion_properties(CriterionResult& r) {
  std::mt19937 rng(20240611);
  bool ring = true;
  for (const auto& [g, d] : std::vector<std::pair<int, int>>{{6, 6}, {11, 6}, {3, 5}, {2, 4}})
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = random_class(rng, g, d), y = random_class(rng, g, d), z = random_class(rng, g, d);
      const auto one = SymClass<>::unit(g, d);
      ring = ring && (x * y) * z == x * (y * z) && x * y == y * x && x * (y + z) == x * y + x * z &&
             x * one == x && x + (-x) == SymClass<>(g, d);
    }
  r.expect_true("ring axioms on random classes", ring, P::Identity);

  const auto surfaces = solve_pairings(kSurfaceSelf, kSurfaceTripleTotal);
  const auto curves = solve_pairings(kCurveSelf, kCurveTripleTotal);
  const auto gens = WeylGroup::standard_generators();
  r.expect_true("surfaces table Weyl-invariant", weyl_invariant(surfaces, gens), P::Identity);
  r.expect_true("curves table Weyl-invariant", weyl_invariant(curves, gens), P::Identity);

  const auto fs = verify_affine_form(surfaces), fc = verify_affine_form(curves);
  r.expect("surfaces affine form", "(14,-2)", "(" + to_string(fs.constant) + "," + to_string(fs.slope) + ")",
           P::Reference);
  r.expect("curves affine form", "(2,2)", "(" + to_string(fc.constant) + "," + to_string(fc.slope) + ")",
           P::Reference);

  const auto rows = row_sums(surfaces, kSurfaceTripleTotal);
  r.expect_true("triple sums, triples through the line", rows.containing_ok, P::Reference);
  r.expect_true("triple sums, triples avoiding the line", rows.not_containing_ok, P::Reference);

  r.expect_equal("span rank", std::size_t{7}, span_rank(surfaces), P::Reference);
  const auto model = class_model(surfaces);
  r.expect_equal("difference span rank", std::size_t{6}, difference_rank(model, standard_delta_config(surfaces)),
                 P::Reference);

  const auto dual = dual_norm_report(curves);
  r.expect_true("lambda_L^2 uniform across all 27 lines", dual.uniform_norm, P::Oracle);
  r.expect_equal("lambda_L^2", Rational(-4, 3), dual.lambda_norm, P::Oracle);
  r.expect_true("lambda_L . lambda_L' = L.L' - 1/3", dual.pairing_shift, P::Oracle);
  r.expect_true("model reproduces the diagonal", dual.model_matches_diagonal, P::Oracle);
  r.expect_equal("minimal norm of the E6 weight lattice", Rational(4, 3), dual.dual_minimal_norm, P::Oracle);
  r.expect_equal("minimal vectors of the E6 weight lattice", std::size_t{54}, dual.dual_minimal_count, P::Oracle);
}

struct CriterionEntry {
  int id;
  const char* suite;
  const char* title;
  double limit_seconds;
  void (*body)(CriterionResult&);
};

inline const std::vector<CriterionEntry>& criteria() {
  static const std::vector<CriterionEntry> entries = {
      {1, "pairings", "Pairing tables are the unique solutions", 5, criterion_pairings},
      {2, "pairings", "Gram matrices, discriminant and E6 isometry", 5, criterion_gram},
      {3, "pairings", "Scaled isometry over all quadruples", 30, criterion_isometry_sweep},
      {4, "lines", "Line combinatorics and the Weyl group", 60, criterion_lines},
      {5, "pushforward", "Symmetric power pushforward", 60, criterion_pushforward},
      {6, "hilbert", "Hilbert polynomials and self-intersection", 5, criterion_hilbert},
      {7, "hodge", "Hodge numbers, ranks and residues", 10, criterion_hodge},
      {8, "properties", "Property suites", 30, criterion_properties},
  };
  return entries;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& c : criteria())
    if (out.empty() || out.back() != c.suite) out.emplace_back(c.suite);
  return out;
}

}  // namespace acceptance

/// Runs every criterion, or only those of one suite.
inline Report run_acceptance(const std::optional<std::string>& only = std::nullopt) {
  Report report;
  for (const auto& c : acceptance::criteria())
    if (!only || *only == c.suite) report.criteria.push_back(run_criterion(c.id, c.suite, c.title, c.limit_seconds, c.body));
  return report;
}

}  // namespace prymal
