#include "prymal/lattice.hpp"
#include "prymal/pairings.hpp"

#include <gtest/gtest.h>

using namespace prymal;

namespace {

const PairingTable& surfaces() {
  static const PairingTable t = solve_pairings(16, 40);
  return t;
}

const PairingTable& curves() {
  static const PairingTable t = solve_pairings(0, 8);
  return t;
}

}  // namespace

TEST(Solve, SurfacesTable) {
  const auto& t = surfaces();
  const auto e1 = t.index_of("E1");
  EXPECT_EQ(t(e1, e1), 16);
  EXPECT_EQ(t(e1, t.index_of("E2")), 14);
  EXPECT_EQ(t(e1, t.index_of("F12")), 12);
  EXPECT_EQ(t(e1, t.index_of("G1")), 14);
  EXPECT_EQ(t(e1, t.index_of("G2")), 12);
}

TEST(Solve, CurvesTable) {
  const auto& t = curves();
  const auto e1 = t.index_of("E1");
  EXPECT_EQ(t(e1, e1), 0);
  EXPECT_EQ(t(e1, t.index_of("E2")), 2);
  EXPECT_EQ(t(e1, t.index_of("F12")), 4);
}

TEST(Solve, ReportAndSymmetry) {
  PairingSystemReport rep;
  const auto t = solve_pairings(16, 40, &rep);
  EXPECT_EQ(rep.equations, 27u * 45u);
  EXPECT_EQ(rep.unknowns, 351u);
  EXPECT_EQ(rep.rank, 351u);
  EXPECT_TRUE(t.values().is_symmetric());
}

TEST(Solve, ZeroData) {
  const auto t = solve_pairings(0, 0);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) EXPECT_EQ(t(i, j), 0);
}

TEST(Solve, ClosedFormForArbitraryData) {
  // Solutions are a + b L.L' with a - b = self and 3a + b = total.
  for (const auto& [self, total] : std::vector<std::pair<Rational, Rational>>{{1, 0}, {Rational(1, 2), 7}, {-3, 5}}) {
    const auto f = verify_affine_form(solve_pairings(self, total));
    EXPECT_EQ(f.constant, (total + self) / 4);
    EXPECT_EQ(f.slope, (total - 3 * self) / 4);
  }
}

TEST(Lookup, Errors) {
  EXPECT_THROW(surfaces().index_of("H7"), std::out_of_range);
  EXPECT_EQ(surfaces().line(surfaces().index_of("F36")).label(), "F36");
}

TEST(AffineForm, Values) {
  const auto fs = verify_affine_form(surfaces());
  EXPECT_EQ(fs.constant, 14);
  EXPECT_EQ(fs.slope, -2);
  const auto fc = verify_affine_form(curves());
  EXPECT_EQ(fc.constant, 2);
  EXPECT_EQ(fc.slope, 2);
}

TEST(AffineForm, RejectsNonAffineTable) {
  Matrix m = surfaces().values();
  m(0, 1) = m(1, 0) = m(0, 1) + 1;
  const PairingTable broken(surfaces().lines(), m);
  EXPECT_THROW(verify_affine_form(broken), PairingError);
  EXPECT_THROW(class_model(broken), PairingError);
}

TEST(Gram, DeterminantAndSign) {
  const Matrix gc = gram_delta(curves());
  const Matrix gs = gram_delta(surfaces());
  EXPECT_EQ(determinant(gc), 192);
  EXPECT_EQ(determinant(gs), 192);
  EXPECT_EQ(gs, scaled(gc, -1));
  EXPECT_TRUE(check_E6_isometry(gc, -2));
  EXPECT_TRUE(check_E6_isometry(gs, 2));
  EXPECT_FALSE(check_E6_isometry(gs, -2));
}

TEST(Gram, OtherConfiguration) {
  const auto& t = surfaces();
  DeltaConfig c;
  for (int i = 0; i < 6; ++i) c.xs[i] = t.index_of(make_G(6 - i).v);
  c.y = t.index_of("F34");  // meets G3 and G4
  EXPECT_EQ(determinant(gram_delta(t, c)), 192);
  EXPECT_TRUE(check_E6_isometry(gram_delta(t, c), 2));
}

TEST(Gram, AllConfigurations) {
  const auto configs = all_delta_configs(surfaces());
  EXPECT_EQ(configs.size(), 1080u);
  for (std::size_t k = 0; k < configs.size(); k += 97) EXPECT_EQ(determinant(gram_delta(surfaces(), configs[k])), 192);
}

TEST(Gram, InvalidConfigurations) {
  const auto& t = surfaces();
  const auto expect_message = [&](const DeltaConfig& c, const std::string& fragment) {
    try {
      validate_delta_config(t, c);
      FAIL() << fragment;
    } catch (const PairingError& e) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  DeltaConfig c = standard_delta_config(t);
  DeltaConfig y_in = c;
  y_in.y = t.index_of("E1");
  expect_message(y_in, "one of the six");
  DeltaConfig y_five = c;
  y_five.y = t.index_of("G1");
  expect_message(y_five, "exactly two");
  DeltaConfig not_skew = c;
  not_skew.xs[5] = t.index_of("F13");
  expect_message(not_skew, "not mutually skew");
  DeltaConfig repeated = c;
  repeated.xs[5] = repeated.xs[4];
  expect_message(repeated, "distinct");
  DeltaConfig out_of_range = c;
  out_of_range.y = 99;
  EXPECT_THROW(validate_delta_config(t, out_of_range), std::out_of_range);
}

TEST(Isometry, AllQuadruples) {
  EXPECT_TRUE(check_primal_minus_two_isometry(surfaces()));
  EXPECT_FALSE(check_primal_minus_two_isometry(curves()));
}

TEST(Isometry, SpotValueIncludingRepeatedIndex) {
  const auto& t = surfaces();
  const auto e1 = t.index_of("E1"), e2 = t.index_of("E2");
  const Rational lhs = t(e1, e1) - t(e1, e2) - t(e2, e1) + t(e2, e2);
  EXPECT_EQ(lhs, 4);
  const PicVector d = make_E(1).v - make_E(2).v;
  EXPECT_EQ(-2 * dot(d, d), 4);
}

TEST(Model, Ranks) {
  const auto m = class_model(surfaces());
  EXPECT_EQ(m.c0, Rational(40, 3));
  EXPECT_EQ(m.c1, -2);
  EXPECT_EQ(span_rank(surfaces()), 7u);
  EXPECT_EQ(span_rank(curves()), 7u);
  EXPECT_EQ(model_rank(m, {0}), 1u);
  EXPECT_EQ(difference_rank(m, standard_delta_config(surfaces())), 6u);
  const auto mc = class_model(curves());
  EXPECT_EQ(mc.c0, Rational(8, 3));
  EXPECT_EQ(mc.c1, 2);
}

TEST(Model, DualNorms) {
  const auto r = dual_norm_report(surfaces());
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.lambda_norm, Rational(-4, 3));
  EXPECT_EQ(r.scaled_norm, Rational(8, 3));
  EXPECT_EQ(r.dual_minimal_norm, Rational(4, 3));
  EXPECT_EQ(r.dual_minimal_count, 54u);
  EXPECT_TRUE(r.integral_on_roots);
  const auto rc = dual_norm_report(curves());
  EXPECT_EQ(rc.scaled_norm, Rational(-8, 3));
  EXPECT_TRUE(dual_norm_check(curves()));
}

TEST(Symmetry, WeylInvariance) {
  const auto gens = WeylGroup::standard_generators();
  EXPECT_TRUE(weyl_invariant(surfaces(), gens));
  EXPECT_TRUE(weyl_invariant(curves(), gens));
  Matrix m = surfaces().values();
  m(0, 1) = m(1, 0) = 0;
  EXPECT_FALSE(weyl_invariant(PairingTable(surfaces().lines(), m), gens));
}

TEST(Symmetry, RowSums) {
  const auto r = row_sums(surfaces(), 40);
  EXPECT_EQ(r.containing, 27u * 5u);
  EXPECT_EQ(r.not_containing, 27u * 40u);
  EXPECT_TRUE(r.containing_ok);
  EXPECT_TRUE(r.not_containing_ok);
  const auto wrong = row_sums(surfaces(), 41);
  EXPECT_FALSE(wrong.containing_ok);
}
