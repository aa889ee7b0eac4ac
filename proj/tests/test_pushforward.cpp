#include "prymal/pushforward.hpp"

#include <gtest/gtest.h>

using namespace prymal;

namespace {

SymClass<> sym(int g, int d, std::initializer_list<std::tuple<int, int, int>> terms) {
  SymClass<> s(g, d);
  for (const auto& [a, b, c] : terms) s.add_term(a, b, Rational(c));
  return s;
}

}  // namespace

TEST(Closed, TableForGenusSixSixthPower) {
  EXPECT_EQ(pushforward_closed(6, 6, 1, 0), sym(6, 6, {{1, 0, 32}}));
  EXPECT_EQ(pushforward_closed(6, 6, 0, 1), sym(6, 6, {{1, 0, 160}, {0, 1, 32}}));
  EXPECT_EQ(pushforward_closed(6, 6, 2, 0), sym(6, 6, {{2, 0, 16}}));
  EXPECT_EQ(pushforward_closed(6, 6, 1, 1), sym(6, 6, {{2, 0, 80}, {1, 1, 16}}));
  EXPECT_EQ(pushforward_closed(6, 6, 0, 2), sym(6, 6, {{2, 0, 320}, {1, 1, 160}, {0, 2, 16}}));
}

TEST(Closed, FundamentalClassIsDegreeTwoToTheD) {
  for (int g = 1; g <= 6; ++g)
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(pushforward_closed(g, d, 0, 0), sym(g, d, {{0, 0, 1 << d}}));
}

TEST(Closed, Errors) {
  try {
    pushforward_closed(6, 6, 4, 3);
    FAIL();
  } catch (const PushforwardError& e) {
    EXPECT_STREQ(e.what(), "exceeds top degree");
  }
  EXPECT_THROW(pushforward_closed(6, 6, -1, 0), std::invalid_argument);
  EXPECT_THROW(pushforward_closed(0, 2, 0, 0), std::invalid_argument);
}

TEST(Closed, DegreeScaling) {
  // Raising d by one doubles every coefficient.
  for (int q = 0; q <= 2; ++q) {
    const auto a = pushforward_closed(6, 5, 1, q), b = pushforward_closed(6, 6, 1, q);
    for (const auto& [m, c] : a.terms()) EXPECT_EQ(b.coefficient(m.first, m.second), Rational(2) * c);
    EXPECT_EQ(a.terms().size(), b.terms().size());
  }
}

TEST(Closed, PreservesIntegrals) {
  // The pushforward of a top-degree class has the same degree.
  for (int g = 1; g <= 6; ++g)
    for (int d = 1; d <= 6; ++d)
      for (int q = 0; q <= d; ++q)
        EXPECT_EQ(integrate(pushforward_closed(g, d, d - q, q)), eval_integral(cover_genus(g), d, d - q, q))
            << g << " " << d << " " << q;
}

TEST(Closed, LinearExtension) {
  const int g = 6, d = 6;
  SymClass<> x(cover_genus(g), d);
  x.add_term(1, 0, Rational(3));
  x.add_term(0, 2, Rational(-1, 2));
  const auto expected = Rational(3) * pushforward_closed(g, d, 1, 0) - Rational(1, 2) * pushforward_closed(g, d, 0, 2);
  EXPECT_EQ(pushforward_closed(x, g), expected);
  EXPECT_THROW(pushforward_closed(SymClass<>::eta(6, 6), g), std::invalid_argument);
}

TEST(Closed, Table) {
  const auto t = pushforward_table(6, 6, 2);
  EXPECT_EQ(t.size(), 6u);
  EXPECT_EQ(t.at({0, 2}), pushforward_closed(6, 6, 0, 2));
}

TEST(Oracle, AgreesWithClosedFormInCohomology) {
  for (int g = 1; g <= kOracleMaxGenus; ++g)
    for (int d = 1; d <= kOracleMaxDegree; ++d)
      for (int k = 0; k <= d; ++k)
        for (int q = 0; q <= k; ++q)
          EXPECT_TRUE(equal_in_cohomology(pushforward_oracle(g, d, k - q, q), pushforward_closed(g, d, k - q, q)))
              << g << " " << d << " " << k - q << " " << q;
}

TEST(Oracle, Bounds) {
  try {
    pushforward_oracle(4, 2, 1, 0);
    FAIL();
  } catch (const PushforwardError& e) {
    EXPECT_STREQ(e.what(), "oracle bound");
  }
  EXPECT_THROW(pushforward_oracle(2, 4, 1, 0), PushforwardError);
  EXPECT_THROW(pushforward_oracle(2, 2, 2, 1), PushforwardError);
}

TEST(Oracle, ReadBackRejectsClassesOutsideSubring) {
  EXPECT_THROW(read_back(ProductClass::xi(2, 2, 0), 1), PushforwardError);
  EXPECT_EQ(read_back(ProductClass::eta(2, 2), 1), SymClass<>::eta(2, 2));
}

TEST(Oracle, PullPushIsMultiplicationByDegree) {
  // The induced map of d-th symmetric powers has degree 2^d.
  const DoubleCoverModel model(2, 2);
  for (const auto& y : {ProductClass::theta(2, 2), ProductClass::eta(2, 2), ProductClass::xi(2, 2, 1)})
    EXPECT_TRUE(model.push(model.pull(y)) == Rational(4) * y);
}

TEST(ProjectionFormula, HoldsInModelAndClosedForm) {
  for (int g = 1; g <= 3; ++g)
    for (int d = 1; d <= 3; ++d) EXPECT_TRUE(projection_formula_check(g, d)) << g << " " << d;
  EXPECT_TRUE(projection_formula_check(6, 6));
}
