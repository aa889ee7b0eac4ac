#include "prymal/exterior_model.hpp"
#include "prymal/sympower.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace prymal;

namespace {

SymClass<> cls(int g, int d, std::initializer_list<std::tuple<int, int, Rational>> terms) {
  SymClass<> s(g, d);
  for (const auto& [a, b, c] : terms) s.add_term(a, b, c);
  return s;
}

SymClass<> random_class(std::mt19937& rng, int g, int d) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  SymClass<> s(g, d);
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d && b <= g; ++b) s.add_term(a, b, Rational(num(rng), den(rng)));
  return s;
}

}  // namespace

TEST(SymClass, TruncatesBeyondDegreeAndGenus) {
  const auto eta = SymClass<>::eta(2, 3), theta = SymClass<>::theta(2, 3);
  EXPECT_TRUE((eta * eta * eta * eta).is_zero());
  EXPECT_TRUE((theta * theta * theta).is_zero());
  EXPECT_FALSE((theta * theta * eta).is_zero());
}

TEST(SymClass, Rendering) {
  const auto x = cls(6, 6, {{4, 0, 10}, {3, 1, -4}, {2, 2, Rational(1, 2)}});
  EXPECT_EQ(x.to_string(), "10*eta^4 - 4*eta^3*theta + 1/2*eta^2*theta^2");
  EXPECT_EQ(SymClass<>(6, 6).to_string(), "0");
}

TEST(SymClass, RingAxioms) {
  std::mt19937 rng(1);
  for (const auto& [g, d] : std::vector<std::pair<int, int>>{{6, 6}, {11, 6}, {2, 5}, {4, 3}})
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = random_class(rng, g, d), y = random_class(rng, g, d), z = random_class(rng, g, d);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x * SymClass<>::unit(g, d), x);
      EXPECT_TRUE((x - x).is_zero());
    }
}

TEST(SymClass, MismatchedSpaces) {
  EXPECT_THROW(SymClass<>::eta(6, 6) * SymClass<>::eta(5, 6), std::invalid_argument);
}

TEST(Integral, TopDegreeMonomials) {
  EXPECT_EQ(eval_integral(6, 6, 4, 2), 30);
  EXPECT_EQ(eval_integral(6, 6, 6, 0), 1);
  EXPECT_EQ(eval_integral(6, 6, 0, 6), 720);
  EXPECT_EQ(eval_integral(6, 6, 5, 1), 6);
  EXPECT_EQ(eval_integral(2, 3, 1, 2), 2);
  EXPECT_EQ(eval_integral(2, 3, 0, 3), 0);
  try {
    eval_integral(6, 6, 3, 2);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "not a top-degree monomial");
  }
}

TEST(Integral, ProductModelOracle) {
  for (int g = 1; g <= 4; ++g)
    for (int d = 1; d <= 4; ++d)
      for (int b = 0; b <= d; ++b)
        EXPECT_EQ(integral_via_product_model(g, d, d - b, b), Rational(eval_integral(g, d, d - b, b)))
            << g << " " << d << " " << b;
  EXPECT_EQ(integral_via_product_model(6, 6, 5, 1), 6);
  EXPECT_EQ(integral_via_product_model(6, 6, 4, 2), 30);
}

TEST(Chern, CoverSymmetricPower) {
  const auto c = chern_total_sympower(11, 6);
  EXPECT_EQ(c.coefficient(0, 0), 1);
  EXPECT_EQ(c.coefficient(1, 0), -4);
  EXPECT_EQ(c.coefficient(0, 1), -1);
  EXPECT_EQ(c.coefficient(2, 0), 10);
  EXPECT_EQ(c.coefficient(1, 1), 5);
  EXPECT_EQ(c.coefficient(0, 2), Rational(1, 2));
}

TEST(Chern, BaseSymmetricPower) {
  const auto c = chern_total_sympower(6, 6);
  EXPECT_EQ(c.coefficient(1, 0), 1);
  EXPECT_EQ(c.coefficient(0, 1), -1);
  EXPECT_EQ(c.coefficient(0, 2), Rational(1, 2));
}

TEST(Chern, TopChernClassIsEulerCharacteristic) {
  // chi_top(C^(d)) = (-1)^d C(2g-2, d) for the symmetric power of a genus-g curve.
  for (int g = 1; g <= 5; ++g)
    for (int d = 1; d <= 5; ++d) {
      const Rational top = integrate(chern_total_sympower(g, d).degree_part(d));
      EXPECT_EQ(top, Rational(sign_power(d) * binomial(2 * g - 2, d))) << g << " " << d;
    }
}

TEST(Todd, LowDegreeTerms) {
  const auto t = todd_of(chern_total_sympower(11, 6));
  EXPECT_EQ(t.coefficient(1, 0), -2);
  EXPECT_EQ(t.coefficient(0, 1), Rational(-1, 2));
  EXPECT_EQ(t.coefficient(2, 0), Rational(13, 6));
  EXPECT_EQ(t.coefficient(1, 1), Rational(13, 12));
  EXPECT_EQ(t.coefficient(0, 2), Rational(1, 8));

  const auto ti = todd_inverse_of(chern_total_sympower(6, 6));
  EXPECT_EQ(ti.coefficient(1, 0), Rational(-1, 2));
  EXPECT_EQ(ti.coefficient(0, 1), Rational(1, 2));
  EXPECT_EQ(ti.coefficient(2, 0), Rational(1, 6));
  EXPECT_EQ(ti.coefficient(1, 1), Rational(-1, 3));
  EXPECT_EQ(ti.coefficient(0, 2), Rational(1, 8));
}

TEST(Todd, InverseIsInverse) {
  for (const auto& [g, d] : std::vector<std::pair<int, int>>{{6, 6}, {11, 6}, {3, 4}}) {
    const auto c = chern_total_sympower(g, d);
    EXPECT_EQ(todd_of(c) * todd_inverse_of(c), SymClass<>::unit(g, d));
  }
}

TEST(Todd, HolomorphicEulerCharacteristic) {
  // chi(O) of C^(d) is (-1)^d C(g-1, d) (the structure sheaf of a symmetric product).
  for (int g = 1; g <= 5; ++g)
    for (int d = 1; d <= 5; ++d) {
      const Rational chi = integrate(todd_of(chern_total_sympower(g, d)));
      EXPECT_EQ(chi, Rational(sign_power(d) * binomial(g - 1, d))) << g << " " << d;
    }
}

TEST(ExpLog, RoundTrip) {
  const auto y = Rational(3) * SymClass<>::eta(6, 6) - SymClass<>::theta(6, 6);
  EXPECT_EQ(log(exp(y)), y);
  EXPECT_THROW(log(SymClass<>::eta(6, 6)), std::invalid_argument);
  EXPECT_THROW(exp(SymClass<>::unit(6, 6)), std::invalid_argument);
}

TEST(Secant, PlaneInSixthPower) {
  const auto s = secant_classes(6, 6, 2);
  ASSERT_TRUE(s.pencil.has_value());
  EXPECT_EQ(s.point.dimension, 0);
  EXPECT_EQ(s.pencil->dimension, 1);
  EXPECT_EQ(s.full.dimension, 2);
  // The defining pairings: eta^(s-j) theta^j integrates to delta_{j0}.
  for (const ProjClass* p : {&s.point, &*s.pencil, &s.full})
    for (int j = 0; j <= p->dimension; ++j) {
      const auto probe = SymClass<>::monomial(6, 6, p->dimension - j, j, 1);
      EXPECT_EQ(integrate(p->cls * probe), j == 0 ? 1 : 0);
    }
}

TEST(Secant, NoPencilForAPoint) {
  const auto s = secant_classes(6, 6, 0);
  EXPECT_FALSE(s.pencil.has_value());
  EXPECT_EQ(s.full.cls, s.point.cls);
  EXPECT_THROW(secant_classes(6, 6, -1), std::invalid_argument);
}

TEST(Secant, PointClassIsDegreeOne) {
  for (int g = 1; g <= 6; ++g)
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(integrate(linear_subspace_class(g, d, 0).cls), 1);
}

TEST(PolynomialCoefficients, MapAndIntegrate) {
  const auto n = Polynomial::variable();
  const auto x = n * SymClass<Polynomial>::eta(2, 2);
  const auto sq = x * x;
  EXPECT_EQ(integrate(sq), n * n);
}
