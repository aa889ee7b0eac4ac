#include "prymal/hodge.hpp"

#include <gtest/gtest.h>

using namespace prymal;

namespace {

// Eulerian numbers by the standard recurrence A(n, m) = (n - m) A(n-1, m-1) + (m + 1) A(n-1, m).
Integer eulerian_recurrence(int n, int m) {
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(n + 1), std::vector<Integer>(static_cast<std::size_t>(n + 1), 0));
  a[1][0] = 1;
  for (int k = 2; k <= n; ++k)
    for (int j = 0; j < k; ++j)
      a[k][j] = Integer(j + 1) * a[k - 1][j] + (j > 0 ? Integer(k - j) * a[k - 1][j - 1] : Integer(0));
  return a[n][m];
}

HodgeVector vec(int g, std::initializer_list<long> v) {
  HodgeVector h{g, {}};
  for (long x : v) h.values.emplace_back(x);
  return h;
}

}  // namespace

TEST(Eulerian, AgainstRecurrence) {
  EXPECT_EQ(eulerian(5, 2), 66);
  for (int g = 2; g <= 12; ++g) {
    Integer total = 0;
    for (int p = 0; p < g; ++p) {
      EXPECT_EQ(eulerian(g, p), eulerian_recurrence(g, p)) << g << " " << p;
      total += eulerian(g, p);
    }
    EXPECT_EQ(total, factorial(g));
  }
  EXPECT_THROW(eulerian(5, 5), std::out_of_range);
  EXPECT_THROW(eulerian(5, -1), std::out_of_range);
}

TEST(HodgeNumbers, LowGenus) {
  EXPECT_EQ(hodge_Kplus(5), vec(5, {0, 0, 6, 0, 0}));
  EXPECT_EQ(hodge_Kplus(4).total(), 10);
  EXPECT_EQ(hodge_Kminus(4).total(), 0);
  EXPECT_EQ(hodge_Kminus(5).total(), 72);
}

TEST(HodgeNumbers, Structure) {
  for (int g = 2; g <= 12; ++g) {
    const auto k = hodge_K(g), kp = hodge_Kplus(g), km = hodge_Kminus(g);
    EXPECT_TRUE(k.palindromic()) << g;
    EXPECT_TRUE(kp.palindromic()) << g;
    EXPECT_TRUE(km.palindromic()) << g;
    EXPECT_TRUE(kp.nonnegative()) << g;
    EXPECT_TRUE(km.nonnegative()) << g;
    EXPECT_EQ(k.total(), rank_K(g)) << g;
    const auto r = rank_Kpm(g);
    EXPECT_EQ(kp.total(), r.plus) << g;
    EXPECT_EQ(km.total(), r.minus) << g;
  }
}

TEST(HodgeNumbers, TwoRoutesForInvariantPart) {
  for (int g = 2; g <= 12; ++g) EXPECT_EQ(hodge_Kplus(g), hodge_Kplus_via_euler(g)) << g;
}

TEST(HodgeNumbers, GenusErrors) {
  EXPECT_THROW(hodge_K(1), std::invalid_argument);
  EXPECT_THROW(hodge_Kplus(0), std::invalid_argument);
  EXPECT_THROW(rank_Kpm(1), std::invalid_argument);
  EXPECT_THROW(checked_hodge_number(Rational(1, 2), 3, 1), HodgeError);
  EXPECT_THROW(checked_hodge_number(Rational(-1), 3, 1), HodgeError);
  EXPECT_EQ(checked_hodge_number(Rational(7), 3, 1), 7);
}

TEST(Ranks, Values) {
  EXPECT_EQ(rank_Kpm(5).plus, 6);
  EXPECT_EQ(rank_Kpm(5).minus, 72);
  EXPECT_EQ(rank_Kpm(4).plus, 10);
  EXPECT_EQ(rank_Kpm(4).minus, 0);
  EXPECT_EQ(rank_K(5), 78);
}

TEST(Ranks, CatalanForm) {
  for (int g = 2; g <= 20; ++g) {
    EXPECT_EQ(rank_K(g), rank_K_catalan(g)) << g;
    const auto r = rank_Kpm(g);
    EXPECT_EQ(r.plus + r.minus, rank_K(g)) << g;
  }
}

TEST(EulerCharacteristics, ThetaQuotient) {
  EXPECT_EQ(chi_theta_quotient(5).chi_theta_quotient, 308);
  EXPECT_EQ(chi_theta_quotient(4).chi_theta_quotient, 48);
  EXPECT_EQ(chi_theta_quotient(5).chi_abelian_quotient, 512);
  for (int g = 2; g <= 12; ++g) {
    const auto r = chi_theta_quotient(g);
    EXPECT_EQ(r.chi_theta_quotient, r.chi_theta_quotient_fixed_points);
  }
}

TEST(EulerCharacteristics, OmegaRoutes) {
  for (int g = 2; g <= 10; ++g) {
    Integer alternating = 0;
    for (int p = 0; p < g; ++p) {
      EXPECT_EQ(chi_omega_closed(g, p), chi_omega_hodge(g, p)) << g << " " << p;
      alternating += Integer(sign_power(p)) * chi_omega_p(g, p);
    }
    EXPECT_EQ(alternating, Integer(sign_power(g - 1)) * factorial(g)) << g;
  }
  // Structure sheaf of a theta divisor: chi = (-1)^(g-1).
  EXPECT_EQ(chi_omega_p(5, 0), 1);
  EXPECT_EQ(chi_omega_p(4, 0), -1);
  EXPECT_THROW(chi_omega_p(5, 5), std::out_of_range);
}

TEST(Residues, Values) {
  EXPECT_EQ(chi2_residue(5, 2), Rational(1, 16));
  EXPECT_EQ(chi2_residue(4, 1), Rational(-1, 8));
  EXPECT_EQ(chi4_residue(5, 1), Rational(-5, 2));
  EXPECT_EQ(chi4_residue(4, 1), Rational(-11, 4));
}

TEST(Residues, ClosedForms) {
  for (int g = 2; g <= 10; ++g)
    for (int p = 0; p < g; ++p) {
      EXPECT_EQ(chi2_residue(g, p), chi2_closed(g, p)) << g << " " << p;
      EXPECT_EQ(chi4_residue(g, p), chi4_closed(g, p)) << g << " " << p;
    }
}

TEST(QuotientIdentity, HoldsInRange) {
  for (int g = 2; g <= 10; ++g)
    for (int p = 0; p < g; ++p) EXPECT_TRUE(chi_quotient_identity(g, p)) << g << " " << p;
  const auto r = chi_quotient_report(5, 2);
  EXPECT_EQ(r.lhs, r.rhs);
  EXPECT_THROW(chi_quotient_report(5, 7), std::out_of_range);
  EXPECT_THROW(chi_quotient_report(1, 0), std::invalid_argument);
}

TEST(Levels, Bands) {
  EXPECT_TRUE(within_level(vec(5, {0, 0, 6, 0, 0}), 0));
  EXPECT_FALSE(within_level(vec(5, {0, 1, 6, 1, 0}), 0));
  EXPECT_TRUE(within_level(vec(5, {0, 1, 6, 1, 0}), 2));
  EXPECT_FALSE(within_level(vec(3, {0, 1, 0}), -1));
  for (int g = 2; g <= 12; ++g) EXPECT_TRUE(level_constraints_hold(g)) << g;
}
