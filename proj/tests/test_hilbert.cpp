#include "prymal/hilbert.hpp"

#include <gtest/gtest.h>

using namespace prymal;

namespace {

Polynomial poly(std::initializer_list<Rational> ascending) { return Polynomial(std::vector<Rational>(ascending)); }

}  // namespace

TEST(HilbertS, Polynomial) {
  const auto s = hilbert_S();
  EXPECT_EQ(s.chi, poly({44, -160, 160}));
  EXPECT_EQ(s.chi.to_string("n"), "160n^2 - 160n + 44");
  EXPECT_TRUE(integer_valued_on(s.chi, -20, 20));
}

TEST(HilbertS, RestrictionToThePlane) {
  const auto s = hilbert_S();
  EXPECT_EQ(s.restricted[0], poly({64}));
  EXPECT_EQ(s.restricted[1], poly({-176, 160}));
  EXPECT_EQ(s.restricted[2], poly({244, -400, 160}));
  // Riemann-Roch on P^2 recombines the pieces with todd = 1 + 3/2 h + h^2.
  EXPECT_EQ(s.chi, s.restricted[2] + Polynomial(Rational(3, 2)) * s.restricted[1] + s.restricted[0]);
}

TEST(HilbertS, GrrIdentities) {
  const auto s = hilbert_S();
  // At n = 0 the pushforward of the Todd class is the Todd class of the base,
  // twisted by the pushforward of the structure sheaf; its constant part is 2^6.
  EXPECT_EQ(s.pushed.constant_term(), Polynomial(64));
  EXPECT_EQ(s.ch_pushforward.constant_term(), Polynomial(64));
}

TEST(ProjectiveTodd, Plane) {
  const auto t = todd_projective_space(2);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], 1);
  EXPECT_EQ(t[1], Rational(3, 2));
  EXPECT_EQ(t[2], 1);
}

TEST(HilbertV, FromS) {
  const auto v = hilbert_V_from_S();
  EXPECT_EQ(v.doubled_S, poly({44, -80, 40}));
  EXPECT_EQ(v.chi, poly({22, -40, 20}));
  for (const auto& c : v.components) EXPECT_EQ(c, v.chi);
  EXPECT_EQ(v.chi.to_string("n"), "20n^2 - 40n + 22");
}

TEST(HilbertV, ComponentsSumPairwise) {
  const auto v = hilbert_V_from_S(poly({2, 4, 8}));
  EXPECT_EQ(v.components[0] + v.components[1], v.doubled_S);
  EXPECT_EQ(v.doubled_S, poly({2, 2, 2}));
}

TEST(HilbertW, MatchesV) {
  const auto w = hilbert_Wbar();
  EXPECT_EQ(w.chi_W, poly({14, -32, 20}));
  EXPECT_EQ(w.curve_correction, poly({-8, 8}));
  EXPECT_EQ(w.chi, hilbert_V_from_S().chi);
}

TEST(HilbertW, ToddRoutesAgree) {
  const auto w = hilbert_Wbar();
  EXPECT_EQ(w.todd_W, w.todd_W_series);
  EXPECT_EQ(w.todd_W.xi, -1);
  EXPECT_EQ(w.half_phi_squared_expanded, 20);
  EXPECT_EQ(w.half_phi_squared_split, 20);
}

TEST(FourfoldRing, InverseAndNilpotence) {
  const FourfoldClass<> x{1, 2, 3, 5, 0};
  EXPECT_EQ(x * inverse(x), FourfoldClass<>::one());
  const FourfoldClass<> xi{0, 1, 0, 0};
  EXPECT_EQ((xi * xi * xi).zeta, 0);
  EXPECT_EQ((xi * xi).zeta, kXiSquared);
}

TEST(SelfIntersection, Value) {
  const auto r = self_intersection_Wtilde();
  EXPECT_EQ(r.ambient_term, 24);
  EXPECT_EQ(r.exceptional_term, 8);
  EXPECT_EQ(r.value, 16);
  // A nonzero omega^2 would shift the answer one for one.
  EXPECT_EQ(self_intersection_Wtilde(1).value, 15);
}
