#include "prymal/cubic27.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace prymal;

TEST(Lines, CountAndLabels) {
  const auto lines = enumerate_lines();
  ASSERT_EQ(lines.size(), 27u);
  std::set<std::string> labels;
  for (const auto& l : lines) {
    labels.insert(l.label());
    EXPECT_EQ(dot(l.v, l.v), -1);
    EXPECT_EQ(dot(l.v, canonical_class()), -1);
  }
  EXPECT_EQ(labels.size(), 27u);
  EXPECT_EQ(lines.front().label(), "E1");
  EXPECT_EQ(make_F(3, 1).label(), "F13");
  EXPECT_EQ(make_G(4).label(), "G4");
}

TEST(Lines, Classification) {
  for (const auto& l : enumerate_lines()) EXPECT_EQ(classify_line(l.v).label(), l.label());
  EXPECT_THROW(classify_line(hyperplane_class()), std::invalid_argument);
}

TEST(Lines, CanonicalClass) { EXPECT_EQ(dot(canonical_class(), canonical_class()), 3); }

TEST(Incidence, EachLineMeetsTen) {
  const auto lines = enumerate_lines();
  for (std::size_t a = 0; a < lines.size(); ++a) {
    int meets = 0;
    for (std::size_t b = 0; b < lines.size(); ++b)
      if (a != b) meets += incidence(lines[a], lines[b]);
    EXPECT_EQ(meets, 10) << lines[a].label();
  }
}

TEST(Incidence, KnownPairs) {
  EXPECT_EQ(incidence(make_E(1), make_E(2)), 0);
  EXPECT_EQ(incidence(make_E(1), make_G(1)), 0);
  EXPECT_EQ(incidence(make_E(1), make_G(2)), 1);
  EXPECT_EQ(incidence(make_E(1), make_F(1, 2)), 1);
  EXPECT_EQ(incidence(make_E(3), make_F(1, 2)), 0);
  EXPECT_EQ(incidence(make_F(1, 2), make_F(3, 4)), 1);
  EXPECT_EQ(incidence(make_F(1, 2), make_F(1, 3)), 0);
}

TEST(Incidence, SelfIsAnError) {
  try {
    incidence(make_E(1), make_E(1));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("self-intersection is -1"), std::string::npos);
  }
}

TEST(Triples, FortyFiveSummingToAnticanonical) {
  const auto lines = enumerate_lines();
  const auto triples = tritangent_triples(lines);
  EXPECT_EQ(triples.size(), 45u);
  const PicVector minus_k = -1 * canonical_class();
  std::vector<int> through(lines.size(), 0);
  for (const auto& t : triples) {
    EXPECT_EQ(lines[t[0]].v + lines[t[1]].v + lines[t[2]].v, minus_k);
    for (auto i : t) ++through[i];
  }
  for (int c : through) EXPECT_EQ(c, 5);
}

TEST(Sixers, SeventyTwo) {
  const auto lines = enumerate_lines();
  const auto six = sixers(lines);
  EXPECT_EQ(six.size(), 72u);
  // Every sixer has a unique complementary sixer of lines each meeting five.
  for (const auto& s : six) {
    int meeting_all_but_one = 0;
    for (std::size_t c = 0; c < lines.size(); ++c) {
      if (std::find(s.begin(), s.end(), c) != s.end()) continue;
      int m = 0;
      for (auto i : s) m += incidence(lines[i], lines[c]);
      if (m == 5) ++meeting_all_but_one;
    }
    EXPECT_EQ(meeting_all_but_one, 6);
  }
}

TEST(Roots, SeventyTwoOrthogonalToK) {
  const auto roots = e6_roots();
  EXPECT_EQ(roots.size(), 72u);
  for (const auto& r : roots) {
    EXPECT_EQ(dot(r, r), -2);
    EXPECT_EQ(dot(r, canonical_class()), 0);
  }
}

TEST(Weyl, ReflectionsPreserveForm) {
  for (const auto& s : WeylGroup::standard_generators()) {
    EXPECT_TRUE(s.preserves_form());
    EXPECT_EQ(s(canonical_class()), canonical_class());
    EXPECT_EQ(s * s, WeylElement::identity());
  }
}

TEST(Weyl, OrderAndTransitivity) {
  const WeylGroup w;
  EXPECT_EQ(w.order(), 51840u);
  std::vector<PicVector> line_vectors;
  for (const auto& l : enumerate_lines()) line_vectors.push_back(l.v);
  EXPECT_TRUE(w.is_transitive(line_vectors));
  EXPECT_TRUE(w.is_transitive(e6_roots()));
  EXPECT_EQ(w.orbit(make_E(1).v).size(), 27u);
}

TEST(Weyl, OrbitOfASixer) {
  const WeylGroup w;
  std::set<PicVector> e;
  for (int i = 1; i <= 6; ++i) e.insert(make_E(i).v);
  EXPECT_EQ(w.orbit(e).size(), 72u);
}

TEST(Weyl, ClosureCap) {
  EXPECT_THROW(WeylGroup(WeylGroup::standard_generators(), 100), WeylGroupError);
  EXPECT_EQ(WeylGroup({WeylElement::identity()}).order(), 1u);
}
