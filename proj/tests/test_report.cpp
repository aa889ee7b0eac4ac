#include "prymal/acceptance.hpp"
#include "prymal/report.hpp"

#include <gtest/gtest.h>

using namespace prymal;

namespace {

Report sample() {
  Report r;
  r.criteria.push_back(run_criterion(1, "demo", "first", 10, [](CriterionResult& c) {
    c.expect("value", "3/2", to_string(Rational(3, 2)), Provenance::Reference);
    c.expect_equal("count", std::size_t{4}, std::size_t{4}, Provenance::Oracle);
  }));
  r.criteria.push_back(run_criterion(2, "demo", "second", 10, [](CriterionResult& c) {
    c.expect_true("flag", true, Provenance::Identity);
  }));
  return r;
}

}  // namespace

TEST(Criterion, PassFailAndErrors) {
  const auto ok = run_criterion(1, "s", "t", 10, [](CriterionResult& c) { c.expect_true("x", true, Provenance::Identity); });
  EXPECT_TRUE(ok.passed());
  const auto bad = run_criterion(1, "s", "t", 10, [](CriterionResult& c) {
    c.expect("x", "1", "2", Provenance::Reference);
    c.expect("y", "1", "1", Provenance::Reference);
  });
  EXPECT_FALSE(bad.passed());
  ASSERT_EQ(bad.failures().size(), 1u);
  EXPECT_EQ(bad.failures()[0]->name, "x");
  const auto threw = run_criterion(1, "s", "t", 10, [](CriterionResult&) { throw std::runtime_error("boom"); });
  EXPECT_FALSE(threw.passed());
  EXPECT_EQ(threw.error, "boom");
  const auto empty = run_criterion(1, "s", "t", 10, [](CriterionResult&) {});
  EXPECT_FALSE(empty.passed());
  const auto slow = run_criterion(1, "s", "t", 0, [](CriterionResult& c) { c.expect_true("x", true, Provenance::Identity); });
  EXPECT_FALSE(slow.passed());
}

TEST(Json, TaggedValues) {
  const auto j = tagged(Rational(-4, 3), Provenance::Oracle);
  EXPECT_EQ(j.dump(), R"({"provenance":"oracle","value":"-4/3"})");
}

TEST(Json, DeterministicWithoutTimings) {
  const auto a = sample().to_json().dump(2);
  const auto b = sample().to_json().dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("seconds\""), a.find("limit_seconds\"") + 6);
  EXPECT_NE(sample().to_json(true).dump().find("\"seconds\""), std::string::npos);
}

TEST(Json, RoundTripAndProvenance) {
  const auto parsed = nlohmann::json::parse(sample().to_json().dump());
  EXPECT_TRUE(parsed.at("passed").get<bool>());
  ASSERT_EQ(parsed.at("criteria").size(), 2u);
  for (const auto& c : parsed.at("criteria"))
    for (const auto& k : c.at("checks")) {
      EXPECT_TRUE(k.at("expected").contains("provenance"));
      EXPECT_TRUE(k.at("expected").contains("value"));
    }
  EXPECT_EQ(parsed["criteria"][0]["checks"][0]["expected"]["provenance"], "reference");
  EXPECT_EQ(parsed["criteria"][0]["checks"][1]["expected"]["provenance"], "oracle");
}

TEST(Markdown, Table) {
  const auto md = sample().to_markdown();
  EXPECT_NE(md.find("## 1. first [PASS]"), std::string::npos);
  EXPECT_NE(md.find("| value | pass | 3/2 | 3/2 | reference |"), std::string::npos);
  EXPECT_NE(md.find("All criteria pass."), std::string::npos);
  EXPECT_EQ(md.find("time "), std::string::npos);
}

TEST(Acceptance, SuitesAndSelection) {
  EXPECT_EQ(acceptance::suite_names(),
            (std::vector<std::string>{"pairings", "lines", "pushforward", "hilbert", "hodge", "properties"}));
  const auto r = run_acceptance("hilbert");
  ASSERT_EQ(r.criteria.size(), 1u);
  EXPECT_EQ(r.criteria[0].id, 6);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(run_acceptance("no-such-suite").criteria.empty());
}
