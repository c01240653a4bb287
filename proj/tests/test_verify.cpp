#include "ttsupport/verify.hpp"

#include <gtest/gtest.h>

using namespace ttsupport;

namespace {

std::string flatten(const std::vector<verify::SuiteResult>& results) { return verify::to_report(results).to_text(); }

}  // namespace

TEST(Verify, EverySuitePassesOnSmallRun) {
  verify::Options o;
  o.cases = 60;
  o.seed = 1234;
  for (const auto& r : verify::run_all(o)) {
    EXPECT_TRUE(r.ok()) << r.id << ": " << (r.first_failure ? r.first_failure->second.name + " " + r.first_failure->second.actual : "");
    EXPECT_GT(r.cases, 0u) << r.id;
  }
}

TEST(Verify, DeterministicAcrossWorkerCounts) {
  verify::Options o;
  o.cases = 40;
  o.seed = 7;
  const std::string single = flatten(verify::run_all(o));
  o.workers = 4;
  EXPECT_EQ(flatten(verify::run_all(o)), single);
  EXPECT_EQ(flatten(verify::run_all(o)), single);
}

TEST(Verify, SeedChangesCases) {
  gen::Rng a = gen::case_rng(1, "c01", 0), b = gen::case_rng(2, "c01", 0), c = gen::case_rng(1, "c02", 0);
  const auto x = a();
  EXPECT_NE(x, b());
  EXPECT_NE(x, c());
  EXPECT_EQ(x, gen::case_rng(1, "c01", 0)());
}

TEST(Verify, FailuresAndExceptionsAreCounted) {
  verify::Options o;
  o.cases = 10;
  const auto r = verify::run_cases("t", "fails on odd ids", 10, o, [](gen::Rng&, std::size_t id) {
    if (id == 3) throw std::runtime_error("boom");
    Report rep;
    rep.expect("even", id % 2 == 0);
    return rep;
  });
  EXPECT_EQ(r.failed_cases, 5u);
  ASSERT_TRUE(r.first_failure.has_value());
  EXPECT_EQ(r.first_failure->first, 1u);
  EXPECT_FALSE(verify::to_report({r}).ok());
}

TEST(Verify, FilterSelectsByPrefix) {
  verify::Options o;
  o.cases = 5;
  const auto r = verify::run_all(o, "znum.");
  ASSERT_EQ(r.size(), 3u);
  for (const auto& s : r) EXPECT_EQ(s.id.rfind("znum.", 0), 0u);
}
