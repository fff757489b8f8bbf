#include <gtest/gtest.h>

#include "floodit/verify.hpp"

using namespace floodit;

namespace {

CampaignConfig quick(const std::string& claim) {
  auto cfg = default_campaign(claim);
  cfg.samples = std::min(cfg.samples, 200);
  if (claim == "rainbow-target" || claim == "path-lb") cfg.n_max = 50;
  return cfg;
}

}  // namespace

TEST(Verify, EveryClaimHoldsOnASmallCampaign) {
  for (const auto& name : claim_names()) {
    auto rep = verify_theorem(name, quick(name));
    EXPECT_TRUE(rep.passed) << rep.to_text();
    EXPECT_GT(rep.instances, 0u) << name;
    EXPECT_EQ(rep.failure_count, 0u) << name;
  }
}

TEST(Verify, UnknownClaim) {
  try {
    verify_theorem("no-such-claim");
    FAIL();
  } catch (const VerifyError& e) {
    EXPECT_EQ(e.kind(), VerifyError::Kind::UnknownClaim);
  }
}

TEST(Verify, InstanceCounts) {
  // n = 2..8 with c in {2, 3}; c = 3 is skipped only at n = 2.
  EXPECT_EQ(verify_theorem("path-result").instances, 13u);
  EXPECT_EQ(verify_theorem("tree-tight").instances, 3u);
  auto cfg = default_campaign("colour-dif");
  cfg.n_max = 10;
  cfg.colours = {3};
  EXPECT_EQ(verify_theorem("colour-dif", cfg).instances, 1u + 2u + 3u * 8u);
}

TEST(Verify, SameSeedSameReport) {
  auto cfg = default_campaign("subgraph");
  cfg.samples = 50;
  cfg.seed = 7;
  EXPECT_EQ(verify_theorem("subgraph", cfg).to_json(), verify_theorem("subgraph", cfg).to_json());
}

TEST(Verify, ReportFormats) {
  auto rep = verify_theorem("cycle-result");
  auto j = rep.to_json();
  EXPECT_EQ(j["schema"], "floodit-report v1");
  EXPECT_EQ(j["campaigns"], kCampaignVersion);
  EXPECT_EQ(j["claim"], "cycle-result");
  EXPECT_EQ(j["grid"]["n_max"], 8);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_NE(rep.to_text().find("passed: yes"), std::string::npos);
}

TEST(Verify, FailuresAreRecorded) {
  // Only the first 20 witnesses are kept; the count is exact.
  detail::Campaign cp("probe", CampaignConfig{});
  for (int i = 0; i < 60; ++i) cp.check(i % 2 == 0, [i] { return std::to_string(i); });
  auto rep = cp.finish();
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ(rep.instances, 60u);
  EXPECT_EQ(rep.failure_count, 30u);
  EXPECT_EQ(rep.failures.size(), 20u);
  EXPECT_EQ(rep.failures.front(), "1");
}
