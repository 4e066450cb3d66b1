#include <gtest/gtest.h>

#include "alttree/verify.hpp"

namespace alttree {
namespace {

TEST(Verify, SmallRunPasses) {
  VerifyOptions o;
  o.roundtrip_n = 6;
  o.refinement_n = 6;
  o.equinumerosity_n = 6;
  o.count_recurrence_n = 8;
  o.poly_n = 6;
  o.kpp_n = 6;
  const VerifyReport r = run_verify(o);
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(r.sections.size(), 8u);
  EXPECT_NE(r.to_text().find("all 8 sections passed"), std::string::npos);
}

TEST(Verify, RoundTripCountsObjects) {
  const VerifySection s = verify_roundtrip_perms(3);
  EXPECT_EQ(s.passes, 4u);  // |A_1| + |A_2| + |A_3|
  EXPECT_EQ(s.failures, 0u);
}

TEST(Verify, CorruptedFixtureFails) {
  const VerifySection s = verify_fixtures({{"21534", "0 1 2 3 4"}});
  EXPECT_FALSE(s.ok());
  EXPECT_EQ(s.failures, 1u);
  EXPECT_NE(s.first_counterexample.find("21534"), std::string::npos);
}

TEST(Verify, BadFixtureInputIsAFailureNotACrash) {
  EXPECT_FALSE(verify_fixtures({{"123", "0 1 1"}}).ok());
  EXPECT_FALSE(verify_fixtures({{"213", "x"}}).ok());
}

TEST(Verify, PolySectionFromTwoFails) {
  const VerifySection s = verify_poly_recurrence(2, 4);
  EXPECT_FALSE(s.ok());
  EXPECT_NE(s.first_counterexample.find("(2,2)"), std::string::npos);
}

TEST(Verify, SerialAndParallelAgree) {
  VerifyOptions o;
  o.roundtrip_n = 5;
  o.refinement_n = 5;
  o.equinumerosity_n = 5;
  o.count_recurrence_n = 6;
  o.poly_n = 5;
  o.kpp_n = 5;
  const std::string parallel = run_verify(o).to_text();
  o.parallel = false;
  EXPECT_EQ(run_verify(o).to_text(), parallel);
}

}  // namespace
}  // namespace alttree
