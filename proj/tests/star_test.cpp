#include <gtest/gtest.h>

#include "oom/oom.hpp"
#include "support.hpp"

using namespace oom;

namespace {
const ExtendedReal e = ExtendedReal::epsilon();
}

TEST(Star, Membership) {
  EXPECT_TRUE(is_member(3 * e * e, OomValue::pos(2)));
  EXPECT_FALSE(is_member(3 * e * e, OomValue::pos(1)));
  EXPECT_FALSE(is_member(-3 * e * e, OomValue::pos(2)));
  // (0, m)* is everything of order ≥ m, zero included.
  EXPECT_TRUE(is_member(-e * e, OomValue::unsure(1)));
  EXPECT_TRUE(is_member(e, OomValue::unsure(1)));
  EXPECT_TRUE(is_member(ExtendedReal(), OomValue::unsure(1)));
  EXPECT_FALSE(is_member(ExtendedReal(1), OomValue::unsure(1)));
  EXPECT_TRUE(is_member(ExtendedReal(), OomValue::zero()));
  EXPECT_FALSE(is_member(e, OomValue::zero()));
}

TEST(Star, SamplesAreMembers) {
  StarSamplerConfig cfg;
  cfg.seed = 9;
  StarSampler s(cfg);
  for (const auto& a : oomtest::window(-5, 5))
    for (int i = 0; i < 200; ++i) {
      const ExtendedReal r = s.draw(a);
      ASSERT_TRUE(is_member(r, a)) << a << " " << to_string(r);
    }
}

TEST(Star, UnsureDrawsCoverZeroAndBothSigns) {
  StarSamplerConfig cfg;
  cfg.seed = 10;
  StarSampler s(cfg);
  bool zero = false, pos = false, neg = false, deeper = false;
  for (int i = 0; i < 400; ++i) {
    const ExtendedReal r = s.draw(OomValue::unsure(1));
    zero = zero || r.is_zero();
    pos = pos || r.signum() > 0;
    neg = neg || r.signum() < 0;
    deeper = deeper || (!r.is_zero() && r.order() > Order(1));
  }
  EXPECT_TRUE(zero && pos && neg && deeper);
}

TEST(Star, SameSeedReplays) {
  StarSamplerConfig cfg;
  cfg.seed = 77;
  StarSampler a(cfg), b(cfg);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a.draw(OomValue::neg(-2)), b.draw(OomValue::neg(-2)));
}

TEST(Star, PoolNeedsBothSigns) {
  StarSamplerConfig cfg;
  cfg.pool = {1, 2};
  EXPECT_THROW(StarSampler{cfg}, std::invalid_argument);
  cfg.pool = {1, 0, -1};
  EXPECT_THROW(StarSampler{cfg}, std::invalid_argument);
}

// Closure of star-sets under the operations, for every pair in the window and
// 200 interpretation pairs each.
TEST(Star, OperationsMapIntoPredictedStarSets) {
  const auto w = oomtest::window(-2, 2);
  StarSamplerConfig cfg;
  cfg.seed = 12;
  StarSampler s(cfg);
  for (const auto& a : w)
    for (const auto& b : w)
      for (int i = 0; i < 200; ++i) {
        const ExtendedReal r = s.draw(a), t = s.draw(b);
        ASSERT_TRUE(is_member(r + t, a + b));
        ASSERT_TRUE(is_member(r * t, a * b));
        ASSERT_TRUE(is_member(-r, -a));
        if (a.is_invertible()) ASSERT_TRUE(is_member(r.inverse(), inverse(a)));
      }
}
