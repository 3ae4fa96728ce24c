#include <gtest/gtest.h>

#include <random>

#include "oom/oom.hpp"
#include "support.hpp"

using namespace oom;

namespace {

StarSamplerConfig seeded(std::uint64_t seed) {
  StarSamplerConfig c;
  c.seed = seed;
  return c;
}

const Formula x1 = Formula::symbol(1), x2 = Formula::symbol(2);

}  // namespace

TEST(Harness, SoundClaimPassesEverySample) {
  // 1 > −1
  const auto rep = verify_gt(x1, {{1, OomValue::one()}}, x2, {{2, OomValue::minus_one()}},
                             seeded(1), 100);
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.relation, Relation::Greater);
  EXPECT_EQ(rep.samples, 100u);
  EXPECT_EQ(rep.failures, 0u);
}

TEST(Harness, UnsureVersusMinusOneHasAWitness) {
  // (0,0) > (−,0) fails in R°; some r ∈ (0,0)*, s ∈ (−,0)* have r ≤ s.
  const auto rep = check_claim(x1, {{1, OomValue::unsure(0)}}, x2, {{2, OomValue::minus_one()}},
                               seeded(2), 100, 10000);
  EXPECT_FALSE(rep.holds);
  ASSERT_TRUE(rep.witness);
  EXPECT_FALSE(rep.exhausted);
  EXPECT_TRUE(is_member(rep.witness->lhs.at(1), OomValue::unsure(0)));
  EXPECT_TRUE(is_member(rep.witness->rhs.at(2), OomValue::minus_one()));
  EXPECT_TRUE(rep.witness->lhs_value <= rep.witness->rhs_value);
}

TEST(Harness, SearchRefusesTrueClaims) {
  EXPECT_THROW(search_counterexample(x1, {{1, OomValue::one()}}, x2, {{2, OomValue::zero()}},
                                     seeded(3), 10),
               PreconditionViolated);
  EXPECT_THROW(verify_gt(x1, {{1, OomValue::one()}}, x1, {{1, OomValue::one()}}, seeded(3), 10),
               PreconditionViolated);
}

TEST(Harness, UndefinedOperandsAreReported) {
  const Formula f = Formula::inv(x1);
  EXPECT_THROW(verify_gt(f, {{1, OomValue::unsure(0)}}, x2, {{2, OomValue::one()}}, seeded(4), 10),
               UndefinedOperand);
}

TEST(Harness, DirectedUndefinedWitness) {
  // (x1 + x2)^-1 with x1 = (+,1), x2 = (−,1): x1 = −x2 makes the sum exactly 0.
  const Formula f = Formula::inv(Formula::add(x1, x2));
  const Instantiation<OomValue> a{{1, OomValue::pos(1)}, {2, OomValue::neg(1)}};
  const auto w = undefined_witness(f, a, seeded(5), 100);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->directed);
  EXPECT_EQ(w->interpretation.at(1) + w->interpretation.at(2), ExtendedReal());
  EXPECT_TRUE(is_member(w->interpretation.at(1), OomValue::pos(1)));
  EXPECT_TRUE(is_member(w->interpretation.at(2), OomValue::neg(1)));
  EXPECT_FALSE(evaluate(f, w->interpretation));
}

TEST(Harness, UndefinedWitnessRequiresUndefinedFormula) {
  EXPECT_THROW(undefined_witness(x1, {{1, OomValue::one()}}, seeded(6), 10), PreconditionViolated);
}

// realize() hits its target exactly and stays inside every symbol's star-set.
TEST(Harness, RealizeHitsTargetsExactly) {
  std::mt19937_64 rng(31);
  StarSampler sampler(seeded(32));
  int checked = 0;
  for (int i = 0; i < 1500; ++i) {
    SymbolIndex next = 1;
    const Formula f = oomtest::random_formula(rng, 3, next);
    const auto a = oomtest::random_instantiation(rng, f, -3, 3);
    const auto fa = evaluate(f, a);
    if (!fa) continue;
    const ExtendedReal t = sampler.draw(*fa);
    const auto r = realize(f, a, t, sampler);
    for (const auto& [k, v] : r) ASSERT_TRUE(is_member(v, a.at(k))) << to_string(f);
    const auto fr = evaluate(f, r);
    ASSERT_TRUE(fr);
    ASSERT_EQ(*fr, t) << to_string(f);
    ++checked;
  }
  EXPECT_GT(checked, 500);
}

TEST(Harness, RealizeRejectsTargetsOutsideTheStarSet) {
  StarSampler sampler(seeded(33));
  EXPECT_THROW(realize(x1, {{1, OomValue::pos(1)}}, ExtendedReal(1), sampler),
               PreconditionViolated);
}

// Small-scale version of the soundness/completeness runs in the acceptance
// suite.
TEST(Harness, RandomClaims) {
  std::mt19937_64 rng(34);
  int sound = 0, complete = 0;
  for (int i = 0; i < 300; ++i) {
    SymbolIndex next = 1;
    const Formula f = oomtest::random_formula(rng, 2, next);
    const Formula g = oomtest::random_formula(rng, 2, next);
    const auto a = oomtest::random_instantiation(rng, f, -2, 2);
    const auto b = oomtest::random_instantiation(rng, g, -2, 2);
    if (!evaluate(f, a) || !evaluate(g, b)) continue;
    const auto rep = check_claim(f, a, g, b, seeded(100 + i), 20, 10000);
    ASSERT_EQ(rep.failures, 0u) << to_string(f) << " > " << to_string(g);
    ASSERT_FALSE(rep.exhausted) << to_string(f) << " > " << to_string(g);
    (rep.holds ? sound : complete)++;
  }
  EXPECT_GT(sound, 20);
  EXPECT_GT(complete, 20);
}
