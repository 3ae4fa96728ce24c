// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oom/oom.hpp"
#include "support.hpp"

using namespace oom;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

StarSamplerConfig seeded(std::uint64_t seed) {
  StarSamplerConfig c;
  c.seed = seed;
  return c;
}

// 1. Associativity, commutativity, distributivity over the window.
Outcome laws_on_window() {
  const auto t0 = Clock::now();
  const auto w = oomtest::window(-6, 6);
  std::size_t failures = 0, checks = 0;
  for (const auto& a : w)
    for (const auto& b : w) {
      checks += 2;
      failures += !(a + b == b + a) + !(a * b == b * a);
      for (const auto& c : w) {
        checks += 3;
        failures += !((a + b) + c == a + (b + c));
        failures += !((a * b) * c == a * (b * c));
        failures += !(a * (b + c) == a * b + a * c);
      }
    }
  const double s = seconds_since(t0);
  return {failures == 0 && s < 60,
          std::to_string(w.size()) + " values, " + std::to_string(checks) + " checks, " +
              std::to_string(failures) + " failures, " + fmt_seconds(s)};
}

// 2. 1 + (−1) = (0,0) ≠ 0, and a = 1, b = 0, c = −1.
Outcome non_ring_witness() {
  const OomValue one = OomValue::one(), zero = OomValue::zero(), minus = OomValue::minus_one();
  const OomValue s = one + minus;
  const bool sum_ok = s == OomValue::unsure(0) && s != zero;
  const bool order_ok = gt(one, zero) && !gt(one + minus, zero + minus);
  return {sum_ok && order_ok, "1 + -1 = " + s.to_string() + "; a+c = " + (one + minus).to_string() +
                                  ", b+c = " + (zero + minus).to_string()};
}

// 3. Star-set closure for every pair in the window, 200 draws per pair.
Outcome closure_sampling() {
  const auto w = oomtest::window(-6, 6);
  StarSampler sampler(seeded(3));
  std::size_t failures = 0, draws = 0;
  for (const auto& a : w)
    for (const auto& b : w)
      for (int i = 0; i < 200; ++i) {
        const ExtendedReal r = sampler.draw(a), t = sampler.draw(b);
        ++draws;
        failures += !is_member(r + t, a + b);
        failures += !is_member(r * t, a * b);
        failures += !is_member(-r, -a);
        if (a.is_invertible()) failures += !is_member(r.inverse(), inverse(a));
      }
  return {failures == 0, std::to_string(w.size() * w.size()) + " pairs, " + std::to_string(draws) +
                             " draws, " + std::to_string(failures) + " failures"};
}

// 4. Finite sets: (S+T)U ≠ SU + TU.
Outcome finite_set_counterexample() {
  const FiniteSet S{ExtendedReal(1)}, T{ExtendedReal(1)}, U{ExtendedReal(1), ExtendedReal(2)};
  const FiniteSet lhs = (S + T) * U, rhs = S * U + T * U;
  const bool ok = lhs == FiniteSet{ExtendedReal(2), ExtendedReal(4)} &&
                  rhs == FiniteSet{ExtendedReal(2), ExtendedReal(3), ExtendedReal(4)};
  return {ok, "(S+T)U = " + lhs.to_string() + ", SU+TU = " + rhs.to_string()};
}

// 5. x2 + −(x1 × x3) with x1 = x2 = (−,2), x3 = (+,0).
Outcome worked_formula() {
  const auto p = parse_formula("x2 + -(x1*x3)");
  const Instantiation<OomValue> a{{1, OomValue::neg(2)}, {2, OomValue::neg(2)}, {3, OomValue::one()}};
  const auto v = evaluate(p.formula, a);
  return {v && *v == OomValue::unsure(2), v ? v->to_string() : "undefined"};
}

struct ClaimPair {
  Formula f, g;
  Instantiation<OomValue> a, b;
};

// Random pairs of defined formulas (depth ≤ 3, orders in [−3, 3]) whose
// strict relation holds or fails as requested.
std::vector<ClaimPair> generate_pairs(std::uint64_t seed, std::size_t count, bool holding) {
  std::mt19937_64 rng(seed);
  std::vector<ClaimPair> out;
  while (out.size() < count) {
    SymbolIndex next = 1;
    Formula f = oomtest::random_formula(rng, 3, next);
    Formula g = oomtest::random_formula(rng, 3, next);
    auto a = oomtest::random_instantiation(rng, f, -3, 3);
    auto b = oomtest::random_instantiation(rng, g, -3, 3);
    const auto fa = evaluate(f, a), gb = evaluate(g, b);
    if (!fa || !gb || gt(*fa, *gb) != holding) continue;
    out.push_back({f, g, a, b});
  }
  return out;
}

// 6. Soundness over 500 holding pairs, 100 interpretation pairs each.
Outcome formula_soundness() {
  const auto t0 = Clock::now();
  const auto pairs = generate_pairs(6, 500, true);
  std::size_t violations = 0, samples = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    const auto rep = verify_gt(p.f, p.a, p.g, p.b, seeded(6000 + i), 100);
    violations += rep.failures;
    samples += rep.samples;
  }
  const double s = seconds_since(t0);
  return {violations == 0 && samples == 50000 && s < 300,
          std::to_string(pairs.size()) + " pairs, " + std::to_string(samples) + " samples, " +
              std::to_string(violations) + " violations, " + fmt_seconds(s)};
}

// 7. Completeness over 200 failing pairs, budget 10⁴ each.
Outcome formula_completeness() {
  const auto pairs = generate_pairs(7, 200, false);
  std::size_t exhausted = 0, max_attempts = 0, bad = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    const auto res = search_counterexample(p.f, p.a, p.g, p.b, seeded(7000 + i), 10000);
    if (!res.witness) {
      ++exhausted;
      continue;
    }
    max_attempts = std::max(max_attempts, res.attempts);
    // Recheck the witness from scratch.
    const auto& w = *res.witness;
    bool ok = !(w.lhs_value > w.rhs_value);
    for (const auto& [k, v] : w.lhs) ok = ok && is_member(v, p.a.at(k));
    for (const auto& [k, v] : w.rhs) ok = ok && is_member(v, p.b.at(k));
    ok = ok && evaluate(p.f, w.lhs) == std::optional(w.lhs_value);
    ok = ok && evaluate(p.g, w.rhs) == std::optional(w.rhs_value);
    bad += !ok;
  }
  return {exhausted == 0 && bad == 0,
          std::to_string(pairs.size()) + " pairs, " + std::to_string(exhausted) + " exhausted, " +
              std::to_string(bad) + " invalid witnesses, max attempts " +
              std::to_string(max_attempts)};
}

// 8. Rank/OOM transport and conditional correspondence.
Outcome kappa_isomorphism() {
  std::vector<Rank> ranks{Rank::infinity()};
  for (std::int64_t m = 0; m <= 20; ++m) ranks.emplace_back(m);
  std::size_t failures = 0;
  for (const Rank& m : ranks)
    for (const Rank& n : ranks) {
      failures += !(rank_to_oom(min(m, n)) == rank_to_oom(m) + rank_to_oom(n));
      failures += !(rank_to_oom(m + n) == rank_to_oom(m) * rank_to_oom(n));
      failures += (m < n) != gt(rank_to_oom(m), rank_to_oom(n));
    }
  std::mt19937_64 rng(8);
  std::size_t cases = 0;
  while (cases < 1000) {
    const auto space = oomtest::outcomes(static_cast<std::size_t>(oomtest::uniform(rng, 1, 6)));
    const auto k = oomtest::random_kappa(rng, space, 8);
    const Event A = oomtest::random_event(rng, space), B = oomtest::random_event(rng, space);
    if (kappa_event(k, B).is_infinite()) continue;
    ++cases;
    const auto P = kappa_to_oom(k);
    failures += !(oom_to_kappa(P) == k);
    failures += !(rank_to_oom(kappa_cond(k, A, B)) == oom_prob_cond(P, A, B));
  }
  return {failures == 0, "ranks 0..20 and inf exhaustive, " + std::to_string(cases) +
                             " conditional cases, " + std::to_string(failures) + " failures"};
}

// 9. classify(sample(P)) = P with atoms summing to exactly 1.
Outcome interpretation_round_trip() {
  std::mt19937_64 rng(9);
  const auto pool = default_lambda_pool();
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto space = oomtest::outcomes(static_cast<std::size_t>(oomtest::uniform(rng, 1, 6)));
    const auto P = kappa_to_oom(oomtest::random_kappa(rng, space, 6));
    const auto R = sample_prob_interpretation(P, pool, rng);
    ExtendedReal total;
    for (const auto& v : R.atoms()) total += v;
    failures += !(classify_prob(R) == P) + !(total == ExtendedReal(1));
  }
  return {failures == 0, "1000 distributions, " + std::to_string(failures) + " failures"};
}

// 10. Linearity of expectation and the min-plus closed form.
Outcome linearity() {
  std::mt19937_64 rng(10);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto space = oomtest::outcomes(static_cast<std::size_t>(oomtest::uniform(rng, 1, 6)));
    const auto k = oomtest::random_kappa(rng, space, 5);
    const auto P = kappa_to_oom(k);
    const auto U = oomtest::random_utility(rng, space, -4, 4);
    const auto V = oomtest::random_utility(rng, space, -4, 4);
    const auto lambda = oomtest::random_oom(rng, -4, 4, 8);
    failures += !(expect(P, U + V) == expect(P, U) + expect(P, V));
    failures += !(expect(P, -U) == -expect(P, U));
    failures += !(expect(P, OomUtility::constant(space, lambda)) == lambda);
    failures += !(expect(P, lambda * U) == lambda * expect(P, U));
    failures += !(expect_closed_form(k, U) == expect(P, U));
  }
  return {failures == 0, "1000 instances, " + std::to_string(failures) + " failures"};
}

const OutcomeSpace& two_outcomes() {
  static const OutcomeSpace s = oomtest::outcomes(2);
  return s;
}

// 11. κ = (0, 0), μ = (4, −3).
Outcome pearl_dominant_gain() {
  const KappaFunction k(two_outcomes(), {Rank(0), Rank(0)});
  const auto c = pearl_cross_check(k, PearlMu(two_outcomes(), {4, -3}));
  const bool ok = c.levels == PearlLevels{4, 3} && c.original == PearlValue{1} &&
                  c.amended == PearlValue{4} && c.expectation == OomValue::pos(-4);
  return {ok, "(n+, n-) = (" + std::to_string(c.levels.n_plus) + "," +
                  std::to_string(c.levels.n_minus) + "), original " + c.original.to_string() +
                  ", amended " + c.amended.to_string() + ", oom " + c.expectation.to_string()};
}

// 12. μ₁ = (2, −2), μ₂ = (−5, −5) under κ = (0, 0).
Outcome pearl_ambiguous() {
  const KappaFunction k(two_outcomes(), {Rank(0), Rank(0)});
  const PearlMu mu1(two_outcomes(), {2, -2}), mu2(two_outcomes(), {-5, -5});
  const auto c1 = pearl_cross_check(k, mu1), c2 = pearl_cross_check(k, mu2);
  const DecisionOption o1{"option1", kappa_to_oom(k), mu_to_utility(mu1)};
  const DecisionOption o2{"option2", kappa_to_oom(k), mu_to_utility(mu2)};
  const auto rep = verify_theorem3(o1, o2, seeded(12), 200, 10000);
  const bool ok = c1.amended.is_ambiguous() && c2.amended == PearlValue{-5} &&
                  c1.expectation == OomValue::unsure(-2) && c2.expectation == OomValue::neg(-5) &&
                  rep.preference == Preference::FirstPreferred && rep.samples >= 200 &&
                  rep.failures == 0;
  return {ok, "option1 " + c1.amended.to_string() + " / " + c1.expectation.to_string() +
                  ", option2 " + c2.amended.to_string() + " / " + c2.expectation.to_string() + ", " +
                  to_string(rep.preference) + ", " + std::to_string(rep.samples - rep.failures) +
                  "/" + std::to_string(rep.samples) + " tuples sound"};
}

// 13. Four-case correspondence on random (κ, μ).
Outcome pearl_cross_checks() {
  std::mt19937_64 rng(13);
  std::size_t mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto space = oomtest::outcomes(static_cast<std::size_t>(oomtest::uniform(rng, 1, 6)));
    const auto k = oomtest::random_kappa(rng, space, 6);
    std::vector<std::int64_t> mus;
    for (std::size_t w = 0; w < space.size(); ++w) mus.push_back(oomtest::uniform(rng, -6, 6));
    mismatches += !pearl_cross_check(k, PearlMu(space, mus)).agrees;
  }
  return {mismatches == 0, "1000 cases, " + std::to_string(mismatches) + " mismatches"};
}

// 14. Evaluation at half the sign bound has the symbolic sign.
Outcome sign_bound_oracle() {
  std::mt19937_64 rng(14);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const ExtendedReal r = oomtest::random_nonzero(rng);
    failures += sign(r.evaluate(sign_bound(r) / 2)) != r.signum();
  }
  return {failures == 0, "1000 values, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"R° laws exhaustive on orders [-6,6] and inf", laws_on_window},
      {"1 + (-1) = (0,0) and order not preserved by +", non_ring_witness},
      {"star-set closure, 200 draws per window pair", closure_sampling},
      {"finite-set distributivity counterexample", finite_set_counterexample},
      {"x2 + -(x1*x3) evaluates to (0,2)", worked_formula},
      {"formula soundness, 500 pairs x 100 interpretations", formula_soundness},
      {"formula completeness, 200 pairs, budget 10^4", formula_completeness},
      {"kappa <-> order-of-magnitude isomorphism", kappa_isomorphism},
      {"probabilistic interpretation round trip", interpretation_round_trip},
      {"expectation linearity and closed form", linearity},
      {"Pearl example: kappa (0,0), mu (4,-3)", pearl_dominant_gain},
      {"Pearl example: ambiguous vs (-,-5)", pearl_ambiguous},
      {"Pearl four-case correspondence", pearl_cross_checks},
      {"sign-bound oracle", sign_bound_oracle},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("[%s] %2zu. %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
