#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oom/extended_real.hpp"
#include "oom/oom_value.hpp"

namespace oom {

/// r ∈ a*. For a with a nonzero sign this is r° = a; (0, m)* is every r of
/// order at least m, including 0.
inline bool is_member(const ExtendedReal& r, const OomValue& a) {
  if (a.is_signless()) return r.order() >= a.order();
  return classify(r) == a;
}

struct StarSamplerConfig {
  /// Leading coefficients to draw from. Must contain both signs.
  std::vector<Rational> pool = default_pool();
  /// (0, m) draws use orders m .. m + max_offset.
  unsigned max_offset = 3;
  /// Upper bound on tail terms in each of the numerator and denominator.
  unsigned tail_terms = 2;
  std::uint64_t seed = 0;

  static std::vector<Rational> default_pool() {
    return {1, -1, 2, -2, make_rational(1, 2), make_rational(-1, 2), 3, -3};
  }

  void validate() const {
    bool pos = false, neg = false;
    for (const auto& c : pool) {
      if (c == 0) throw std::invalid_argument("coefficient pool contains 0");
      (c > 0 ? pos : neg) = true;
    }
    if (!pos || !neg)
      throw std::invalid_argument("coefficient pool needs values of both signs");
  }
};

/// Draws interpretations: random elements of star-sets a*. Owns its generator,
/// so a sampler built from the same config replays the same sequence.
class StarSampler {
 public:
  explicit StarSampler(StarSamplerConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {
    cfg_.validate();
    split_pool();
  }

  const StarSamplerConfig& config() const { return cfg_; }
  std::mt19937_64& engine() { return rng_; }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }

  bool coin(unsigned one_in = 2) { return rng_() % one_in == 0; }

  /// A pool coefficient of the requested sign (magnitude-only for Zero).
  Rational coefficient(Sign s) {
    const auto& side = s == Sign::Neg ? negative_ : positive_;
    return side[rng_() % side.size()];
  }

  Rational any_coefficient() { return cfg_.pool[rng_() % cfg_.pool.size()]; }

  /// λ · ε^n · (1 + t₁)/(1 + t₂), with t₁, t₂ random tails of order ≥ 1 and
  /// λ of sign s. Its classification is (s, n).
  ExtendedReal draw_exact(Sign s, std::int64_t n) {
    ExtendedReal v = ExtendedReal::monomial(coefficient(s), n);
    if (cfg_.tail_terms == 0) return v;
    Polynomial num(1), den(1);
    const auto t1 = uniform(0, cfg_.tail_terms);
    const auto t2 = uniform(0, cfg_.tail_terms);
    for (std::int64_t i = 0; i < t1; ++i)
      num += Polynomial::monomial(any_coefficient(), uniform(1, cfg_.max_offset + 1));
    for (std::int64_t i = 0; i < t2; ++i)
      den += Polynomial::monomial(any_coefficient(), uniform(1, cfg_.max_offset + 1));
    // A tail can cancel the constant 1 only if it has a degree-0 term, which
    // it never does, so num and den keep constant term 1.
    return v * ExtendedReal::from_fraction(num, den);
  }

  ExtendedReal draw(const OomValue& a) {
    if (a.is_zero()) return {};
    const auto n = a.order().value();
    if (!a.is_signless()) return draw_exact(a.sign(), n);
    if (coin(4)) return {};
    const Sign s = coin() ? Sign::Pos : Sign::Neg;
    return draw_exact(s, n + uniform(0, cfg_.max_offset));
  }

  /// Widens the coefficient pool so that searches needing matched or unusual
  /// magnitudes get more candidates.
  void escalate() {
    static const Rational extra[] = {make_rational(1, 3), 4, make_rational(5, 2), 7,
                                     make_rational(1, 5), 10};
    if (escalations_ >= std::size(extra)) return;
    const Rational& e = extra[escalations_++];
    cfg_.pool.push_back(e);
    cfg_.pool.push_back(-e);
    split_pool();
  }

 private:
  void split_pool() {
    positive_.clear();
    negative_.clear();
    for (const auto& c : cfg_.pool) (c > 0 ? positive_ : negative_).push_back(c);
  }

  StarSamplerConfig cfg_;
  std::mt19937_64 rng_;
  std::vector<Rational> positive_, negative_;
  std::size_t escalations_ = 0;
};

/// One draw from a* using a fresh sampler seeded from cfg.
inline ExtendedReal sample_star(const OomValue& a, const StarSamplerConfig& cfg) {
  StarSampler s(cfg);
  return s.draw(a);
}

}  // namespace oom
