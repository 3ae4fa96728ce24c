#pragma once

// Random generators shared by the unit tests and the acceptance suite.

#include <cstdint>
#include <string>
#include <random>
#include <vector>

#include "oom/oom.hpp"

namespace oomtest {

using oom::ExtendedReal;
using oom::Formula;
using oom::Instantiation;
using oom::OomValue;
using oom::Order;
using oom::Rational;
using oom::Sign;

/// All of R° with finite orders in [lo, hi], plus 0.
inline std::vector<OomValue> window(std::int64_t lo, std::int64_t hi) {
  std::vector<OomValue> out{OomValue::zero()};
  for (std::int64_t n = lo; n <= hi; ++n)
    for (Sign s : {Sign::Neg, Sign::Zero, Sign::Pos}) out.emplace_back(s, n);
  return out;
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Nonzero OomValue with order in [lo, hi]; 0 with probability `zero_one_in`⁻¹
/// when that is nonzero.
inline OomValue random_oom(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi,
                           unsigned zero_one_in = 0) {
  if (zero_one_in && rng() % zero_one_in == 0) return OomValue::zero();
  static constexpr Sign signs[] = {Sign::Neg, Sign::Zero, Sign::Pos};
  return {signs[rng() % 3], uniform(rng, lo, hi)};
}

/// Nonzero rational with small numerator and denominator.
inline Rational small_rational(std::mt19937_64& rng, std::int64_t span = 9) {
  std::int64_t p = 0;
  while (p == 0) p = uniform(rng, -span, span);
  return oom::make_rational(p, uniform(rng, 1, span));
}

inline oom::Polynomial random_poly(std::mt19937_64& rng, int terms, std::int64_t max_degree,
                                   bool nonzero_constant) {
  oom::Polynomial p = nonzero_constant ? oom::Polynomial(small_rational(rng)) : oom::Polynomial();
  for (int i = 0; i < terms; ++i)
    p += oom::Polynomial::monomial(small_rational(rng), uniform(rng, 1, max_degree));
  return p;
}

/// Nonzero extended real ε^k · p/q with random small-coefficient p, q.
inline ExtendedReal random_nonzero(std::mt19937_64& rng, std::int64_t max_shift = 4) {
  const auto num = random_poly(rng, static_cast<int>(uniform(rng, 0, 3)), 4, true);
  const auto den = random_poly(rng, static_cast<int>(uniform(rng, 0, 3)), 4, true);
  return ExtendedReal::monomial(1, uniform(rng, -max_shift, max_shift)) *
         ExtendedReal::from_fraction(num, den);
}

inline ExtendedReal random_extended(std::mt19937_64& rng) {
  if (rng() % 8 == 0) return {};
  return random_nonzero(rng);
}

/// Random symbol-linear formula of depth ≤ max_depth over fresh symbols
/// starting at `next`.
inline Formula random_formula(std::mt19937_64& rng, int max_depth, oom::SymbolIndex& next) {
  if (max_depth == 0 || rng() % 4 == 0) return Formula::symbol(next++);
  switch (rng() % 4) {
    case 0: return Formula::neg(random_formula(rng, max_depth - 1, next));
    case 1: return Formula::inv(random_formula(rng, max_depth - 1, next));
    case 2: {
      Formula l = random_formula(rng, max_depth - 1, next);
      return Formula::add(l, random_formula(rng, max_depth - 1, next));
    }
    default: {
      Formula l = random_formula(rng, max_depth - 1, next);
      return Formula::mul(l, random_formula(rng, max_depth - 1, next));
    }
  }
}

inline Instantiation<OomValue> random_instantiation(std::mt19937_64& rng, const Formula& f,
                                                    std::int64_t lo, std::int64_t hi) {
  Instantiation<OomValue> a;
  for (auto i : f.symbols()) a[i] = random_oom(rng, lo, hi, 10);
  return a;
}

inline oom::OutcomeSpace outcomes(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
  return oom::OutcomeSpace(labels);
}

/// Ranks in [0, max_rank] ∪ {∞}, with at least one 0.
inline oom::KappaFunction random_kappa(std::mt19937_64& rng, const oom::OutcomeSpace& space,
                                       std::int64_t max_rank) {
  std::vector<oom::Rank> ranks;
  for (std::size_t i = 0; i < space.size(); ++i)
    ranks.push_back(rng() % 6 == 0 ? oom::Rank::infinity() : oom::Rank(uniform(rng, 0, max_rank)));
  ranks[rng() % ranks.size()] = oom::Rank(0);
  return {space, ranks};
}

inline oom::OomUtility random_utility(std::mt19937_64& rng, const oom::OutcomeSpace& space,
                                      std::int64_t lo, std::int64_t hi) {
  std::vector<OomValue> v;
  for (std::size_t i = 0; i < space.size(); ++i) v.push_back(random_oom(rng, lo, hi, 8));
  return {space, v};
}

inline oom::Event random_event(std::mt19937_64& rng, const oom::OutcomeSpace& space) {
  oom::Event e;
  for (const auto& w : space.labels())
    if (rng() % 2) e.insert(w);
  return e;
}

}  // namespace oomtest
