#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oom/error.hpp"
#include "oom/extended_real.hpp"
#include "oom/oom_value.hpp"
#include "oom/rational.hpp"

namespace oom {

/// Finite set of mutually exclusive, exhaustive outcomes, in a fixed order.
class OutcomeSpace {
 public:
  OutcomeSpace() = default;
  explicit OutcomeSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("outcome space is empty");
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (!index_.emplace(labels_[i], i).second)
        throw std::invalid_argument("duplicate outcome '" + labels_[i] + "'");
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::size_t index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw UnknownOutcome("unknown outcome '" + label + "'");
    return it->second;
  }

  bool contains(const std::string& label) const { return index_.count(label) != 0; }

  friend bool operator==(const OutcomeSpace& a, const OutcomeSpace& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
};

/// An event: a subset of Ω given by labels.
using Event = std::set<std::string>;

/// Ranks are non-negative integers or ∞.
using Rank = Order;

/// Degrees of surprise for each outcome, extended to events by min. At least
/// one outcome has rank 0.
class KappaFunction {
 public:
  KappaFunction(OutcomeSpace space, std::vector<Rank> ranks)
      : space_(std::move(space)), ranks_(std::move(ranks)) {
    if (ranks_.size() != space_.size())
      throw std::invalid_argument("kappa needs one rank per outcome");
    bool has_zero = false;
    for (const Rank& r : ranks_) {
      if (r.is_finite() && r.value() < 0) throw std::invalid_argument("negative kappa rank");
      if (r == Rank(0)) has_zero = true;
    }
    if (!has_zero) throw std::invalid_argument("kappa function needs an outcome of rank 0");
  }

  const OutcomeSpace& space() const { return space_; }
  const std::vector<Rank>& ranks() const { return ranks_; }
  Rank atom(std::size_t i) const { return ranks_.at(i); }
  Rank atom(const std::string& label) const { return ranks_[space_.index(label)]; }

  friend bool operator==(const KappaFunction&, const KappaFunction&) = default;

 private:
  OutcomeSpace space_;
  std::vector<Rank> ranks_;
};

/// κ(A) = min of the atom ranks in A; κ(∅) = ∞.
inline Rank kappa_event(const KappaFunction& k, const Event& A) {
  Rank r = Rank::infinity();
  for (const auto& w : A) r = min(r, k.atom(w));
  return r;
}

inline Event intersect(const Event& A, const Event& B) {
  Event out;
  for (const auto& w : A)
    if (B.count(w)) out.insert(w);
  return out;
}

/// κ(A|B) = κ(A ∩ B) − κ(B).
inline Rank kappa_cond(const KappaFunction& k, const Event& A, const Event& B) {
  for (const auto& w : A) k.space().index(w);
  const Rank kb = kappa_event(k, B);
  if (kb.is_infinite()) throw ConditionImpossible("conditioning event has rank inf");
  const Rank kab = kappa_event(k, intersect(A, B));
  if (kab.is_infinite()) return Rank::infinity();
  return Rank(kab.value() - kb.value());
}

/// Atom values in [0,1]° = {(+,m) : m ≥ 0} ∪ {0}, at least one equal to 1.
class OomProbability {
 public:
  OomProbability(OutcomeSpace space, std::vector<OomValue> atoms)
      : space_(std::move(space)), atoms_(std::move(atoms)) {
    if (atoms_.size() != space_.size())
      throw std::invalid_argument("probability needs one value per outcome");
    bool has_one = false;
    for (const auto& v : atoms_) {
      const bool in_range = v.is_zero() || (v.sign() == Sign::Pos && v.order() >= Order(0));
      if (!in_range)
        throw InvalidDistribution("probability value " + v.to_string() + " outside [0,1]");
      if (v == OomValue::one()) has_one = true;
    }
    if (!has_one) throw InvalidDistribution("no outcome has probability (+,0)");
  }

  const OutcomeSpace& space() const { return space_; }
  const std::vector<OomValue>& atoms() const { return atoms_; }
  const OomValue& atom(std::size_t i) const { return atoms_.at(i); }
  const OomValue& atom(const std::string& label) const { return atoms_[space_.index(label)]; }

  friend bool operator==(const OomProbability&, const OomProbability&) = default;

 private:
  OutcomeSpace space_;
  std::vector<OomValue> atoms_;
};

/// P(A): order-of-magnitude sum of the atoms of A.
inline OomValue oom_prob_event(const OomProbability& P, const Event& A) {
  OomValue s = OomValue::zero();
  for (const auto& w : A) s += P.atom(w);
  return s;
}

/// P(A|B) = P(A ∩ B) / P(B).
inline OomValue oom_prob_cond(const OomProbability& P, const Event& A, const Event& B) {
  for (const auto& w : A) P.space().index(w);
  const OomValue pb = oom_prob_event(P, B);
  if (!pb.is_invertible())
    throw ConditionNotInvertible("P(B) = " + pb.to_string() + " has no inverse");
  return oom_prob_event(P, intersect(A, B)) / pb;
}

/// Rank m ↦ (+, m); ∞ ↦ 0.
inline OomValue rank_to_oom(Rank r) {
  return r.is_infinite() ? OomValue::zero() : OomValue::pos(r.value());
}

inline Rank oom_to_rank(const OomValue& v) {
  if (v.is_zero()) return Rank::infinity();
  if (v.sign() != Sign::Pos || v.order() < Order(0))
    throw InvalidDistribution(v.to_string() + " is not a probability value");
  return v.order();
}

inline OomProbability kappa_to_oom(const KappaFunction& k) {
  std::vector<OomValue> atoms;
  for (const Rank& r : k.ranks()) atoms.push_back(rank_to_oom(r));
  return {k.space(), std::move(atoms)};
}

inline KappaFunction oom_to_kappa(const OomProbability& P) {
  std::vector<Rank> ranks;
  for (const auto& v : P.atoms()) ranks.push_back(oom_to_rank(v));
  return {P.space(), std::move(ranks)};
}

/// Embedding into possibility measures: rank m ↦ 2^-m, ∞ ↦ 0.
inline std::map<std::string, Rational> possibility_embed(const KappaFunction& k) {
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < k.space().size(); ++i) {
    const Rank r = k.atom(i);
    Rational v = 0;
    if (r.is_finite()) {
      mpz_class den = 1;
      den <<= static_cast<mp_bitcnt_t>(r.value());
      v = Rational(mpz_class(1), den);
    }
    out.emplace(k.space().label(i), v);
  }
  return out;
}

/// Probability function with values in R*; atoms lie in [0,1]* and sum to 1
/// exactly.
class ExtendedProbability {
 public:
  ExtendedProbability(OutcomeSpace space, std::vector<ExtendedReal> atoms)
      : space_(std::move(space)), atoms_(std::move(atoms)) {
    if (atoms_.size() != space_.size())
      throw InvalidDistribution("extended probability needs one value per outcome");
    ExtendedReal total;
    for (const auto& v : atoms_) {
      if (v < ExtendedReal() || v > ExtendedReal(1))
        throw InvalidDistribution("extended probability value outside [0,1]");
      total += v;
    }
    if (!(total == ExtendedReal(1))) throw InvalidDistribution("atoms do not sum to 1");
  }

  const OutcomeSpace& space() const { return space_; }
  const std::vector<ExtendedReal>& atoms() const { return atoms_; }
  const ExtendedReal& atom(std::size_t i) const { return atoms_.at(i); }

  ExtendedReal event(const Event& A) const {
    ExtendedReal s;
    for (const auto& w : A) s += atoms_[space_.index(w)];
    return s;
  }

  ExtendedReal cond(const Event& A, const Event& B) const {
    const ExtendedReal pb = event(B);
    if (pb.is_zero()) throw ConditionImpossible("conditioning event has probability 0");
    return event(intersect(A, B)) / pb;
  }

 private:
  OutcomeSpace space_;
  std::vector<ExtendedReal> atoms_;
};

/// Positive λ values used to build probabilistic interpretations.
inline std::vector<Rational> default_lambda_pool() {
  return {1, 2, 3, make_rational(1, 2), make_rational(5, 2)};
}

/// R(ω) = λ_ω ε^{m_ω} / Z for P(ω) = (+, m_ω), R(ω) = 0 for P(ω) = 0, with
/// Z the sum of the numerators. `lambdas` has one positive entry per outcome
/// (entries of zero atoms are ignored).
inline ExtendedProbability probabilistic_interpretation(const OomProbability& P,
                                                        const std::vector<Rational>& lambdas) {
  if (lambdas.size() != P.space().size())
    throw std::invalid_argument("need one lambda per outcome");
  std::vector<ExtendedReal> raw;
  ExtendedReal z;
  for (std::size_t i = 0; i < P.space().size(); ++i) {
    const OomValue& v = P.atom(i);
    if (v.is_zero()) {
      raw.emplace_back();
      continue;
    }
    if (lambdas[i] <= 0) throw std::invalid_argument("lambda must be positive");
    raw.push_back(ExtendedReal::monomial(lambdas[i], v.order().value()));
    z += raw.back();
  }
  for (auto& r : raw) r /= z;
  return {P.space(), std::move(raw)};
}

/// Draws λ_ω from `pool` with the given generator.
inline ExtendedProbability sample_prob_interpretation(const OomProbability& P,
                                                      const std::vector<Rational>& pool,
                                                      std::mt19937_64& rng) {
  std::vector<Rational> lambdas;
  for (std::size_t i = 0; i < P.space().size(); ++i) lambdas.push_back(pool[rng() % pool.size()]);
  return probabilistic_interpretation(P, lambdas);
}

inline ExtendedProbability sample_prob_interpretation(const OomProbability& P, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_prob_interpretation(P, default_lambda_pool(), rng);
}

/// R° with R°(ω) = R(ω)°.
inline OomProbability classify_prob(const ExtendedProbability& R) {
  std::vector<OomValue> atoms;
  for (const auto& v : R.atoms()) atoms.push_back(classify(v));
  return {R.space(), std::move(atoms)};
}

}  // namespace oom
