#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oom/error.hpp"
#include "oom/extended_real.hpp"
#include "oom/kappa.hpp"
#include "oom/oom_value.hpp"
#include "oom/star.hpp"

namespace oom {

/// U(ω) = (σ(ω), m(ω)) for every outcome.
class OomUtility {
 public:
  OomUtility(OutcomeSpace space, std::vector<OomValue> values)
      : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_.size())
      throw std::invalid_argument("utility needs one value per outcome");
  }

  /// U_λ: the constant function.
  static OomUtility constant(const OutcomeSpace& space, const OomValue& lambda) {
    return {space, std::vector<OomValue>(space.size(), lambda)};
  }

  const OutcomeSpace& space() const { return space_; }
  const std::vector<OomValue>& values() const { return values_; }
  const OomValue& at(std::size_t i) const { return values_.at(i); }

  friend OomUtility operator+(const OomUtility& u, const OomUtility& v) {
    std::vector<OomValue> out;
    for (std::size_t i = 0; i < u.values_.size(); ++i) out.push_back(u.values_[i] + v.values_.at(i));
    return {u.space_, std::move(out)};
  }

  OomUtility operator-() const {
    std::vector<OomValue> out;
    for (const auto& x : values_) out.push_back(-x);
    return {space_, std::move(out)};
  }

  friend OomUtility operator*(const OomValue& lambda, const OomUtility& u) {
    std::vector<OomValue> out;
    for (const auto& x : u.values_) out.push_back(lambda * x);
    return {u.space_, std::move(out)};
  }

  friend bool operator==(const OomUtility&, const OomUtility&) = default;

 private:
  OutcomeSpace space_;
  std::vector<OomValue> values_;
};

/// P(U) = Σ_ω P(ω)·U(ω).
inline OomValue expect(const OomProbability& P, const OomUtility& U) {
  if (!(P.space() == U.space())) throw std::invalid_argument("P and U over different outcomes");
  OomValue sum = OomValue::zero();
  for (std::size_t i = 0; i < P.space().size(); ++i) sum += P.atom(i) * U.at(i);
  return sum;
}

/// Min-plus form of the expectation: u^χ is the least κ(ω) + m(ω) among
/// outcomes of possible probability whose utility has sign χ, u the least of
/// the three, and the sign is + or − only when that sign's u^χ is strictly
/// the smallest.
inline OomValue expect_closed_form(const KappaFunction& k, const OomUtility& U) {
  if (!(k.space() == U.space())) throw std::invalid_argument("kappa and U over different outcomes");
  Order u_pos = Order::infinity(), u_zero = Order::infinity(), u_neg = Order::infinity();
  for (std::size_t i = 0; i < k.space().size(); ++i) {
    const Rank r = k.atom(i);
    if (r.is_infinite()) continue;
    const OomValue& v = U.at(i);
    const Order s = r + v.order();
    switch (v.sign()) {
      case Sign::Pos: u_pos = min(u_pos, s); break;
      case Sign::Neg: u_neg = min(u_neg, s); break;
      case Sign::Zero: u_zero = min(u_zero, s); break;
    }
  }
  const Order u = min(u_pos, min(u_zero, u_neg));
  if (u.is_infinite()) return OomValue::zero();
  if (u_pos < u_zero && u_pos < u_neg) return {Sign::Pos, u};
  if (u_neg < u_zero && u_neg < u_pos) return {Sign::Neg, u};
  return {Sign::Zero, u};
}

enum class Preference { FirstPreferred, SecondPreferred, NoStrictPreference };

inline const char* to_string(Preference p) {
  switch (p) {
    case Preference::FirstPreferred: return "FirstPreferred";
    case Preference::SecondPreferred: return "SecondPreferred";
    case Preference::NoStrictPreference: return "NoStrictPreference";
  }
  return "?";
}

inline Preference compare_options(const OomValue& e1, const OomValue& e2) {
  if (gt(e1, e2)) return Preference::FirstPreferred;
  if (gt(e2, e1)) return Preference::SecondPreferred;
  return Preference::NoStrictPreference;
}

struct DecisionOption {
  std::string name;
  OomProbability probability;
  OomUtility utility;
};

/// Interpretations of both options and the resulting exact expectations.
struct DecisionWitness {
  std::vector<ExtendedReal> R1, V1, R2, V2;
  ExtendedReal first_value, second_value;
};

struct Theorem3Report {
  OomValue first_expectation, second_expectation;
  Preference preference = Preference::NoStrictPreference;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::optional<DecisionWitness> witness;
  std::size_t attempts = 0;
  bool exhausted = false;
};

namespace detail {

inline ExtendedReal interpreted_expectation(const std::vector<ExtendedReal>& R,
                                            const std::vector<ExtendedReal>& V) {
  ExtendedReal s;
  for (std::size_t i = 0; i < R.size(); ++i) s += R[i] * V[i];
  return s;
}

inline DecisionWitness draw_tuple(const DecisionOption& o1, const DecisionOption& o2,
                                  StarSampler& sampler, const std::vector<Rational>& lambdas) {
  DecisionWitness w;
  w.R1 = sample_prob_interpretation(o1.probability, lambdas, sampler.engine()).atoms();
  w.R2 = sample_prob_interpretation(o2.probability, lambdas, sampler.engine()).atoms();
  for (const auto& u : o1.utility.values()) w.V1.push_back(sampler.draw(u));
  for (const auto& u : o2.utility.values()) w.V2.push_back(sampler.draw(u));
  w.first_value = interpreted_expectation(w.R1, w.V1);
  w.second_value = interpreted_expectation(w.R2, w.V2);
  return w;
}

}  // namespace detail

/// Checks "option 1 strictly preferred" against exact interpretations. With
/// FirstPreferred, every sampled tuple must keep R₁(V₁) > R₂(V₂). Otherwise
/// looks for a tuple with R₁(V₁) ≤ R₂(V₂), which must exist.
inline Theorem3Report verify_theorem3(const DecisionOption& o1, const DecisionOption& o2,
                                      const StarSamplerConfig& cfg, std::size_t n_samples,
                                      std::size_t budget) {
  if (!(o1.probability.space() == o2.probability.space()))
    throw std::invalid_argument("options are over different outcome spaces");
  Theorem3Report rep;
  rep.first_expectation = expect(o1.probability, o1.utility);
  rep.second_expectation = expect(o2.probability, o2.utility);
  rep.preference = compare_options(rep.first_expectation, rep.second_expectation);
  StarSampler sampler(cfg);
  std::vector<Rational> lambdas = default_lambda_pool();
  if (rep.preference == Preference::FirstPreferred) {
    for (std::size_t k = 0; k < n_samples; ++k) {
      auto w = detail::draw_tuple(o1, o2, sampler, lambdas);
      ++rep.samples;
      if (!(w.first_value > w.second_value)) {
        ++rep.failures;
        if (!rep.witness) rep.witness = std::move(w);
      }
    }
    return rep;
  }
  if (o1.probability == o2.probability && o1.utility == o2.utility) {
    // One shared interpretation gives equal expectations.
    auto w = detail::draw_tuple(o1, o2, sampler, lambdas);
    w.R2 = w.R1;
    w.V2 = w.V1;
    w.second_value = w.first_value;
    rep.attempts = 1;
    rep.witness = std::move(w);
    return rep;
  }
  for (std::size_t k = 0; k < budget; ++k) {
    rep.attempts = k + 1;
    if (k == budget / 2) {
      sampler.escalate();
      sampler.escalate();
      lambdas.push_back(make_rational(1, 10));
      lambdas.push_back(10);
    }
    auto w = detail::draw_tuple(o1, o2, sampler, lambdas);
    if (!(w.first_value > w.second_value)) {
      rep.witness = std::move(w);
      return rep;
    }
  }
  rep.exhausted = true;
  return rep;
}

/// Integer-graded utilities: μ = i > 0 is utility of order ε^-i, μ = -i of
/// order -ε^-i, μ = 0 anything of order at most a constant.
class PearlMu {
 public:
  PearlMu(OutcomeSpace space, std::vector<std::int64_t> values)
      : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_.size())
      throw std::invalid_argument("mu needs one value per outcome");
  }

  const OutcomeSpace& space() const { return space_; }
  const std::vector<std::int64_t>& values() const { return values_; }

 private:
  OutcomeSpace space_;
  std::vector<std::int64_t> values_;
};

inline OomValue mu_value_to_oom(std::int64_t mu) {
  if (mu > 0) return OomValue::pos(-mu);
  if (mu < 0) return OomValue::neg(mu);
  return OomValue::unsure(0);
}

inline OomUtility mu_to_utility(const PearlMu& mu) {
  std::vector<OomValue> out;
  for (auto v : mu.values()) out.push_back(mu_value_to_oom(v));
  return {mu.space(), std::move(out)};
}

struct PearlLevels {
  std::int64_t n_plus = 0;
  std::int64_t n_minus = 0;
  friend bool operator==(const PearlLevels&, const PearlLevels&) = default;
};

/// n± = max over i ≥ 0 of max(0, i − κ(W_i±)), W_i± = {ω : μ(ω) = ±i}.
/// Empty levels have κ = ∞ and contribute nothing.
inline PearlLevels pearl_levels(const KappaFunction& k, const PearlMu& mu) {
  if (!(k.space() == mu.space())) throw std::invalid_argument("kappa and mu over different outcomes");
  PearlLevels lv;
  std::int64_t top = 0;
  for (auto v : mu.values()) top = std::max<std::int64_t>(top, std::llabs(v));
  for (std::int64_t i = 0; i <= top; ++i) {
    Rank plus = Rank::infinity(), minus = Rank::infinity();
    for (std::size_t w = 0; w < k.space().size(); ++w) {
      if (mu.values()[w] == i) plus = min(plus, k.atom(w));
      if (mu.values()[w] == -i) minus = min(minus, k.atom(w));
    }
    if (plus.is_finite()) lv.n_plus = std::max(lv.n_plus, i - plus.value());
    if (minus.is_finite()) lv.n_minus = std::max(lv.n_minus, i - minus.value());
  }
  return lv;
}

/// Integer expected utility, or Ambiguous.
struct PearlValue {
  std::optional<std::int64_t> value;  ///< empty means ambiguous

  static PearlValue ambiguous() { return {}; }
  bool is_ambiguous() const { return !value.has_value(); }
  std::string to_string() const { return value ? std::to_string(*value) : "ambiguous"; }
  friend bool operator==(const PearlValue&, const PearlValue&) = default;
};

enum class PearlVariant { Original, Amended };

inline PearlValue pearl_expected(const PearlLevels& lv, PearlVariant variant) {
  if (lv.n_plus == lv.n_minus && lv.n_plus > 0) return PearlValue::ambiguous();
  if (variant == PearlVariant::Original) return {lv.n_plus - lv.n_minus};
  if (lv.n_plus == 0 && lv.n_minus == 0) return {0};
  if (lv.n_plus > lv.n_minus) return {lv.n_plus};
  return {-lv.n_minus};
}

/// What the four-case correspondence predicts for P(U) from (n⁺, n⁻).
inline OomValue pearl_predicted_expectation(const PearlLevels& lv) {
  if (lv.n_plus == 0 && lv.n_minus == 0) return OomValue::unsure(0);
  if (lv.n_plus == lv.n_minus) return OomValue::unsure(-lv.n_plus);
  if (lv.n_plus > lv.n_minus) return OomValue::pos(-lv.n_plus);
  return OomValue::neg(-lv.n_minus);
}

struct PearlCheck {
  PearlLevels levels;
  PearlValue original, amended;
  OomValue expectation;  ///< computed through the order-of-magnitude calculus
  OomValue predicted;    ///< read off the levels
  bool agrees = false;
};

inline PearlCheck pearl_cross_check(const KappaFunction& k, const PearlMu& mu) {
  PearlCheck c;
  c.levels = pearl_levels(k, mu);
  c.original = pearl_expected(c.levels, PearlVariant::Original);
  c.amended = pearl_expected(c.levels, PearlVariant::Amended);
  c.expectation = expect(kappa_to_oom(k), mu_to_utility(mu));
  c.predicted = pearl_predicted_expectation(c.levels);
  c.agrees = c.expectation == c.predicted;
  return c;
}

}  // namespace oom
