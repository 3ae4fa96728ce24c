#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "oom/error.hpp"
#include "oom/evaluate.hpp"
#include "oom/extended_real.hpp"
#include "oom/formula.hpp"
#include "oom/oom_value.hpp"
#include "oom/star.hpp"

namespace oom {

/// Independent draw r(x) ∈ a(x)* for every symbol of a.
inline Instantiation<ExtendedReal> sample_instantiation(const Instantiation<OomValue>& a,
                                                        StarSampler& sampler) {
  Instantiation<ExtendedReal> r;
  for (const auto& [i, v] : a) r.emplace(i, sampler.draw(v));
  return r;
}

inline Instantiation<ExtendedReal> sample_instantiation(const Instantiation<OomValue>& a,
                                                        const StarSamplerConfig& cfg) {
  StarSampler s(cfg);
  return sample_instantiation(a, s);
}

namespace detail {

inline OomValue evaluate_defined(const Formula& f, const Instantiation<OomValue>& a) {
  auto v = evaluate(f, a);
  if (!v) throw UndefinedOperand("formula " + to_string(f) + " is undefined");
  return *v;
}

/// Coefficient of ε^n in t, for t of order ≥ n.
inline Rational coefficient_at(const ExtendedReal& t, std::int64_t n) {
  if (t.is_zero() || t.order() > Order(n)) return 0;
  return t.leading_coefficient();
}

/// Builds an interpretation of the symbols of f under which f evaluates to
/// exactly `target`, which must lie in f(a)*. Each step picks one operand
/// freely from its star-set and solves for the other; the case analysis
/// mirrors why (a+b)* = a* + b* and (ab)* = a*b* hold.
class Realizer {
 public:
  Realizer(const Instantiation<OomValue>& a, StarSampler& sampler) : a_(a), sampler_(sampler) {}

  void realize(const Formula& f, const ExtendedReal& target, Instantiation<ExtendedReal>& out) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Symbol:
        out[f.index()] = target;
        return;
      case K::Neg:
        realize(f.child(), -target, out);
        return;
      case K::Inv:
        if (target.is_zero()) throw PreconditionViolated("target outside the star-set");
        realize(f.child(), target.inverse(), out);
        return;
      case K::Add:
        realize_sum(f, target, out);
        return;
      case K::Mul:
        realize_product(f, target, out);
        return;
    }
  }

 private:
  OomValue value(const Formula& f) { return evaluate_defined(f, a_); }

  void realize_sum(const Formula& f, const ExtendedReal& t, Instantiation<ExtendedReal>& out) {
    const OomValue a = value(f.left());
    const OomValue b = value(f.right());
    // Pick the operand with the higher order (or either when equal) freely.
    if (a.order() < b.order()) {
      const ExtendedReal y = sampler_.draw(b);
      realize(f.right(), y, out);
      realize(f.left(), t - y, out);
      return;
    }
    if (b.order() < a.order()) {
      const ExtendedReal x = sampler_.draw(a);
      realize(f.left(), x, out);
      realize(f.right(), t - x, out);
      return;
    }
    if (a.is_zero()) {
      realize(f.left(), {}, out);
      realize(f.right(), {}, out);
      return;
    }
    const auto n = a.order().value();
    if (a.is_signless() || b.is_signless()) {
      // x + y with one side in (0, n)*: fix the other side, the remainder has
      // order ≥ n.
      const bool fix_left = b.is_signless() ? (a.is_signless() ? sampler_.coin() : true) : false;
      const Formula& fixed = fix_left ? f.left() : f.right();
      const Formula& rest = fix_left ? f.right() : f.left();
      const ExtendedReal x = sampler_.draw(fix_left ? a : b);
      realize(fixed, x, out);
      realize(rest, t - x, out);
      return;
    }
    if (a.sign() == b.sign()) {
      // Both (σ, n): split t in two positive parts.
      static const Rational splits[] = {make_rational(1, 2), make_rational(1, 3),
                                        make_rational(2, 3), make_rational(1, 4)};
      const Rational& mu = splits[sampler_.uniform(0, 3)];
      realize(f.left(), t * ExtendedReal(mu), out);
      realize(f.right(), t * ExtendedReal(Rational(1 - mu)), out);
      return;
    }
    // Opposite signs, t of order ≥ n: choose x ∈ a* with a leading
    // coefficient large enough that y = t − x keeps the sign of b.
    ExtendedReal x = sampler_.draw(a);
    const Rational tn = coefficient_at(t, n);
    const Rational xn = x.leading_coefficient();
    const int sa = a.sign() == Sign::Pos ? 1 : -1;
    if (sa * xn <= sa * tn) x *= ExtendedReal(Rational(abs(tn) / abs(xn) + 1));
    realize(f.left(), x, out);
    realize(f.right(), t - x, out);
  }

  void realize_product(const Formula& f, const ExtendedReal& t, Instantiation<ExtendedReal>& out) {
    const OomValue a = value(f.left());
    const OomValue b = value(f.right());
    if (t.is_zero()) {
      // Some factor must admit 0.
      bool zero_left;
      if (a.is_signless() && b.is_signless())
        zero_left = sampler_.coin();
      else if (a.is_signless())
        zero_left = true;
      else if (b.is_signless())
        zero_left = false;
      else
        throw PreconditionViolated("target outside the star-set");
      realize(zero_left ? f.left() : f.right(), {}, out);
      const Formula& other = zero_left ? f.right() : f.left();
      realize(other, sampler_.draw(zero_left ? b : a), out);
      return;
    }
    if (a.is_zero() || b.is_zero()) throw PreconditionViolated("target outside the star-set");
    // Fix a nonzero factor from a signed operand when there is one; for two
    // signless operands fix the left one at its exact minimal order.
    bool fix_left = a.is_invertible() || !b.is_invertible();
    const OomValue fixed_value = fix_left ? a : b;
    ExtendedReal x = fixed_value.is_signless()
                         ? sampler_.draw_exact(sampler_.coin() ? Sign::Pos : Sign::Neg,
                                               fixed_value.order().value())
                         : sampler_.draw(fixed_value);
    realize(fix_left ? f.left() : f.right(), x, out);
    realize(fix_left ? f.right() : f.left(), t / x, out);
  }

  const Instantiation<OomValue>& a_;
  StarSampler& sampler_;
};

}  // namespace detail

/// An interpretation whose value is exactly `target` ∈ f(a)*.
inline Instantiation<ExtendedReal> realize(const Formula& f, const Instantiation<OomValue>& a,
                                           const ExtendedReal& target, StarSampler& sampler) {
  const OomValue v = detail::evaluate_defined(f, a);
  if (!is_member(target, v)) throw PreconditionViolated("target outside the star-set");
  Instantiation<ExtendedReal> out;
  detail::Realizer(a, sampler).realize(f, target, out);
  // Symbols that the instantiation covers beyond f get independent draws.
  for (const auto& [i, av] : a)
    if (!out.count(i)) out.emplace(i, sampler.draw(av));
  return out;
}

/// A pair of interpretations for the two sides of a claim, with their values.
struct Witness {
  Instantiation<ExtendedReal> lhs, rhs;
  ExtendedReal lhs_value, rhs_value;
};

struct SearchResult {
  /// std::nullopt means the budget was exhausted.
  std::optional<Witness> witness;
  std::size_t attempts = 0;
};

/// Outcome of checking `f(a) > g(b)` against exact interpretations.
struct SoundnessReport {
  OomValue lhs, rhs;
  Relation relation = Relation::Incomparable;
  bool holds = false;          ///< f(a) > g(b) in the order-of-magnitude algebra
  std::size_t samples = 0;     ///< interpretation pairs checked for soundness
  std::size_t failures = 0;    ///< pairs violating the strict inequality
  std::optional<Witness> witness;  ///< first failure, or a completeness witness
  std::size_t attempts = 0;    ///< witness-search attempts used
  bool exhausted = false;      ///< completeness search ran out of budget
};

namespace detail {

inline void require_disjoint(const Formula& f, const Formula& g) {
  for (SymbolIndex i : g.symbols())
    if (f.symbols().count(i))
      throw PreconditionViolated("formulas share symbol x" + std::to_string(i));
}

inline Witness make_witness(const Formula& f, const Formula& g, Instantiation<ExtendedReal> r,
                            Instantiation<ExtendedReal> s) {
  Witness w;
  w.lhs_value = *evaluate(f, r);
  w.rhs_value = *evaluate(g, s);
  w.lhs = std::move(r);
  w.rhs = std::move(s);
  return w;
}

}  // namespace detail

/// Soundness direction: when f(a) > g(b), every sampled pair of
/// interpretations must satisfy f(r) > g(s) exactly. When the relation does
/// not hold the report only records the two values; see
/// search_counterexample.
inline SoundnessReport verify_gt(const Formula& f, const Instantiation<OomValue>& a,
                                 const Formula& g, const Instantiation<OomValue>& b,
                                 const StarSamplerConfig& cfg, std::size_t n_samples) {
  detail::require_disjoint(f, g);
  SoundnessReport rep;
  rep.lhs = detail::evaluate_defined(f, a);
  rep.rhs = detail::evaluate_defined(g, b);
  rep.relation = compare(rep.lhs, rep.rhs);
  rep.holds = gt(rep.lhs, rep.rhs);
  if (!rep.holds) return rep;
  StarSampler sampler(cfg);
  for (std::size_t k = 0; k < n_samples; ++k) {
    auto r = sample_instantiation(a, sampler);
    auto s = sample_instantiation(b, sampler);
    auto fv = evaluate(f, r);
    auto gv = evaluate(g, s);
    ++rep.samples;
    // An undefined value under a defined abstract evaluation would itself be
    // a soundness failure.
    if (!fv || !gv || !(*fv > *gv)) {
      ++rep.failures;
      if (!rep.witness && fv && gv) rep.witness = detail::make_witness(f, g, r, s);
    }
  }
  return rep;
}

/// Completeness direction: with f(a) > g(b) failing, looks for
/// interpretations with f(r) ≤ g(s). Attempts alternate between a targeted
/// strategy (pick t ∈ f(a)*, u ∈ g(b)* with t ≤ u, then realize both) and
/// blind independent sampling. The pool is widened after half the budget.
inline SearchResult search_counterexample(const Formula& f, const Instantiation<OomValue>& a,
                                          const Formula& g, const Instantiation<OomValue>& b,
                                          const StarSamplerConfig& cfg, std::size_t budget) {
  detail::require_disjoint(f, g);
  const OomValue fa = detail::evaluate_defined(f, a);
  const OomValue gb = detail::evaluate_defined(g, b);
  if (gt(fa, gb))
    throw PreconditionViolated(fa.to_string() + " > " + gb.to_string() +
                               " holds; no counterexample exists");
  StarSampler sampler(cfg);
  SearchResult res;
  bool escalated = false;
  for (std::size_t k = 0; k < budget; ++k) {
    res.attempts = k + 1;
    if (!escalated && k >= budget / 2) {
      sampler.escalate();
      sampler.escalate();
      escalated = true;
    }
    Instantiation<ExtendedReal> r, s;
    if (k % 2 == 0) {
      const ExtendedReal t = sampler.draw(fa);
      const ExtendedReal u = sampler.draw(gb);
      if (t > u) continue;
      r = realize(f, a, t, sampler);
      s = realize(g, b, u, sampler);
    } else {
      r = sample_instantiation(a, sampler);
      s = sample_instantiation(b, sampler);
    }
    auto fv = evaluate(f, r);
    auto gv = evaluate(g, s);
    if (fv && gv && !(*fv > *gv)) {
      res.witness = detail::make_witness(f, g, std::move(r), std::move(s));
      return res;
    }
  }
  return res;
}

/// Runs whichever direction applies: soundness sampling when f(a) > g(b),
/// witness search otherwise.
inline SoundnessReport check_claim(const Formula& f, const Instantiation<OomValue>& a,
                                   const Formula& g, const Instantiation<OomValue>& b,
                                   const StarSamplerConfig& cfg, std::size_t n_samples,
                                   std::size_t budget) {
  SoundnessReport rep = verify_gt(f, a, g, b, cfg, n_samples);
  if (rep.holds) return rep;
  SearchResult s = search_counterexample(f, a, g, b, cfg, budget);
  rep.attempts = s.attempts;
  rep.witness = std::move(s.witness);
  rep.exhausted = !rep.witness;
  return rep;
}

struct UndefinedWitness {
  Instantiation<ExtendedReal> interpretation;
  std::size_t attempts = 0;
  bool directed = false;  ///< found by the cancellation construction
};

namespace detail {

/// Innermost Inv node whose operand is defined but signless under a.
inline std::optional<Formula> offending_inverse(const Formula& f, const Instantiation<OomValue>& a) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Symbol:
      return std::nullopt;
    case K::Neg:
      return offending_inverse(f.child(), a);
    case K::Inv: {
      if (auto inner = offending_inverse(f.child(), a)) return inner;
      auto v = evaluate(f.child(), a);
      if (v && !v->is_invertible()) return f;
      return std::nullopt;
    }
    case K::Add:
    case K::Mul:
      if (auto l = offending_inverse(f.left(), a)) return l;
      return offending_inverse(f.right(), a);
  }
  return std::nullopt;
}

}  // namespace detail

/// For f(a) undefined, finds an interpretation r with f(r) undefined. The
/// directed construction realizes the operand of the offending inverse as
/// exactly 0; random search over `budget` draws is the fallback.
inline std::optional<UndefinedWitness> undefined_witness(const Formula& f,
                                                         const Instantiation<OomValue>& a,
                                                         const StarSamplerConfig& cfg,
                                                         std::size_t budget) {
  if (evaluate(f, a)) throw PreconditionViolated("formula is defined under this instantiation");
  StarSampler sampler(cfg);
  UndefinedWitness w;
  if (auto node = detail::offending_inverse(f, a)) {
    w.attempts = 1;
    Instantiation<ExtendedReal> r = realize(node->child(), a, ExtendedReal(), sampler);
    if (!evaluate(f, r)) {
      w.interpretation = std::move(r);
      w.directed = true;
      return w;
    }
  }
  for (std::size_t k = 0; k < budget; ++k) {
    ++w.attempts;
    if (k == budget / 2) sampler.escalate();
    auto r = sample_instantiation(a, sampler);
    if (!evaluate(f, r)) {
      w.interpretation = std::move(r);
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace oom
