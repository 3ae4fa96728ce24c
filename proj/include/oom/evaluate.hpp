#pragma once

#include <map>
#include <optional>
#include <string>

#include "oom/error.hpp"
#include "oom/extended_real.hpp"
#include "oom/finite_set.hpp"
#include "oom/formula.hpp"
#include "oom/oom_value.hpp"

namespace oom {

/// Operations a value type must provide to instantiate formulas.
template <class C>
struct CarrierTraits;

template <>
struct CarrierTraits<OomValue> {
  static bool invertible(const OomValue& v) { return v.is_invertible(); }
  static OomValue inv(const OomValue& v) { return inverse(v); }
};

template <>
struct CarrierTraits<ExtendedReal> {
  static bool invertible(const ExtendedReal& v) { return !v.is_zero(); }
  static ExtendedReal inv(const ExtendedReal& v) { return v.inverse(); }
};

template <>
struct CarrierTraits<FiniteSet> {
  static bool invertible(const FiniteSet& v) { return !v.contains_zero(); }
  static FiniteSet inv(const FiniteSet& v) { return inverse(v); }
};

template <class C>
using Instantiation = std::map<SymbolIndex, C>;

/// A carrier value, or std::nullopt for "undefined".
template <class C>
using EvalResult = std::optional<C>;

namespace detail {

template <class C>
EvalResult<C> evaluate_node(const Formula& f, const Instantiation<C>& inst) {
  using K = Formula::Kind;
  using T = CarrierTraits<C>;
  switch (f.kind()) {
    case K::Symbol: {
      return inst.at(f.index());
    }
    case K::Neg: {
      auto v = evaluate_node(f.child(), inst);
      if (!v) return std::nullopt;
      return -*v;
    }
    case K::Inv: {
      auto v = evaluate_node(f.child(), inst);
      if (!v || !T::invertible(*v)) return std::nullopt;
      return T::inv(*v);
    }
    case K::Add: {
      auto l = evaluate_node(f.left(), inst);
      if (!l) return std::nullopt;
      auto r = evaluate_node(f.right(), inst);
      if (!r) return std::nullopt;
      return *l + *r;
    }
    case K::Mul: {
      auto l = evaluate_node(f.left(), inst);
      if (!l) return std::nullopt;
      auto r = evaluate_node(f.right(), inst);
      if (!r) return std::nullopt;
      return *l * *r;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Structural evaluation. Inverting a non-invertible value yields undefined,
/// which then propagates to the root.
template <class C>
EvalResult<C> evaluate(const Formula& f, const Instantiation<C>& inst) {
  for (SymbolIndex i : f.symbols())
    if (!inst.count(i)) throw MissingSymbol("no value for symbol x" + std::to_string(i));
  return detail::evaluate_node(f, inst);
}

}  // namespace oom
