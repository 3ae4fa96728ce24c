#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "oom/er_text.hpp"
#include "oom/error.hpp"
#include "oom/extended_real.hpp"

namespace oom {

/// Finite subset of R*, duplicates removed under exact equality. Elements are
/// kept in increasing order.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<ExtendedReal> values) {
    for (const auto& v : values) insert(v);
  }

  void insert(const ExtendedReal& v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it != items_.end() && *it == v) return;
    items_.insert(it, v);
  }

  bool contains(const ExtendedReal& v) const {
    return std::binary_search(items_.begin(), items_.end(), v);
  }

  bool contains_zero() const { return contains(ExtendedReal()); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<ExtendedReal>& elements() const { return items_; }

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) { return a.items_ == b.items_; }

  friend FiniteSet operator+(const FiniteSet& s, const FiniteSet& t) {
    FiniteSet out;
    for (const auto& a : s.items_)
      for (const auto& b : t.items_) out.insert(a + b);
    return out;
  }

  friend FiniteSet operator*(const FiniteSet& s, const FiniteSet& t) {
    FiniteSet out;
    for (const auto& a : s.items_)
      for (const auto& b : t.items_) out.insert(a * b);
    return out;
  }

  FiniteSet operator-() const {
    FiniteSet out;
    for (const auto& a : items_) out.insert(-a);
    return out;
  }

  friend FiniteSet inverse(const FiniteSet& s) {
    if (s.contains_zero()) throw ZeroInSet("cannot invert a set containing 0");
    FiniteSet out;
    for (const auto& a : s.items_) out.insert(a.inverse());
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) out += ", ";
      out += oom::to_string(items_[i]);
    }
    return out + "}";
  }

 private:
  std::vector<ExtendedReal> items_;
};

enum class SetOp { Add, Mul, Neg, Inv };

/// Pointwise image. t is ignored for the unary operations.
inline FiniteSet set_binop(SetOp op, const FiniteSet& s, const FiniteSet& t = {}) {
  switch (op) {
    case SetOp::Add: return s + t;
    case SetOp::Mul: return s * t;
    case SetOp::Neg: return -s;
    case SetOp::Inv: return inverse(s);
  }
  return {};
}

}  // namespace oom
