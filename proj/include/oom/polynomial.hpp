#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "oom/error.hpp"
#include "oom/rational.hpp"

namespace oom {

/// Sparse univariate polynomial in ε with exact rational coefficients.
/// Only nonzero coefficients are stored.
class Polynomial {
 public:
  using Degree = std::int64_t;
  using Terms = std::map<Degree, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c) { set(0, c); }  // NOLINT: constants convert
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT

  static Polynomial monomial(const Rational& c, Degree d) {
    Polynomial p;
    p.set(d, c);
    return p;
  }

  static Polynomial from_terms(const Terms& terms) {
    Polynomial p;
    for (const auto& [d, c] : terms) p.set(d, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Lowest stored degree. Undefined for the zero polynomial.
  Degree ord() const {
    if (is_zero()) throw ZeroValue("ord of zero polynomial");
    return terms_.begin()->first;
  }

  Degree degree() const {
    if (is_zero()) throw ZeroValue("degree of zero polynomial");
    return terms_.rbegin()->first;
  }

  Rational coeff(Degree d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Rational& leading() const { return terms_.rbegin()->second; }
  const Rational& lowest() const { return terms_.begin()->second; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == 1;
  }

  /// Multiplies by ε^k. Negative k is allowed only while every degree stays
  /// non-negative.
  Polynomial shifted(Degree k) const {
    if (k == 0) return *this;
    if (!is_zero() && ord() + k < 0)
      throw std::domain_error("shift would produce a negative degree");
    Polynomial p;
    for (const auto& [d, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), d + k, c);
    return p;
  }

  Polynomial scaled(const Rational& s) const {
    if (s == 0) return {};
    Polynomial p;
    for (const auto& [d, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), d, c * s);
    return p;
  }

  Rational evaluate(const Rational& x) const {
    // Horner over the sparse terms, highest degree first.
    Rational acc = 0;
    Degree prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (prev >= 0) acc *= power(x, prev - it->first);
      acc += it->second;
      prev = it->first;
    }
    if (prev > 0) acc *= power(x, prev);
    return acc;
  }

  Polynomial operator-() const { return scaled(-1); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p;
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) p.add_term(da + db, ca * cb);
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// Euclidean division: returns (q, r) with a = q*b + r, deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial q, r = a;
    const Degree db = b.degree();
    const Rational& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
      const Degree shift = r.degree() - db;
      Rational factor = r.leading() / lb;
      q.add_term(shift, factor);
      for (const auto& [d, c] : b.terms_) r.add_term(d + shift, -(c * factor));
    }
    return {std::move(q), std::move(r)};
  }

  /// Monic greatest common divisor; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto rem = divmod(a, b).second;
      a = std::move(b);
      b = std::move(rem);
    }
    if (a.is_zero()) return a;
    return a.scaled(1 / Rational(a.leading()));
  }

 private:
  static Rational power(const Rational& x, Degree n) {
    Rational result = 1, base = x;
    while (n > 0) {
      if (n & 1) result *= base;
      base *= base;
      n >>= 1;
    }
    return result;
  }

  void set(Degree d, const Rational& c) {
    if (d < 0) throw std::domain_error("negative polynomial degree");
    if (c == 0)
      terms_.erase(d);
    else
      terms_[d] = c;
  }

  void add_term(Degree d, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

}  // namespace oom
