#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "oom/error.hpp"
#include "oom/oom_value.hpp"
#include "oom/polynomial.hpp"
#include "oom/rational.hpp"

namespace oom {

/// A rational function in the infinitesimal ε, stored as ε^shift · num/den
/// where num(0) ≠ 0 and den(0) = 1. With that normalization the shift is the
/// order of the value and num(0) its leading coefficient. num and den are
/// additionally reduced by their polynomial gcd, which keeps coefficient
/// growth bounded; equality is still decided by cross-multiplication.
class ExtendedReal {
 public:
  using Shift = std::int64_t;

  /// Zero.
  ExtendedReal() = default;

  ExtendedReal(const Rational& c) {  // NOLINT: reals embed into R*
    if (c != 0) {
      zero_ = false;
      num_ = Polynomial(c);
      den_ = Polynomial(1);
    }
  }
  ExtendedReal(long c) : ExtendedReal(Rational(c)) {}  // NOLINT

  static ExtendedReal epsilon() { return monomial(1, 1); }

  /// c · ε^k.
  static ExtendedReal monomial(const Rational& c, Shift k) {
    ExtendedReal r(c);
    if (!r.zero_) r.shift_ = k;
    return r;
  }

  /// Brings num/den to canonical form.
  static ExtendedReal from_fraction(const Polynomial& num, const Polynomial& den) {
    return canonicalize(0, num, den);
  }

  bool is_zero() const { return zero_; }

  /// r̂: the exponent of the leading ε power; ∞ for zero.
  Order order() const { return zero_ ? Order::infinity() : Order(shift_); }

  /// r̄: the coefficient of the leading ε power. Zero for the zero value.
  Rational leading_coefficient() const { return zero_ ? Rational(0) : num_.lowest(); }

  Shift shift() const { return shift_; }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// Sign of the value as ε → 0⁺: −1, 0 or +1.
  int signum() const { return zero_ ? 0 : sign(num_.lowest()); }

  ExtendedReal operator-() const {
    ExtendedReal r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.zero_) return b;
    if (b.zero_) return a;
    const ExtendedReal& lo = a.shift_ <= b.shift_ ? a : b;
    const ExtendedReal& hi = a.shift_ <= b.shift_ ? b : a;
    const Shift gap = hi.shift_ - lo.shift_;
    if (lo.den_.is_one() && hi.den_.is_one())
      return canonicalize(lo.shift_, lo.num_ + hi.num_.shifted(gap), Polynomial(1));
    if (lo.den_ == hi.den_)
      return canonicalize(lo.shift_, lo.num_ + hi.num_.shifted(gap), lo.den_);
    Polynomial num = lo.num_ * hi.den_ + (hi.num_ * lo.den_).shifted(gap);
    return canonicalize(lo.shift_, num, lo.den_ * hi.den_);
  }

  friend ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) {
    return a + (-b);
  }

  friend ExtendedReal operator*(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.zero_ || b.zero_) return {};
    return canonicalize(a.shift_ + b.shift_, a.num_ * b.num_, a.den_ * b.den_);
  }

  ExtendedReal inverse() const {
    if (zero_) throw DivisionByZero("inverse of zero extended real");
    return canonicalize(-shift_, den_, num_);
  }

  friend ExtendedReal operator/(const ExtendedReal& a, const ExtendedReal& b) {
    if (b.zero_) throw DivisionByZero("division by zero extended real");
    return a * b.inverse();
  }

  ExtendedReal& operator+=(const ExtendedReal& o) { return *this = *this + o; }
  ExtendedReal& operator-=(const ExtendedReal& o) { return *this = *this - o; }
  ExtendedReal& operator*=(const ExtendedReal& o) { return *this = *this * o; }
  ExtendedReal& operator/=(const ExtendedReal& o) { return *this = *this / o; }

  /// p/q = r/s iff ps = qr as polynomials.
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    if (a.shift_ != b.shift_) return false;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// Value of the function at ε = x.
  Rational evaluate(const Rational& x) const {
    if (zero_) return 0;
    Rational d = den_.evaluate(x);
    if (d == 0) throw PoleAtPoint("denominator vanishes at " + to_string(x));
    if (shift_ < 0 && x == 0) throw PoleAtPoint("negative power of ε at 0");
    Rational p = 1;
    Rational base = shift_ >= 0 ? x : Rational(1 / x);
    for (Shift i = 0, n = shift_ >= 0 ? shift_ : -shift_; i < n; ++i) p *= base;
    return p * num_.evaluate(x) / d;
  }

 private:
  static ExtendedReal canonicalize(Shift k, Polynomial num, Polynomial den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    ExtendedReal r;
    if (num.is_zero()) return r;
    const auto num_ord = num.ord();
    const auto den_ord = den.ord();
    num = num.shifted(-num_ord);
    den = den.shifted(-den_ord);
    if (!num.is_constant() && !den.is_constant()) {
      Polynomial g = gcd(num, den);
      if (!g.is_constant()) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
      }
    }
    const Rational c = den.lowest();
    if (c != 1) {
      const Rational inv = 1 / c;
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
    r.zero_ = false;
    r.shift_ = k + num_ord - den_ord;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  bool zero_ = true;
  Shift shift_ = 0;
  Polynomial num_;
  Polynomial den_ = Polynomial(1);
};

/// r ↦ r°: (sign r̄, r̂), or the zero element for r = 0.
inline OomValue classify(const ExtendedReal& r) {
  if (r.is_zero()) return OomValue::zero();
  return {r.signum() > 0 ? Sign::Pos : Sign::Neg, r.order()};
}

/// Total order of the ordered field: r > s iff r − s has positive leading
/// coefficient.
inline std::strong_ordering compare(const ExtendedReal& r, const ExtendedReal& s) {
  const int sg = (r - s).signum();
  return sg > 0 ? std::strong_ordering::greater
         : sg < 0 ? std::strong_ordering::less
                  : std::strong_ordering::equal;
}

inline bool operator<(const ExtendedReal& r, const ExtendedReal& s) { return compare(r, s) < 0; }
inline bool operator>(const ExtendedReal& r, const ExtendedReal& s) { return compare(r, s) > 0; }
inline bool operator<=(const ExtendedReal& r, const ExtendedReal& s) { return compare(r, s) <= 0; }
inline bool operator>=(const ExtendedReal& r, const ExtendedReal& s) { return compare(r, s) >= 0; }

/// A rational y in (0, 1] such that r(x) has the sign of r̄ for every
/// 0 < x < y. Each of num and den contributes |c₀| / (|c₀| + Σ|cᵢ|), where c₀
/// is its constant term and cᵢ its other coefficients.
inline Rational sign_bound(const ExtendedReal& r) {
  if (r.is_zero()) throw ZeroValue("sign bound of zero");
  Rational y = 1;
  for (const Polynomial* p : {&r.numerator(), &r.denominator()}) {
    Rational lead = abs(p->lowest());
    Rational tail = 0;
    bool first = true;
    for (const auto& [d, c] : p->terms()) {
      if (first) {
        first = false;
        continue;
      }
      tail += abs(c);
    }
    Rational bound = lead / (lead + tail);
    if (bound < y) y = bound;
  }
  return y;
}

}  // namespace oom
