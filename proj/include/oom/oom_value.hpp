#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "oom/error.hpp"

namespace oom {

enum class Sign : std::int8_t { Neg = -1, Zero = 0, Pos = 1 };

/// Natural multiplication of signs.
constexpr Sign sign_mul(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

/// + ⊕ + = +, − ⊕ − = −, everything else 0.
constexpr Sign sign_add(Sign a, Sign b) { return a == b ? a : Sign::Zero; }

constexpr Sign sign_neg(Sign a) { return static_cast<Sign>(-static_cast<int>(a)); }

constexpr char sign_char(Sign s) {
  return s == Sign::Pos ? '+' : s == Sign::Neg ? '-' : '0';
}

/// An integer order of magnitude or ∞. ∞ is a tag, not a sentinel value, and
/// is absorbing under addition.
class Order {
 public:
  constexpr Order(std::int64_t n) : value_(n) {}  // NOLINT: ints convert

  static constexpr Order infinity() { return Order(Tag{}); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  std::int64_t value() const {
    if (infinite_) throw std::logic_error("value() of infinite order");
    return value_;
  }

  friend constexpr Order operator+(Order a, Order b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Order(a.value_ + b.value_);
  }

  friend constexpr bool operator==(Order a, Order b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(Order a, Order b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  friend constexpr Order min(Order a, Order b) { return b < a ? b : a; }

  std::string to_string() const {
    return infinite_ ? "inf" : std::to_string(value_);
  }

 private:
  struct Tag {};
  constexpr explicit Order(Tag) : value_(0), infinite_(true) {}

  std::int64_t value_;
  bool infinite_ = false;
};

/// Four-valued outcome of comparing elements of a partial order.
enum class Relation { Less, Equal, Greater, Incomparable };

inline const char* to_symbol(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
    case Relation::Incomparable: return "incomparable";
  }
  return "?";
}

/// An element (σ, n) of the order-of-magnitude algebra. (0, ∞) is the zero
/// element; (0, n) for finite n stands for "order at least n, sign unknown".
class OomValue {
 public:
  /// The zero element (0, ∞).
  constexpr OomValue() : sign_(Sign::Zero), order_(Order::infinity()) {}

  OomValue(Sign s, Order n) : sign_(s), order_(n) {
    if (n.is_infinite() && s != Sign::Zero)
      throw std::invalid_argument("infinite order requires sign 0");
  }

  static constexpr OomValue zero() { return OomValue(); }
  static OomValue one() { return {Sign::Pos, 0}; }
  static OomValue minus_one() { return {Sign::Neg, 0}; }
  static OomValue pos(std::int64_t n) { return {Sign::Pos, n}; }
  static OomValue neg(std::int64_t n) { return {Sign::Neg, n}; }
  static OomValue unsure(std::int64_t n) { return {Sign::Zero, n}; }

  constexpr Sign sign() const { return sign_; }
  constexpr Order order() const { return order_; }

  bool is_zero() const { return order_.is_infinite(); }
  /// Membership of the sign-0 family, which has no multiplicative inverse.
  bool is_signless() const { return sign_ == Sign::Zero; }
  bool is_invertible() const { return sign_ != Sign::Zero; }

  friend bool operator==(const OomValue&, const OomValue&) = default;

  friend OomValue operator*(const OomValue& a, const OomValue& b) {
    return {sign_mul(a.sign_, b.sign_), a.order_ + b.order_};
  }

  friend OomValue operator+(const OomValue& a, const OomValue& b) {
    if (a.order_ < b.order_) return a;
    if (b.order_ < a.order_) return b;
    return {sign_add(a.sign_, b.sign_), a.order_};
  }

  OomValue operator-() const { return {sign_neg(sign_), order_}; }

  friend OomValue operator-(const OomValue& a, const OomValue& b) { return a + (-b); }

  OomValue& operator+=(const OomValue& o) { return *this = *this + o; }
  OomValue& operator*=(const OomValue& o) { return *this = *this * o; }

  friend OomValue inverse(const OomValue& a) {
    if (!a.is_invertible())
      throw NotInvertible("no inverse for " + a.to_string());
    return {a.sign_, Order(-a.order_.value())};
  }

  friend OomValue operator/(const OomValue& a, const OomValue& b) {
    return a * inverse(b);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s = "(";
    s += sign_char(sign_);
    s += ',';
    s += std::to_string(order_.value());
    s += ')';
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const OomValue& v) {
    return os << v.to_string();
  }

 private:
  Sign sign_;
  Order order_;
};

/// Strict order: a > b iff a − b has sign +. Transitive and irreflexive but
/// not total.
inline bool gt(const OomValue& a, const OomValue& b) {
  return (a - b).sign() == Sign::Pos;
}

inline Relation compare(const OomValue& a, const OomValue& b) {
  if (a == b) return Relation::Equal;
  if (gt(a, b)) return Relation::Greater;
  if (gt(b, a)) return Relation::Less;
  return Relation::Incomparable;
}

/// Parses `(+,n)`, `(-,n)`, `(0,n)`, `(0,inf)`, `0`, `1`, `-1`. Whitespace
/// around tokens is ignored.
inline OomValue parse_oom(std::string_view text) {
  std::string s;
  std::size_t first = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    if (first == std::string::npos) first = i;
    s += text[i];
  }
  if (s.empty()) throw SyntaxError("empty order-of-magnitude literal", 0);
  if (s == "0") return OomValue::zero();
  if (s == "1") return OomValue::one();
  if (s == "-1") return OomValue::minus_one();
  if (s.size() < 5 || s.front() != '(' || s.back() != ')' || s[2] != ',')
    throw SyntaxError("expected (sign,order) literal, got '" + std::string(text) + "'", first);
  Sign sg;
  switch (s[1]) {
    case '+': sg = Sign::Pos; break;
    case '-': sg = Sign::Neg; break;
    case '0': sg = Sign::Zero; break;
    default: throw SyntaxError("bad sign in '" + std::string(text) + "'", first + 1);
  }
  std::string ord = s.substr(3, s.size() - 4);
  if (ord == "inf" || ord == "∞") {
    if (sg != Sign::Zero)
      throw SyntaxError("infinite order requires sign 0 in '" + std::string(text) + "'", first);
    return OomValue::zero();
  }
  std::size_t pos = 0;
  std::int64_t n = 0;
  try {
    n = std::stoll(ord, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != ord.size() || ord.empty())
    throw SyntaxError("bad order in '" + std::string(text) + "'", first + 3);
  return {sg, n};
}

}  // namespace oom
