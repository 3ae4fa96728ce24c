#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "oom/error.hpp"
#include "oom/extended_real.hpp"

namespace oom {

namespace detail {

inline std::string render_power(Polynomial::Degree d) {
  if (d == 1) return "e";
  return "e^" + std::to_string(d);
}

/// c·ε^d as a single factor-free term, sign included.
inline std::string render_term(const Rational& c, Polynomial::Degree d) {
  if (d == 0) return to_string(c);
  if (c == 1) return render_power(d);
  if (c == -1) return "-" + render_power(d);
  return to_string(c) + "*" + render_power(d);
}

inline std::string render_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : p.terms()) {
    if (first) {
      out = render_term(c, d);
      first = false;
    } else if (c < 0) {
      out += " - " + render_term(-c, d);
    } else {
      out += " + " + render_term(c, d);
    }
  }
  return out;
}

}  // namespace detail

/// Normalized text such as `e^2 * (3 + 3*e) / (1 - e)`. parse_extended_real
/// reads it back to an equal value.
inline std::string to_string(const ExtendedReal& r) {
  if (r.is_zero()) return "0";
  const auto& num = r.numerator();
  const auto& den = r.denominator();
  const auto k = r.shift();
  const bool has_den = !den.is_one();
  std::string out;
  if (num.is_constant()) {
    const Rational c = num.lowest();
    if (k == 0) {
      out = to_string(c);
    } else if (k > 0) {
      out = detail::render_term(c, k);
    } else {
      const std::string pw = "e^" + std::to_string(k);
      out = c == 1 ? pw : c == -1 ? "-" + pw : to_string(c) + "*" + pw;
    }
  } else {
    const std::string body = detail::render_poly(num);
    if (k == 0)
      out = has_den ? "(" + body + ")" : body;
    else
      out = (k == 1 ? std::string("e") : "e^" + std::to_string(k)) + " * (" + body + ")";
  }
  if (has_den) out += " / (" + detail::render_poly(den) + ")";
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const ExtendedReal& r) {
  return os << to_string(r);
}

namespace detail {

/// Recursive-descent reader for arithmetic over integers and `e`:
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' ['-'] integer)?
///   atom   := integer | 'e' | '(' expr ')'
class ExtendedRealReader {
 public:
  explicit ExtendedRealReader(std::string_view text) : text_(text) {}

  ExtendedReal read() {
    ExtendedReal v = expr();
    skip();
    if (pos_ != text_.size()) throw SyntaxError("unexpected character", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExtendedReal expr() {
    ExtendedReal v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  ExtendedReal term() {
    ExtendedReal v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        ExtendedReal d = unary();
        if (d.is_zero()) throw SyntaxError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  ExtendedReal unary() {
    if (accept('-')) return -unary();
    return power();
  }

  ExtendedReal power() {
    ExtendedReal base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip();
    const std::size_t at = pos_;
    long n = integer();
    if (negative) {
      if (base.is_zero()) throw SyntaxError("negative power of zero", at);
      base = base.inverse();
    }
    ExtendedReal result(1);
    for (long i = 0; i < n; ++i) result *= base;
    return result;
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected integer", start);
    if (pos_ - start > 9) throw SyntaxError("exponent too large", start);
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  ExtendedReal atom() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExtendedReal v = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return v;
    }
    if (c == 'e') {
      ++pos_;
      return ExtendedReal::epsilon();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational q;
      q.set_str(std::string(text_.substr(start, pos_ - start)), 10);
      return ExtendedReal(q);
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExtendedReal parse_extended_real(std::string_view text) {
  return detail::ExtendedRealReader(text).read();
}

}  // namespace oom
