#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "oom/error.hpp"

namespace oom {

/// Exact rational backed by GMP. mpq_class keeps values canonical
/// (positive denominator, coprime parts) as long as they are built through
/// its arithmetic or through make_rational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw ZeroDenominator("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Accepts "n" or "n/d" with an optional leading '-'.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw SyntaxError("empty rational literal", 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw SyntaxError("bad character in rational literal", i);
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw SyntaxError("bad rational literal", 0);
  if (q.get_den() == 0) throw ZeroDenominator("rational with zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace oom
