#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define OOM_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

// extended reals
OOM_DEFINE_ERROR(ZeroDenominator)
OOM_DEFINE_ERROR(DivisionByZero)
OOM_DEFINE_ERROR(PoleAtPoint)
OOM_DEFINE_ERROR(ZeroValue)

// order-of-magnitude values
OOM_DEFINE_ERROR(NotInvertible)

// formulas and sets
OOM_DEFINE_ERROR(MissingSymbol)
OOM_DEFINE_ERROR(NonLinearFormula)
OOM_DEFINE_ERROR(ZeroInSet)
OOM_DEFINE_ERROR(UndefinedOperand)

// kappa / probability
OOM_DEFINE_ERROR(UnknownOutcome)
OOM_DEFINE_ERROR(ConditionImpossible)
OOM_DEFINE_ERROR(ConditionNotInvertible)
OOM_DEFINE_ERROR(InvalidDistribution)

// caller broke a documented precondition
OOM_DEFINE_ERROR(PreconditionViolated)

#undef OOM_DEFINE_ERROR

/// Malformed textual input. Carries the 0-based offset of the offending
/// character.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  /// The description without the position suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace oom
