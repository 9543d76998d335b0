#pragma once

#include <stdexcept>
#include <string>

namespace hermnest {

enum class Err {
  NotPrime,
  OrderTooLarge,
  NoBundledModulus,
  FieldMismatch,
  DivisionByZero,
  NotASquareOrder,
  UnsupportedQ,
  NotInHStar,
  NotNested,
  ZeroCodimension,
  BudgetExceeded,
  DeltaOutOfRange,
  NotAchievableDelta,
  InclusionViolated,
  BadIndices,
  ConstraintViolated,
  ParityViolated,
  ShrinkNotAllowed,
  NoFeasiblePair,
  LengthMismatch,
  InconsistentShares,
  IoError,
  BadArgument,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace hermnest
