#pragma once
#include <stdexcept>
#include <string>

namespace annuli {

enum class Err {
  DivisionByZero,
  FieldMismatch,
  EvalAtPole,
  NotDivisible,
  ConstantComponent,
  NonProper,
  Unclassifiable,
  NonTermination,
  TruncationCap,
  IncompleteBranch,
  TangentCase,
  BoundTooSmall,
  ExcludedParams,
  ParseError,
  ShapeMismatch,
  ZeroCoefficient,
  Internal,
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

}  // namespace annuli
