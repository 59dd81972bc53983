#include "annuli/errors.hpp"

namespace annuli {

const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::EvalAtPole: return "EvalAtPole";
    case Err::NotDivisible: return "NotDivisible";
    case Err::ConstantComponent: return "ConstantComponent";
    case Err::NonProper: return "NonProper";
    case Err::Unclassifiable: return "Unclassifiable";
    case Err::NonTermination: return "NonTermination";
    case Err::TruncationCap: return "TruncationCap";
    case Err::IncompleteBranch: return "IncompleteBranch";
    case Err::TangentCase: return "TangentCase";
    case Err::BoundTooSmall: return "BoundTooSmall";
    case Err::ExcludedParams: return "ExcludedParams";
    case Err::ParseError: return "ParseError";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::ZeroCoefficient: return "ZeroCoefficient";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace annuli
