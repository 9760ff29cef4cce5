#include "sympres/error.hpp"

namespace sympres {

std::string_view to_string(ErrorCode code) noexcept
{
  switch (code) {
  case ErrorCode::DivisionByZero: return "DivisionByZero";
  case ErrorCode::BoundExceeded: return "BoundExceeded";
  case ErrorCode::NotAMember: return "NotAMember";
  case ErrorCode::NotASubgroup: return "NotASubgroup";
  case ErrorCode::NotNormal: return "NotNormal";
  case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
  case ErrorCode::NotBijective: return "NotBijective";
  case ErrorCode::NotInvolution: return "NotInvolution";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::UnsupportedContainment: return "UnsupportedContainment";
  case ErrorCode::NotNormalWhereRequired: return "NotNormalWhereRequired";
  case ErrorCode::AlphaNotInvolution: return "AlphaNotInvolution";
  case ErrorCode::HNotNormal: return "HNotNormal";
  case ErrorCode::CommutatorNotContained: return "CommutatorNotContained";
  case ErrorCode::ParameterConstraintViolated: return "ParameterConstraintViolated";
  case ErrorCode::NotSelfDualStd: return "NotSelfDualStd";
  case ErrorCode::NotWellDefined: return "NotWellDefined";
  case ErrorCode::InvalidRowParameters: return "InvalidRowParameters";
  case ErrorCode::AssertionFailure: return "AssertionFailure";
  case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

} // namespace sympres
