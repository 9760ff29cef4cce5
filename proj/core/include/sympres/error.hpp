#ifndef SYMPRES_ERROR_HPP
#define SYMPRES_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympres {

enum class ErrorCode {
  DivisionByZero,
  BoundExceeded,
  NotAMember,
  NotASubgroup,
  NotNormal,
  NotAHomomorphism,
  NotBijective,
  NotInvolution,
  DimensionMismatch,
  UnsupportedContainment,
  NotNormalWhereRequired,
  AlphaNotInvolution,
  HNotNormal,
  CommutatorNotContained,
  ParameterConstraintViolated,
  NotSelfDualStd,
  NotWellDefined,
  InvalidRowParameters,
  AssertionFailure,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every engine failure is reported through this type; `code()` is the
/// structured part that the CLI prints.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string &detail() const noexcept { return detail_; }

private:
  ErrorCode code_;
  std::string detail_;
};

} // namespace sympres

#endif // SYMPRES_ERROR_HPP
