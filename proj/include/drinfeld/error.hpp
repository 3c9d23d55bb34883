#ifndef DRINFELD_ERROR_HPP
#define DRINFELD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace drinfeld {

enum class ErrorCode {
  NotAPrimePower,
  BoundExceeded,
  ZeroElement,
  OrderDoesNotDivideN,
  SingularMatrix,
  ClassMismatch,
  NotClassFunctionOnSubgroup,
  TrivialThetaRequested,
  PSingularInput,
  InputNotInMu,
  IndexOutOfRange,
  SingularBrauerMatrix,
  NonIntegralSolution,
  GenusMismatch,
  UnsupportedQ,
  UnknownCheckName,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace drinfeld

#endif  // DRINFELD_ERROR_HPP
