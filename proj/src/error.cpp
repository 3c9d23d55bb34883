#include "drinfeld/error.hpp"

namespace drinfeld {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPrimePower: return "NotAPrimePower";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::OrderDoesNotDivideN: return "OrderDoesNotDivideN";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::NotClassFunctionOnSubgroup: return "NotClassFunctionOnSubgroup";
    case ErrorCode::TrivialThetaRequested: return "TrivialThetaRequested";
    case ErrorCode::PSingularInput: return "PSingularInput";
    case ErrorCode::InputNotInMu: return "InputNotInMu";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SingularBrauerMatrix: return "SingularBrauerMatrix";
    case ErrorCode::NonIntegralSolution: return "NonIntegralSolution";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::UnsupportedQ: return "UnsupportedQ";
    case ErrorCode::UnknownCheckName: return "UnknownCheckName";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace drinfeld
