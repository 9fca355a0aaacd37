#include "freepoly/errors.hpp"

namespace freepoly {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotLineFree: return "NotLineFree";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotGaloisStable: return "NotGaloisStable";
    case ErrorKind::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorKind::DegenerateCharacteristicData: return "DegenerateCharacteristicData";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::DividesF: return "DividesF";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::NoRootBranch: return "NoRootBranch";
    case ErrorKind::NotQuasiOrdinaryAfterBlowup: return "NotQuasiOrdinaryAfterBlowup";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::AppMismatch: return "AppMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace freepoly
