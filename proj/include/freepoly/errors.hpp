#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace freepoly {

enum class ErrorKind {
  InvalidArgument,
  DivisionByZero,
  NotLineFree,
  PrecisionExhausted,
  NoConvergence,
  NotGaloisStable,
  CrossCheckMismatch,
  DegenerateCharacteristicData,
  CountMismatch,
  DividesF,
  InvariantViolation,
  NoRootBranch,
  NotQuasiOrdinaryAfterBlowup,
  NotFree,
  AppMismatch,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` carries the
// machine-readable category used in reports and exit-code decisions.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace freepoly
