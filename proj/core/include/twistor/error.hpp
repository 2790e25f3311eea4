#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistor {

enum class ErrorKind {
  NotComplex,
  NotOrthogonal,
  WrongOrientation,
  DegenerateFrame,
  NotInZ,
  DomainError,
  NotRotation,
  DegenerateSubspace,
  KernelRankError,
  ZeroCombination,
  ParamDomain,
  NotDecomposable,
  NotUnit,
  ZeroForm,
  NotOrthonormal,
  NoConvergence,
};

std::string_view to_string(ErrorKind kind);

/// Every rejection raised by the library. `residual` carries the
/// max-abs violation when the failure is a tolerance check, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double residual = 0.0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), residual_(residual) {}

  ErrorKind kind() const noexcept { return kind_; }
  double residual() const noexcept { return residual_; }

 private:
  ErrorKind kind_;
  double residual_;
};

}  // namespace twistor
