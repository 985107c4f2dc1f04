#pragma once

#include <stdexcept>
#include <string>

namespace matrep {

/// Category of a numerical-contract failure. The CLI maps every kind to exit code 3.
enum class ErrorKind {
  UnsupportedDegree,
  InvalidSpec,
  IllConditionedBasis,
  IndexOutOfRange,
  QuadratureFailure,
  ContractViolation,
  OutOfRange,
  OutsideTrustRegion,
  DegenerateInput,
  ResolventPole,
  NonConvergence,
  ResolutionInsufficient,
};

const char *to_string(ErrorKind kind);

class NumericalError : public std::runtime_error {
 public:
  NumericalError(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace matrep
