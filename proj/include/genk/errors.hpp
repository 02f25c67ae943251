#pragma once

#include <stdexcept>
#include <string>

namespace genk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// Malformed input: wrong degree, bad shape, unparsable scenario.
struct InvalidInput : Error {
  using Error::Error;
};

/// A mathematical hypothesis of the operation does not hold for the data.
struct InvariantViolation : Error {
  using Error::Error;
};

struct NotInstanton : InvariantViolation {
  NotInstanton(const std::string& what, double norm) : InvariantViolation(what), self_dual_norm(norm) {}
  double self_dual_norm;
};

}  // namespace genk
