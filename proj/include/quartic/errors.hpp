#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

// Malformed input: bad parameter values, wrong dimensions, unknown keys.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well formed but numerically unsafe, e.g. a truncation
// dimension too small for the requested coherent amplitude.
class PreconditionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ratio witness whose denominator vanishes (vacuum-dominated states).
class ZeroDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace quartic
