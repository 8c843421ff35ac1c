#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

/// Input rejected by a precondition check (bad group, parameter, spectrum, flag).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to reach its tolerance (quadrature, series,
/// extrapolation, inverse CDF).
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rankone
