#pragma once

#include <span>

namespace rankone {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
};

/// Ordinary least squares y = intercept + slope x. Needs at least two distinct x.
LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

}  // namespace rankone
