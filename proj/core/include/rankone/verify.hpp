#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rankone/group.hpp"

namespace rankone {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  unsigned threads = 0;
  bool monte_carlo = true;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

/// Acceptance suite. On SO(3,1) this is the full list of closed-form oracle,
/// spectral-model and Monte Carlo checks; on other groups it runs the checks
/// that need no closed form (normalisation, |phi| <= 1, c-function against
/// the numerical limit, shell Lipschitz bound, volume growth).
std::vector<CriterionResult> run_verification(const RankOneGroup& group,
                                              const VerifyOptions& opts = {});

/// Threshold M recorded for the summability criterion with delta = 1/2.
inline constexpr int kCauchyThresholdHalf = 97;

}  // namespace rankone
