#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace rankone {

struct QuadratureOptions {
  double max_panel = 0.25;
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 30;
};

/// 20-point Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre20 {
  static constexpr std::size_t order = 20;
  std::array<double, order> nodes{};
  std::array<double, order> weights{};
};

const GaussLegendre20& gauss_legendre20();

/// Integral of f over [a, b] on a single 20-point panel.
double gl20_panel(const std::function<double(double)>& f, double a, double b);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Composite Gauss-Legendre on panels no wider than opts.max_panel, each
/// bisected until whole-vs-halves agree to max(abs_tol, rel_tol*|panel|).
/// Throws ConvergenceError if opts.max_depth is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

}  // namespace rankone
