#include "rankone/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rankone/error.hpp"

namespace rankone {

namespace {

GaussLegendre20 build_gl20() {
  GaussLegendre20 rule;
  constexpr int n = static_cast<int>(GaussLegendre20::order);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

struct Adaptive {
  const std::function<double(double)>& f;
  const QuadratureOptions& opts;
  QuadratureResult result;

  double panel(double a, double b) {
    result.evaluations += static_cast<int>(GaussLegendre20::order);
    return gl20_panel(f, a, b);
  }

  void run(double a, double b, double whole, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = panel(a, mid);
    const double right = panel(mid, b);
    const double halves = left + right;
    const double err = std::abs(halves - whole);
    if (err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(halves))) {
      result.value += halves;
      result.error_estimate += err;
      return;
    }
    if (depth >= opts.max_depth) {
      std::ostringstream msg;
      msg << "quadrature did not converge on [" << a << ", " << b << "]: error estimate " << err;
      throw ConvergenceError(msg.str());
    }
    run(a, mid, left, depth + 1);
    run(mid, b, right, depth + 1);
  }
};

}  // namespace

const GaussLegendre20& gauss_legendre20() {
  static const GaussLegendre20 rule = build_gl20();
  return rule;
}

double gl20_panel(const std::function<double(double)>& f, double a, double b) {
  const auto& rule = gauss_legendre20();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < GaussLegendre20::order; ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  if (b == a) return {};
  if (b < a) {
    QuadratureResult r = integrate(f, b, a, opts);
    r.value = -r.value;
    return r;
  }
  Adaptive adaptive{f, opts, {}};
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / opts.max_panel - 1e-12)));
  const double width = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == panels) ? b : a + (i + 1) * width;
    adaptive.run(lo, hi, adaptive.panel(lo, hi), 0);
  }
  return adaptive.result;
}

}  // namespace rankone
