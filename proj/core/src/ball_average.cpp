#include "rankone/ball_average.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "rankone/error.hpp"
#include "rankone/spherical.hpp"

namespace rankone {

namespace {

double log_sinh(double x) {
  if (x > 1.0) return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
  return std::log(std::sinh(x));
}

// Largest 2*rho*t for which volumes are formed without rescaling.
constexpr double kDirectExponent = 600.0;
constexpr double kDirectRadius = 1e-3;

// int_a^b f(tau) delta(tau) e^{-2 rho scale_t} dtau
double scaled_integral(const RankOneGroup& g, const std::function<double(double)>& f, double a,
                       double b, double scale_t, const QuadratureOptions& opts) {
  const double shift = 2.0 * g.rho() * scale_t;
  auto integrand = [&](double tau) { return f(tau) * std::exp(log_delta(g, tau) - shift); };
  return integrate(integrand, a, b, opts).value;
}

double one(double) { return 1.0; }

void check_regularity_args(double t, double eps) {
  if (!(t >= 1.0)) throw ValidationError("needs t >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("needs 0 < eps < 1");
}

}  // namespace

double delta(const RankOneGroup& g, double t) {
  if (t < 0.0) throw ValidationError("delta needs t >= 0");
  return std::pow(std::sinh(t), g.n1()) * std::pow(std::sinh(2.0 * t), g.n2());
}

double delta_derivative(const RankOneGroup& g, double t) {
  const double sh = std::sinh(t);
  const double sh2 = std::sinh(2.0 * t);
  const int n1 = g.n1();
  const int n2 = g.n2();
  double d = n1 * std::pow(sh, n1 - 1) * std::cosh(t) * std::pow(sh2, n2);
  if (n2 > 0) d += std::pow(sh, n1) * 2.0 * n2 * std::pow(sh2, n2 - 1) * std::cosh(2.0 * t);
  return d;
}

double log_delta(const RankOneGroup& g, double t) {
  if (t == 0.0) return -std::numeric_limits<double>::infinity();
  double v = g.n1() * log_sinh(t);
  if (g.n2() > 0) v += g.n2() * log_sinh(2.0 * t);
  return v;
}

double ball_volume(const RankOneGroup& g, double t, const QuadratureOptions& opts) {
  if (t < 0.0) throw ValidationError("ball volume needs t >= 0");
  if (2.0 * g.rho() * t <= kDirectExponent) {
    return integrate([&](double tau) { return delta(g, tau); }, 0.0, t, opts).value;
  }
  return std::exp(log_ball_volume(g, t, opts));
}

double log_ball_volume(const RankOneGroup& g, double t, const QuadratureOptions& opts) {
  if (t <= 0.0) {
    if (t == 0.0) return -std::numeric_limits<double>::infinity();
    throw ValidationError("ball volume needs t >= 0");
  }
  return 2.0 * g.rho() * t + std::log(scaled_integral(g, one, 0.0, t, t, opts));
}

double shell_fraction(const RankOneGroup& g, double t, double eps, const QuadratureOptions& opts) {
  if (t < 0.0 || eps < 0.0) throw ValidationError("shell fraction needs t, eps >= 0");
  const double outer = t + eps;
  if (outer == 0.0) return 0.0;
  const double shell = scaled_integral(g, one, t, outer, outer, opts);
  const double inner = scaled_integral(g, one, 0.0, t, outer, opts);
  return shell / (inner + shell);
}

double volume_regularity(const RankOneGroup& g, double t, double eps, const QuadratureOptions& opts) {
  check_regularity_args(t, eps);
  const double shell = scaled_integral(g, one, t, t + eps, t, opts);
  const double inner = scaled_integral(g, one, 0.0, t, t, opts);
  return shell / (eps * inner);
}

VolumeProfile::VolumeProfile(RankOneGroup group, double t_max, double knot_spacing,
                             const QuadratureOptions& opts)
    : group_(std::move(group)), t_max_(t_max), opts_(opts) {
  if (!(t_max > 0.0)) throw ValidationError("volume profile needs t_max > 0");
  if (!(knot_spacing > 0.0)) throw ValidationError("knot spacing must be positive");
  if (2.0 * group_.rho() * t_max > kDirectExponent) {
    throw ValidationError("volume profile would overflow; reduce t_max");
  }
  // Graded knots: geometric near the origin, where m(B_t) ~ t^d, then uniform.
  spacing_ = std::min(knot_spacing, 0.1 / std::max(1.0, 2.0 * group_.rho()));
  knots_.push_back(0.0);
  for (double t = std::min(kDirectRadius, t_max);; t = std::min(t_max, t + std::min(spacing_, 0.05 * t))) {
    knots_.push_back(t);
    if (t >= t_max) break;
  }
  auto dens = [&](double tau) { return delta(group_, tau); };
  values_.resize(knots_.size());
  slopes_.resize(knots_.size());
  curvatures_.resize(knots_.size());
  double cumulative = 0.0;
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (i > 0) cumulative += integrate(dens, knots_[i - 1], knots_[i], opts).value;
    values_[i] = cumulative;
    slopes_[i] = delta(group_, knots_[i]);
    curvatures_[i] = delta_derivative(group_, knots_[i]);
  }
}

double VolumeProfile::interpolate(std::size_t k, double t) const {
  const double h = knots_[k + 1] - knots_[k];
  const double u = (t - knots_[k]) / h;
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double u4 = u3 * u;
  const double u5 = u4 * u;
  const double h00 = 1.0 - 10.0 * u3 + 15.0 * u4 - 6.0 * u5;
  const double h10 = u - 6.0 * u3 + 8.0 * u4 - 3.0 * u5;
  const double h20 = 0.5 * (u2 - 3.0 * u3 + 3.0 * u4 - u5);
  const double h01 = 10.0 * u3 - 15.0 * u4 + 6.0 * u5;
  const double h11 = -4.0 * u3 + 7.0 * u4 - 3.0 * u5;
  const double h21 = 0.5 * (u3 - 2.0 * u4 + u5);
  return h00 * values_[k] + h10 * h * slopes_[k] + h20 * h * h * curvatures_[k] +
         h01 * values_[k + 1] + h11 * h * slopes_[k + 1] + h21 * h * h * curvatures_[k + 1];
}

double VolumeProfile::volume(double t) const {
  if (t < 0.0 || t > t_max_ * (1.0 + 1e-12)) {
    throw ValidationError("volume profile queried outside [0, t_max]");
  }
  if (t >= t_max_) return values_.back();
  if (t <= knots_[1]) return integrate([&](double tau) { return delta(group_, tau); }, 0.0, t, opts_).value;
  const auto k = static_cast<std::size_t>(std::upper_bound(knots_.begin(), knots_.end(), t) - knots_.begin()) - 1;
  return interpolate(std::min(k, knots_.size() - 2), t);
}

double VolumeProfile::inverse_cdf(double u, double t, double cdf_tol) const {
  if (!(u >= 0.0 && u <= 1.0)) throw ValidationError("inverse CDF needs u in [0, 1]");
  if (t == 0.0) return 0.0;
  const double total = volume(t);
  const double target = u * total;
  // Knot interval containing the target, clipped to [0, t].
  const auto last = static_cast<std::size_t>(
      std::upper_bound(knots_.begin(), knots_.end(), t) - knots_.begin());
  const auto it = std::upper_bound(values_.begin(), values_.begin() + last, target);
  std::size_t k = it == values_.begin() ? 0 : static_cast<std::size_t>(it - values_.begin()) - 1;
  double lo = knots_[k];
  double hi = std::min(k + 1 < knots_.size() ? knots_[k + 1] : t_max_, t);
  if (lo > hi) lo = hi;
  double f_lo = volume(lo);
  double f_hi = volume(hi);
  if (target < f_lo - cdf_tol * total || target > f_hi + cdf_tol * total) {
    throw ConvergenceError("inverse CDF bracket does not contain the target");
  }
  for (int iter = 0; iter < 200; ++iter) {
    if ((f_hi - f_lo) <= cdf_tol * total || hi - lo <= 1e-15 * std::max(1.0, hi)) {
      return 0.5 * (lo + hi);
    }
    const double mid = 0.5 * (lo + hi);
    const double f_mid = volume(mid);
    if (f_mid < target) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  throw ConvergenceError("inverse CDF bisection did not converge");
}

std::vector<double> psi_values(const RankOneGroup& g, const SpectralParam& param,
                               std::span<const double> ts, const QuadratureOptions& opts) {
  param.validate(g);
  std::vector<double> out(ts.size(), 1.0);
  for (double t : ts) {
    if (!(t >= 0.0)) throw ValidationError("psi needs t >= 0");
  }
  if (param.series() == Series::trivial) return out;

  std::vector<std::size_t> order(ts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return ts[i] < ts[j]; });

  auto sph = [&](double tau) { return phi(g, param, tau); };
  const double two_rho = 2.0 * g.rho();
  double prev = 0.0;
  double num = 0.0;  // int_0^prev phi delta, times e^{-2 rho prev}
  double den = 0.0;
  for (auto idx : order) {
    const double t = ts[idx];
    if (t == 0.0) continue;
    if (t > prev) {
      const double decay = std::exp(-two_rho * (t - prev));
      num = num * decay + scaled_integral(g, sph, prev, t, t, opts);
      den = den * decay + scaled_integral(g, one, prev, t, t, opts);
      prev = t;
    }
    out[idx] = num / den;
  }
  return out;
}

PsiValue psi(const RankOneGroup& g, const SpectralParam& param, double t, const QuadratureOptions& opts) {
  const double ts[] = {t};
  return {psi_values(g, param, ts, opts).front(), t, param};
}

double psi_bound_check(const RankOneGroup& g, std::span<const SpectralParam> omega,
                       std::span<const double> t_grid, double r, const QuadratureOptions& opts) {
  for (const auto& p : omega) {
    if (p.re_s(g) > r) {
      throw ValidationError("psi bound check: parameter " + p.to_string() + " has Re s > r");
    }
  }
  for (double t : t_grid) {
    if (!(t >= 1.0)) throw ValidationError("psi bound check needs t >= 1");
  }
  double sup = 0.0;
  for (const auto& p : omega) {
    const auto values = psi_values(g, p, t_grid, opts);
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
      const double t = t_grid[i];
      sup = std::max(sup, std::abs(values[i]) * std::exp((g.rho() - r) * t) / t);
    }
  }
  return sup;
}

AsymptoticConstant psi_asymptotic_constant(const RankOneGroup& g, const SpectralParam& param,
                                           const QuadratureOptions& opts) {
  if (param.series() == Series::trivial) {
    AsymptoticConstant trivial;
    trivial.numerical = trivial.closed_form = 1.0;
    trivial.stages = {1.0, 1.0, 1.0};
    return trivial;
  }
  if (param.series() != Series::complementary) {
    throw ValidationError("asymptotic constant needs a complementary parameter");
  }
  param.validate(g);
  const double s = param.value();
  const double rho = g.rho();
  if (!(s < rho)) throw ValidationError("s = rho is reserved for the trivial representation");

  const double ts[] = {20.0, 30.0, 40.0};
  const auto values = psi_values(g, param, ts, opts);
  AsymptoticConstant out;
  for (int i = 0; i < 3; ++i) out.stages[i] = values[i] * std::exp((rho - s) * ts[i]);
  const double d1 = out.stages[1] - out.stages[0];
  const double d2 = out.stages[2] - out.stages[1];
  if (std::abs(d2) > 1e-4 * std::abs(out.stages[2])) {
    std::ostringstream msg;
    msg << "psi(t) e^{(rho-s)t} not converged: relative change " << std::abs(d2 / out.stages[2])
        << " between t = 30 and t = 40";
    throw ConvergenceError(msg.str());
  }
  out.numerical = out.stages[2];
  // Aitken step only when the differences contract geometrically.
  if (std::abs(d1) > 1e-13 * std::abs(out.stages[2]) && std::abs(d2) < 0.5 * std::abs(d1) &&
      d1 * d2 > 0.0) {
    out.numerical = out.stages[2] - d2 * d2 / (d2 - d1);
  }
  out.closed_form = hc_c_function(g, param).c.real() * 2.0 * rho / (rho + s);
  return out;
}

LipschitzCheck psi_lipschitz_check(const RankOneGroup& g, const SpectralParam& param, double t,
                                   double eps, const QuadratureOptions& opts) {
  check_regularity_args(t, eps);
  LipschitzCheck out;
  const double ts[] = {t, t + eps};
  const auto values = psi_values(g, param, ts, opts);
  out.difference = std::abs(values[1] - values[0]);
  out.bound = shell_fraction(g, t, eps, opts);
  return out;
}

}  // namespace rankone
