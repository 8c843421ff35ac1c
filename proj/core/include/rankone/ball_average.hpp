#pragma once

#include <array>
#include <span>
#include <vector>

#include "rankone/group.hpp"
#include "rankone/quadrature.hpp"

namespace rankone {

/// Radial Haar density in Cartan coordinates, (sinh t)^{n1} (sinh 2t)^{n2}.
double delta(const RankOneGroup& group, double t);
double delta_derivative(const RankOneGroup& group, double t);
/// log delta(t); -inf at t = 0.
double log_delta(const RankOneGroup& group, double t);

/// m(B_t) = int_0^t delta. Overflows to +inf once 2*rho*t exceeds ~709; use
/// log_ball_volume for large balls.
double ball_volume(const RankOneGroup& group, double t, const QuadratureOptions& opts = {});
double log_ball_volume(const RankOneGroup& group, double t, const QuadratureOptions& opts = {});

/// m(B_{t+eps} \ B_t) / m(B_{t+eps}), computed without forming either volume.
double shell_fraction(const RankOneGroup& group, double t, double eps,
                      const QuadratureOptions& opts = {});

/// m(B_{t+eps} \ B_t) / (eps * m(B_t)). Requires t >= 1 and 0 < eps < 1.
double volume_regularity(const RankOneGroup& group, double t, double eps,
                         const QuadratureOptions& opts = {});

/// Antiderivative of the Haar density on graded knots over [0, t_max],
/// interpolated by quintic Hermite polynomials (value, delta, delta').
/// `knot_spacing` caps the uniform spacing. Immutable once built.
class VolumeProfile {
 public:
  /// Throws ValidationError if t_max <= 0 or the volume at t_max would overflow.
  VolumeProfile(RankOneGroup group, double t_max, double knot_spacing = 0.05,
                const QuadratureOptions& opts = {});

  const RankOneGroup& group() const noexcept { return group_; }
  double t_max() const noexcept { return t_max_; }
  std::span<const double> knots() const noexcept { return knots_; }

  /// Interpolated m(B_t), 0 <= t <= t_max.
  double volume(double t) const;

  /// The radius tau in [0, t] with m(B_tau) = u * m(B_t), found by bisection to
  /// cdf_tol in CDF space. Throws ConvergenceError if bracketing fails.
  double inverse_cdf(double u, double t, double cdf_tol = 1e-12) const;

 private:
  double interpolate(std::size_t interval, double t) const;

  RankOneGroup group_;
  double t_max_;
  double spacing_;
  QuadratureOptions opts_;
  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> slopes_;
  std::vector<double> curvatures_;
};

struct PsiValue {
  double value = 1.0;
  double t = 0.0;
  SpectralParam param = SpectralParam::trivial();
};

/// Ball average of the spherical function,
///   psi(t) = int_0^t phi_s(a_tau) delta(tau) dtau / int_0^t delta(tau) dtau.
/// Trivial parameter returns exactly 1.
PsiValue psi(const RankOneGroup& group, const SpectralParam& param, double t,
             const QuadratureOptions& opts = {});

/// psi at every t in `ts` (any order), sharing one cumulative integration pass.
std::vector<double> psi_values(const RankOneGroup& group, const SpectralParam& param,
                               std::span<const double> ts, const QuadratureOptions& opts = {});

/// C_Omega = max over the grid and over Omega of |psi_sigma(t)| e^{(rho-r)t} / t.
/// Throws ValidationError if some parameter has Re s > r or the grid leaves [1, inf).
double psi_bound_check(const RankOneGroup& group, std::span<const SpectralParam> omega,
                       std::span<const double> t_grid, double r,
                       const QuadratureOptions& opts = {});

struct AsymptoticConstant {
  double numerical = 0.0;    // sequence-accelerated limit of psi(t) e^{(rho-s)t}
  double closed_form = 0.0;  // c(s) * 2 rho / (rho + s)
  std::array<double, 3> stages{};  // psi(t) e^{(rho-s)t} at t = 20, 30, 40
};

/// Limit c_j of psi(t) e^{(rho-s)t} for a complementary parameter 0 < s < rho.
/// Throws ValidationError for other parameters and ConvergenceError if the
/// stages at t = 30 and 40 differ by more than 1e-4 relative.
AsymptoticConstant psi_asymptotic_constant(const RankOneGroup& group, const SpectralParam& param,
                                           const QuadratureOptions& opts = {});

struct LipschitzCheck {
  double difference = 0.0;  // |psi(t+eps) - psi(t)|
  double bound = 0.0;       // m(B_{t+eps} \ B_t) / m(B_{t+eps})
  double slack() const noexcept { return bound - difference; }
};

/// Requires t >= 1 and 0 < eps < 1.
LipschitzCheck psi_lipschitz_check(const RankOneGroup& group, const SpectralParam& param,
                                   double t, double eps, const QuadratureOptions& opts = {});

}  // namespace rankone
