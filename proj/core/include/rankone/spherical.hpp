#pragma once

#include <complex>
#include <span>
#include <vector>

#include "rankone/group.hpp"

namespace rankone {

struct SphericalValue {
  double value = 1.0;
  double t = 0.0;
  SpectralParam param = SpectralParam::trivial();
  bool degenerate = false;  // evaluated through the perturbed connection formula
};

/// phi_s(a_t) = 2F1((rho+s)/2, (rho-s)/2; alpha+1; -sinh^2 t).
SphericalValue spherical_fn(const RankOneGroup& group, const SpectralParam& param, double t);

/// Value-only shorthand for spherical_fn.
double phi(const RankOneGroup& group, const SpectralParam& param, double t);

struct CFunctionValue {
  std::complex<double> c;
  SpectralParam param = SpectralParam::trivial();
};

/// Harish-Chandra c-function
///   c(s) = 2^{rho-s} Gamma(alpha+1) Gamma(s) / (Gamma((rho+s)/2) Gamma((s+alpha-beta+1)/2)),
/// the constant in phi_s(a_t) ~ c(s) e^{(s-rho)t}. Throws ValidationError at s = 0
/// and at poles of the numerator.
CFunctionValue hc_c_function(const RankOneGroup& group, const SpectralParam& param);

/// e^{-(rho - Re s)t}(1+t), the decay envelope of |phi_s(a_t)|.
double envelope_01(const RankOneGroup& group, const SpectralParam& param, double t);

/// max over the grid of |phi_s(a_t)| / envelope_01, one entry per parameter.
std::vector<double> certify_bound_01(const RankOneGroup& group,
                                     std::span<const SpectralParam> params,
                                     std::span<const double> t_grid);

}  // namespace rankone
