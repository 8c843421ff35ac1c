#include "rankone/spherical.hpp"

#include <algorithm>
#include <cmath>

#include "rankone/error.hpp"
#include "rankone/gamma.hpp"
#include "rankone/hypergeometric.hpp"

namespace rankone {

SphericalValue spherical_fn(const RankOneGroup& group, const SpectralParam& param, double t) {
  if (t < 0.0) throw ValidationError("spherical function needs t >= 0");
  param.validate(group);
  SphericalValue out{1.0, t, param, false};
  if (param.series() == Series::trivial || t == 0.0) return out;

  const std::complex<double> s = param.s(group);
  const double rho = group.rho();
  const auto a = 0.5 * (rho + s);
  const auto b = 0.5 * (rho - s);
  const Hyp2f1Result r = hyp2f1_neg_sinh2(a, b, group.alpha() + 1.0, t);
  out.value = r.value;
  out.degenerate = r.degenerate;
  return out;
}

double phi(const RankOneGroup& group, const SpectralParam& param, double t) {
  return spherical_fn(group, param, t).value;
}

CFunctionValue hc_c_function(const RankOneGroup& group, const SpectralParam& param) {
  param.validate(group);
  const std::complex<double> s = param.s(group);
  if (s == 0.0) throw ValidationError("c-function has a pole at s = 0");
  const double rho = group.rho();
  const double alpha = group.alpha();
  const double beta = group.beta();
  const std::complex<double> num_arg = s;
  if (is_gamma_pole(num_arg)) throw ValidationError("c-function numerator at a Gamma pole");
  const std::complex<double> log_c = (rho - s) * std::log(2.0) + ln_gamma(alpha + 1.0) + ln_gamma(s);
  const std::complex<double> c =
      std::exp(log_c) * rgamma(0.5 * (rho + s)) * rgamma(0.5 * (s + alpha - beta + 1.0));
  return {c, param};
}

double envelope_01(const RankOneGroup& group, const SpectralParam& param, double t) {
  return std::exp(-(group.rho() - param.re_s(group)) * t) * (1.0 + t);
}

std::vector<double> certify_bound_01(const RankOneGroup& group,
                                     std::span<const SpectralParam> params,
                                     std::span<const double> t_grid) {
  std::vector<double> sup(params.size(), 0.0);
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (double t : t_grid) {
      const double ratio = std::abs(phi(group, params[i], t)) / envelope_01(group, params[i], t);
      sup[i] = std::max(sup[i], ratio);
    }
  }
  return sup;
}

}  // namespace rankone
