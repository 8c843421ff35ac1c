#include "rankone/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "rankone/error.hpp"

namespace rankone {

namespace {

using cplx = std::complex<double>;

// B_{2k} / (2k (2k-1)), k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

constexpr double kShiftTo = 15.0;

cplx stirling(cplx z) {
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx sum = 0.0;
  cplx power = inv;
  for (double coeff : kStirling) {
    sum += coeff * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + sum;
}

}  // namespace

bool is_gamma_pole(cplx z) noexcept {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real());
}

cplx ln_gamma(cplx z) {
  if (is_gamma_pole(z)) throw ValidationError("log-gamma evaluated at a pole");
  // lnGamma(z) = lnGamma(z + n) - sum log(z + k). Each log stays on its
  // principal branch, which yields the principal branch of lnGamma.
  cplx shift = 0.0;
  while (std::abs(z) < kShiftTo || z.real() < kShiftTo * 0.5) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

cplx gamma(cplx z) { return std::exp(ln_gamma(z)); }

cplx rgamma(cplx z) {
  if (is_gamma_pole(z)) return 0.0;
  return std::exp(-ln_gamma(z));
}

}  // namespace rankone
