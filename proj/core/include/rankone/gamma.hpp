#pragma once

#include <complex>

namespace rankone {

/// Principal branch of log Gamma (cut along the negative real axis).
/// Throws ValidationError at the poles z = 0, -1, -2, ...
std::complex<double> ln_gamma(std::complex<double> z);

std::complex<double> gamma(std::complex<double> z);

/// 1/Gamma(z); entire, so exactly zero at the poles of Gamma.
std::complex<double> rgamma(std::complex<double> z);

/// True when z is (numerically exactly) a non-positive integer.
bool is_gamma_pole(std::complex<double> z) noexcept;

}  // namespace rankone
