#pragma once

#include <complex>

namespace rankone {

/// Evaluation region used by hyp2f1_neg.
enum class Hyp2f1Region { series, pfaff, connection, terminating };

struct Hyp2f1Result {
  double value = 0.0;
  Hyp2f1Region region = Hyp2f1Region::series;
  /// The connection formula was singular (a - b an integer) and the value was
  /// obtained by Richardson-extrapolated parameter perturbation.
  bool degenerate = false;
};

/// Gauss 2F1(a, b; c; x) for real x <= 0, where either a and b are both real
/// or b = conj(a); in both cases the value is real.
///
/// Regions: |x| <= 1/2 direct series; x/(x-1) <= 3/4 Pfaff transform;
/// otherwise the connection formula in powers of 1/(1-x).
/// Throws ValidationError if x > 0, c is a pole, or the parameters do not give
/// a real value; ConvergenceError if a series fails to converge.
Hyp2f1Result hyp2f1_neg(std::complex<double> a, std::complex<double> b, double c, double x);

inline double hyp2f1_neg(double a, double b, double c, double x) {
  return hyp2f1_neg(std::complex<double>(a), std::complex<double>(b), c, x).value;
}

/// Same as hyp2f1_neg but for x = -sinh^2(t), parametrised by t so that large
/// t does not overflow.
Hyp2f1Result hyp2f1_neg_sinh2(std::complex<double> a, std::complex<double> b, double c, double t);

/// The individual evaluation routes, exposed so that their overlap bands can
/// be cross-checked. Each returns the complex value of the analytic
/// continuation; the caller picks the real part.
namespace hyp2f1_route {

/// Power series in x; requires |x| < 1.
std::complex<double> series(std::complex<double> a, std::complex<double> b, double c, double x);

/// (1-x)^{-a} 2F1(a, c-b; c; x/(x-1)); requires x <= 0 and x/(x-1) < 1.
std::complex<double> pfaff(std::complex<double> a, std::complex<double> b, double c, double x);

/// Two-term expansion in w = 1/(1-x), x <= 0, with log(1-x) passed separately.
/// Requires a - b not an integer.
std::complex<double> connection(std::complex<double> a, std::complex<double> b, double c,
                                double w, double log_one_minus_x);

}  // namespace hyp2f1_route

}  // namespace rankone
