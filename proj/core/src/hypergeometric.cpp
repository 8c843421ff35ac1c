#include "rankone/hypergeometric.hpp"

#include <cmath>
#include <string>

#include "rankone/error.hpp"
#include "rankone/gamma.hpp"

namespace rankone {

namespace {

using cplx = std::complex<double>;

constexpr int kMaxTerms = 20000;
constexpr double kSeriesEps = 1e-17;

// Perturbation used when a - b is (close to) an integer, where the two
// connection coefficients have cancelling poles.
constexpr double kDegenerateBand = 1e-5;
constexpr double kPerturbation = 1e-2;

bool nonpositive_integer(cplx z) noexcept { return is_gamma_pole(z); }

// sum_k (a)_k (b)_k / ((c)_k k!) z^k for |z| < 1 or terminating parameters.
cplx power_series(cplx a, cplx b, cplx c, double z) {
  cplx term = 1.0;
  cplx sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const cplx num = (a + double(k)) * (b + double(k));
    if (num == 0.0) return sum;
    term *= num / ((c + double(k)) * double(k + 1)) * z;
    sum += term;
    if (std::abs(term) <= kSeriesEps * std::abs(sum) && k > 2) return sum;
  }
  throw ConvergenceError("hypergeometric series did not converge");
}

double distance_to_integer(double v) { return std::abs(v - std::nearbyint(v)); }

void check_real_parameters(cplx a, cplx b) {
  const bool both_real = a.imag() == 0.0 && b.imag() == 0.0;
  const bool conjugate = a == std::conj(b);
  if (!both_real && !conjugate) {
    throw ValidationError("hyp2f1_neg needs real a, b or b = conj(a)");
  }
}

// Two-term connection formula with the degenerate case handled by symmetric
// perturbation of a - b (a + b fixed) and two Richardson steps; the
// symmetric average is even in the perturbation.
cplx connection_or_limit(cplx a, cplx b, double c, double w, double log1mx, bool& degenerate) {
  const cplx diff = a - b;
  degenerate = diff.imag() == 0.0 && distance_to_integer(diff.real()) < kDegenerateBand;
  if (!degenerate) return hyp2f1_route::connection(a, b, c, w, log1mx);
  auto symmetric = [&](double e) {
    const cplx plus = hyp2f1_route::connection(a + 0.5 * e, b - 0.5 * e, c, w, log1mx);
    const cplx minus = hyp2f1_route::connection(a - 0.5 * e, b + 0.5 * e, c, w, log1mx);
    return 0.5 * (plus + minus);
  };
  const cplx g1 = symmetric(kPerturbation);
  const cplx g2 = symmetric(0.5 * kPerturbation);
  const cplx g4 = symmetric(0.25 * kPerturbation);
  const cplx r1 = (4.0 * g2 - g1) / 3.0;
  const cplx r2 = (4.0 * g4 - g2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

}  // namespace

namespace hyp2f1_route {

cplx series(cplx a, cplx b, double c, double x) {
  if (!(std::abs(x) < 1.0) && !nonpositive_integer(a) && !nonpositive_integer(b)) {
    throw ValidationError("direct 2F1 series needs |x| < 1");
  }
  return power_series(a, b, c, x);
}

cplx pfaff(cplx a, cplx b, double c, double x) {
  if (x > 0.0) throw ValidationError("Pfaff route needs x <= 0");
  const double z = x / (x - 1.0);
  return std::exp(-a * std::log1p(-x)) * power_series(a, c - b, c, z);
}

cplx connection(cplx a, cplx b, double c, double w, double log1mx) {
  // 2F1(a,b;c;x) = G(c)G(b-a)/(G(b)G(c-a)) (1-x)^{-a} 2F1(a, c-b; a-b+1; w)
  //              + G(c)G(a-b)/(G(a)G(c-b)) (1-x)^{-b} 2F1(b, c-a; b-a+1; w)
  const cplx lg_c = ln_gamma(c);
  cplx total = 0.0;
  auto term = [&](cplx p, cplx q) {
    // p plays the role of a, q of b.
    const cplx r1 = rgamma(q);
    const cplx r2 = rgamma(c - p);
    if (r1 == 0.0 || r2 == 0.0) return cplx(0.0);
    const cplx coeff = std::exp(lg_c + ln_gamma(q - p)) * r1 * r2;
    return coeff * std::exp(-p * log1mx) * power_series(p, c - q, p - q + 1.0, w);
  };
  total += term(a, b);
  total += term(b, a);
  return total;
}

}  // namespace hyp2f1_route

Hyp2f1Result hyp2f1_neg(cplx a, cplx b, double c, double x) {
  if (x > 0.0) throw ValidationError("hyp2f1_neg needs x <= 0");
  check_real_parameters(a, b);
  if (is_gamma_pole(c)) throw ValidationError("2F1 parameter c is a pole");
  if (nonpositive_integer(a) || nonpositive_integer(b)) {
    return {power_series(a, b, c, x).real(), Hyp2f1Region::terminating, false};
  }
  if (-x <= 0.5) return {power_series(a, b, c, x).real(), Hyp2f1Region::series, false};
  // x/(x-1) <= 3/4  <=>  -x <= 3
  if (-x <= 3.0) return {hyp2f1_route::pfaff(a, b, c, x).real(), Hyp2f1Region::pfaff, false};
  bool degenerate = false;
  const cplx v = connection_or_limit(a, b, c, 1.0 / (1.0 - x), std::log1p(-x), degenerate);
  return {v.real(), Hyp2f1Region::connection, degenerate};
}

Hyp2f1Result hyp2f1_neg_sinh2(cplx a, cplx b, double c, double t) {
  t = std::abs(t);
  const double sh = std::sinh(t);
  // Below t ~ 354 the plain argument is representable.
  if (t < 300.0) {
    const double x = -sh * sh;
    if (-x <= 3.0) return hyp2f1_neg(a, b, c, x);
  }
  check_real_parameters(a, b);
  if (is_gamma_pole(c)) throw ValidationError("2F1 parameter c is a pole");
  if (nonpositive_integer(a) || nonpositive_integer(b)) {
    // Terminating polynomial; evaluate in the original variable.
    return {power_series(a, b, c, -sh * sh).real(), Hyp2f1Region::terminating, false};
  }
  // 1 - x = cosh^2 t.
  const double log_cosh = t + std::log1p(std::exp(-2.0 * t)) - std::log(2.0);
  const double sech = 1.0 / std::cosh(t);
  bool degenerate = false;
  const cplx v = connection_or_limit(a, b, c, sech * sech, 2.0 * log_cosh, degenerate);
  return {v.real(), Hyp2f1Region::connection, degenerate};
}

}  // namespace rankone
