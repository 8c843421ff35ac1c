#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "rankone/group.hpp"
#include "rankone/quadrature.hpp"

namespace rankone {

/// Model function f given by the norms of its spectral components:
/// atom_norms[j] = |P_j f|, omega_norms[i] = |f_sigma| for the i-th Omega component.
struct SpectralVector {
  std::vector<double> atom_norms;
  std::vector<double> omega_norms;

  /// Parseval in the model.
  double norm() const;
  SpectralVector scaled(double factor) const;
  /// Default vector for a spectrum: unit atoms and omega_norms = sqrt(weight).
  static SpectralVector from_weights(const PuritySpectrum& spec);
};

/// Throws ValidationError if the spectrum violates purity or the vector does
/// not match it (sizes, negative or non-finite entries).
void validate_model(const PuritySpectrum& spec, const SpectralVector& f);

/// A_t f. Magnitudes are |psi| times the input norms; signs of psi are kept
/// separately.
struct AveragedVector {
  SpectralVector magnitude;
  std::vector<int> atom_signs;
  std::vector<int> omega_signs;
};

/// psi_sigma(t) for every atom and every Omega component, on a grid of t.
/// Row i of `atoms`/`omega` holds the component's values along `ts`.
struct PsiTable {
  std::vector<double> ts;
  std::vector<std::vector<double>> atoms;
  std::vector<std::vector<double>> omega;
};

PsiTable tabulate_psi(const PuritySpectrum& spec, std::span<const double> ts,
                      const QuadratureOptions& opts = {});

AveragedVector apply_average(const PuritySpectrum& spec, const SpectralVector& f, double t);

/// |A_t f - sum_j psi_j(t) P_j f| = sqrt(sum over Omega of psi_sigma(t)^2 |f_sigma|^2).
double deviation_norm(const PuritySpectrum& spec, const SpectralVector& f, double t);
std::vector<double> deviation_norms(const PuritySpectrum& spec, const SpectralVector& f,
                                    std::span<const double> ts);

struct DecayRow {
  double t = 0.0;
  double deviation = 0.0;
  double envelope = 0.0;  // t e^{-(rho-r)t} |f|
  double ratio = 0.0;     // deviation / envelope
};

struct DecayReport {
  std::vector<DecayRow> rows;
  double fitted_exponent = 0.0;  // least-squares slope of log deviation against t
  double fitted_exponent_stderr = 0.0;
  double sup_ratio = 0.0;
};

/// Tabulates the mean-ergodic deviation against its envelope. Rows with zero
/// deviation are excluded from the exponent fit.
DecayReport mean_decay_report(const PuritySpectrum& spec, const SpectralVector& f,
                                std::span<const double> t_grid);

/// Distance between (A_t f - P_0 f)/|A_t f - P_0 f| and the unit vector on
/// atom 1, for each t. Requires atom 1 to exist with positive norm.
std::vector<double> direction_convergence(const PuritySpectrum& spec, const SpectralVector& f,
                                          std::span<const double> t_grid);

struct DiscreteConstant {
  /// partial[N-1] = (sum_{n<=N} n^{-3-2eps} e^{2(rho-r)n} dev(n)^2)^{1/2}.
  std::vector<double> partial;
  /// sup_n dev(n) / (n e^{-(rho-r)n} |f|) over the summed range.
  double envelope_constant = 0.0;
  /// envelope_constant^2 |f|^2 * sum_{n > N_max} n^{-1-2eps}, bounded by an integral.
  double tail_bound = 0.0;
  double value() const { return partial.empty() ? 0.0 : partial.back(); }
};

DiscreteConstant discrete_constant(const PuritySpectrum& spec, const SpectralVector& f,
                                   double eps, int n_max);

/// Number of equal sub-intervals of [m, m+1]: floor(e^{delta m / 2} + 1).
double subdivision_count(double delta, int m);

/// Calls visit(t, m) for every grid point in [1, m_max + 1], in increasing
/// order; each [m, m+1] is split into subdivision_count(delta, m) parts.
void for_each_time_grid_point(double delta, int m_max,
                              const std::function<void(double t, int m)>& visit);

/// Materialised grid; only sensible for moderate delta * m_max.
std::vector<double> time_grid(double delta, int m_max);

struct FiniteSumCheck {
  double delta = 0.0;
  /// partial_sums[M-1] = sum of t_n^2 e^{-delta t_n} over t_n in [1, M+1).
  std::vector<double> partial_sums;
  /// dominating[M-1] = sum_{m<=M} (m+1)^2 floor(e^{delta m/2}+1) e^{-delta m}.
  std::vector<double> dominating;
  std::size_t enumerated_terms = 0;
  std::size_t domination_violations = 0;
  /// max over enumerated terms of t_n^2 e^{-delta t_n} / ((m+1)^2 e^{-delta m}).
  double max_domination_ratio = 0.0;
};

/// Intervals with at most `enumerate_cap` points are summed term by term and
/// every term is checked against its dominating bound; denser intervals use
/// the Euler-Maclaurin form of the equally spaced sum.
FiniteSumCheck finite_sum_check(double delta, int m_max, double enumerate_cap = 1 << 24);

/// Smallest M <= m_limit with |S(2M) - S(M)| < tol, or -1.
int cauchy_threshold(const FiniteSumCheck& check, double tol);

/// One step of the continuous-time interpolation chain: for t_n <= t < t_{n+1}
/// on time_grid(delta), dev(t) <= dev(t_n) + |A_t f - A_{t_n} f| + sum_j |P_j f| |psi_j(t) - psi_j(t_n)|.
struct InterpolationStep {
  double t = 0.0;
  double t_n = 0.0;
  double lhs = 0.0;
  double deviation_at_grid = 0.0;
  double average_increment = 0.0;
  double atom_increment = 0.0;
  double spacing = 0.0;  // t_{n+1} - t_n
  double rhs() const noexcept { return deviation_at_grid + average_increment + atom_increment; }
};

InterpolationStep interpolation_step(const PuritySpectrum& spec, const SpectralVector& f,
                                     double delta, double t);

}  // namespace rankone
