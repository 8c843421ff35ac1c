#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rankone/ball_average.hpp"
#include "rankone/hyperbolic.hpp"

namespace rankone {

/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng) noexcept;

/// Seed of the RNG substream for one chunk of samples; depends only on the
/// master seed and the chunk index.
std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t chunk) noexcept;

/// Worker count: `requested` if nonzero, else $RANKONE_THREADS, else the
/// hardware concurrency.
unsigned resolve_threads(unsigned requested) noexcept;

/// g = k(theta1) a_tau k(theta2), theta uniform on [0, pi), tau with density
/// delta(tau)/m(B_t) on [0, t]. `profile` must belong to SO(2,1).
struct CartanSample {
  Mat2 g;
  double tau = 0.0;
};
CartanSample cartan_sample(const VolumeProfile& profile, double t, std::mt19937_64& rng);

struct MCOptions {
  std::size_t chunk_size = 1 << 14;
  unsigned threads = 0;
  /// Evaluate f at x0 g^{-1} (as in the averaging operator) or at x0 g.
  bool apply_inverse = true;
};

struct MCRun {
  double t = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string observable;
  HPoint base;
  double estimate = 0.0;
  double standard_error = 0.0;  // sample std / sqrt(N)
};

/// Monte Carlo estimate of the ball average (A_t f)(x0) on PSL(2,Z)\H. The
/// sample point is h g^{-1} i, where h i = x0, reduced to the fundamental
/// domain. The result is bit-identical for any thread count.
MCRun mc_average(const VolumeProfile& profile, double t, std::size_t samples,
                 const Observable& obs, std::uint64_t seed, HPoint base,
                 const MCOptions& opts = {});

struct ScanRow {
  double t = 0.0;
  double estimate = 0.0;
  double standard_error = 0.0;
  double deviation = 0.0;  // |estimate - mean(obs)|
  double envelope = 0.0;   // fitted_constant * t * e^{-t/2}
};

struct ScanReport {
  std::vector<ScanRow> rows;
  /// sup of deviation / (t e^{-t/2}) over the calibration rows (first half of
  /// the grid); the remaining rows are predictions.
  double fitted_constant = 0.0;
  std::size_t calibration_rows = 0;
  /// Least-squares slope of log(deviation / t) against t over rows whose
  /// deviation exceeds 4 standard errors; NaN if fewer than two such rows.
  double fitted_exponent = 0.0;
  double fitted_exponent_stderr = 0.0;
};

ScanReport decay_scan(const VolumeProfile& profile, std::span<const double> t_grid,
                      std::size_t samples, const Observable& obs, std::uint64_t seed,
                      HPoint base, const MCOptions& opts = {});

/// Kolmogorov-Smirnov distance between `samples` radial draws at radius t and
/// the exact CDF m(B_tau)/m(B_t) obtained by direct quadrature.
double radial_ks_statistic(const VolumeProfile& profile, double t, std::size_t samples,
                           std::uint64_t seed);

}  // namespace rankone
