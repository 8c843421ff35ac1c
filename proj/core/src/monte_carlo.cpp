#include "rankone/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "rankone/error.hpp"
#include "rankone/stats.hpp"

namespace rankone {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_plane(const VolumeProfile& profile) {
  if (profile.group().n1() != 1 || profile.group().n2() != 0) {
    throw ValidationError("hyperbolic Monte Carlo needs the SO(2,1) volume profile");
  }
}

struct ChunkSum {
  double sum = 0.0;
  double sum_sq = 0.0;
};

}  // namespace

double uniform01(std::mt19937_64& rng) noexcept {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t chunk) noexcept {
  return splitmix64(splitmix64(master_seed) ^ splitmix64(chunk + 0x632be59bd9b4e019ULL));
}

unsigned resolve_threads(unsigned requested) noexcept {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RANKONE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CartanSample cartan_sample(const VolumeProfile& profile, double t, std::mt19937_64& rng) {
  require_plane(profile);
  if (!(t >= 0.0) || t > profile.t_max()) {
    throw ValidationError("cartan_sample needs 0 <= t <= profile t_max");
  }
  const double u = uniform01(rng);
  const double theta1 = std::numbers::pi * uniform01(rng);
  const double theta2 = std::numbers::pi * uniform01(rng);
  if (t == 0.0) return {Mat2::identity(), 0.0};
  const double tau = profile.inverse_cdf(u, t);
  const Mat2 g = Mat2::rotation(theta1) * Mat2::radial(tau) * Mat2::rotation(theta2);
  return {g, tau};
}

MCRun mc_average(const VolumeProfile& profile, double t, std::size_t samples, const Observable& obs,
                 std::uint64_t seed, HPoint base, const MCOptions& opts) {
  require_plane(profile);
  if (samples == 0) throw ValidationError("Monte Carlo needs at least one sample");
  if (!(base.y > 0.0)) throw ValidationError("base point must lie in the upper half-plane");
  if (opts.chunk_size == 0) throw ValidationError("chunk size must be positive");

  MCRun run{t, samples, seed, obs.to_string(), base, 0.0, 0.0};
  if (t == 0.0) {
    run.estimate = obs.eval(reduce(base).point);
    return run;
  }

  const Mat2 h = Mat2::from_point(base);
  const std::size_t chunks = (samples + opts.chunk_size - 1) / opts.chunk_size;
  std::vector<ChunkSum> partial(chunks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    try {
      for (std::size_t c = next++; c < chunks && !failed; c = next++) {
        std::mt19937_64 rng(substream_seed(seed, c));
        const std::size_t begin = c * opts.chunk_size;
        const std::size_t end = std::min(samples, begin + opts.chunk_size);
        ChunkSum acc;
        for (std::size_t i = begin; i < end; ++i) {
          const CartanSample s = cartan_sample(profile, t, rng);
          const Mat2 g = opts.apply_inverse ? s.g.inverse() : s.g;
          const HPoint z = h * (g * HPoint{0.0, 1.0});
          const double v = obs.eval(reduce(z).point);
          acc.sum += v;
          acc.sum_sq += v * v;
        }
        partial[c] = acc;
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };

  const unsigned threads = std::min<std::size_t>(resolve_threads(opts.threads), chunks);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ChunkSum total;
  for (const auto& p : partial) {
    total.sum += p.sum;
    total.sum_sq += p.sum_sq;
  }
  const auto n = static_cast<double>(samples);
  run.estimate = total.sum / n;
  if (samples > 1) {
    const double var = std::max(0.0, (total.sum_sq - total.sum * total.sum / n) / (n - 1.0));
    run.standard_error = std::sqrt(var / n);
  }
  return run;
}

ScanReport decay_scan(const VolumeProfile& profile, std::span<const double> t_grid, std::size_t samples,
                      const Observable& obs, std::uint64_t seed, HPoint base, const MCOptions& opts) {
  if (t_grid.empty()) throw ValidationError("decay scan needs a nonempty grid");
  ScanReport report;
  const double target = obs.mean();
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    const MCRun run = mc_average(profile, t_grid[k], samples, obs, substream_seed(seed, ~k), base, opts);
    ScanRow row;
    row.t = t_grid[k];
    row.estimate = run.estimate;
    row.standard_error = run.standard_error;
    row.deviation = std::abs(run.estimate - target);
    report.rows.push_back(row);
  }
  auto shape = [](double t) { return t * std::exp(-0.5 * t); };
  auto above_noise = [](const ScanRow& r) { return r.deviation > 4.0 * r.standard_error; };

  report.calibration_rows = std::max<std::size_t>(1, report.rows.size() / 2);
  for (std::size_t k = 0; k < report.calibration_rows; ++k) {
    const auto& r = report.rows[k];
    if (above_noise(r)) report.fitted_constant = std::max(report.fitted_constant, r.deviation / shape(r.t));
  }
  for (auto& r : report.rows) r.envelope = report.fitted_constant * shape(r.t);

  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : report.rows) {
    if (above_noise(r)) {
      xs.push_back(r.t);
      ys.push_back(std::log(r.deviation / r.t));
    }
  }
  if (xs.size() >= 2) {
    const LinearFit fit = linear_fit(xs, ys);
    report.fitted_exponent = fit.slope;
    report.fitted_exponent_stderr = fit.slope_stderr;
  } else {
    report.fitted_exponent = report.fitted_exponent_stderr = std::nan("");
  }
  return report;
}

double radial_ks_statistic(const VolumeProfile& profile, double t, std::size_t samples,
                           std::uint64_t seed) {
  if (samples == 0) throw ValidationError("KS statistic needs samples");
  if (!(t > 0.0) || t > profile.t_max()) throw ValidationError("KS statistic needs 0 < t <= t_max");
  std::mt19937_64 rng(seed);
  std::vector<double> taus(samples);
  for (auto& tau : taus) tau = profile.inverse_cdf(uniform01(rng), t);
  std::sort(taus.begin(), taus.end());

  // Exact CDF by direct quadrature of the density, accumulated along the sorted sample.
  const RankOneGroup& g = profile.group();
  auto dens = [&](double tau) { return delta(g, tau); };
  const double total = integrate(dens, 0.0, t).value;
  double cumulative = 0.0;
  double prev = 0.0;
  double d = 0.0;
  const auto n = static_cast<double>(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    cumulative += integrate(dens, prev, taus[i]).value;
    prev = taus[i];
    const double cdf = cumulative / total;
    d = std::max({d, cdf - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - cdf});
  }
  return d;
}

}  // namespace rankone
