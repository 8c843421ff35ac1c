#include "rankone/verify.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rankone/ball_average.hpp"
#include "rankone/error.hpp"
#include "rankone/monte_carlo.hpp"
#include "rankone/spectral_sim.hpp"
#include "rankone/spherical.hpp"

namespace rankone {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, double(i) / (n - 1));
  return v;
}

std::vector<double> linear_grid(double lo, double hi, double step) {
  std::vector<double> v;
  const auto n = static_cast<int>(std::llround((hi - lo) / step));
  for (int i = 0; i <= n; ++i) v.push_back(lo + i * step);
  return v;
}

// Closed forms on real hyperbolic 3-space.
double h3_complementary(double s, double t) { return std::sinh(s * t) / (s * std::sinh(t)); }
double h3_principal(double lambda, double t) { return std::sin(lambda * t) / (lambda * std::sinh(t)); }
double h3_volume(double t) { return 0.5 * (std::sinh(t) * std::cosh(t) - t); }

PuritySpectrum reference_spectrum(const RankOneGroup& g) {
  return {g, {1.0, 0.7}, 0.4, {{SpectralParam::complementary(0.4), 1.0}, {SpectralParam::principal(1.0), 1.0}}};
}

SpectralVector reference_vector() { return {{1.0, 1.0}, {1.0, 1.0}}; }

Outcome spherical_oracle(const RankOneGroup& g) {
  const auto start = std::chrono::steady_clock::now();
  const auto ts = log_spaced(0.01, 25.0, 200);
  double worst = 0.0;
  for (int k = 1; k <= 10; ++k) {
    const double s = 0.1 * k;
    const auto p = SpectralParam::complementary(s);
    for (double t : ts) worst = std::max(worst, std::abs(phi(g, p, t) - h3_complementary(s, t)));
  }
  for (double lambda : {0.5, 1.0, 2.0}) {
    const auto p = SpectralParam::principal(lambda);
    for (double t : ts) worst = std::max(worst, std::abs(phi(g, p, t) - h3_principal(lambda, t)));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-10 && secs < 10.0, "max abs error " + fmt(worst) + ", " + fmt(secs) + " s"};
}

Outcome c_function_consistency(const RankOneGroup& g) {
  double worst_limit = 0.0;
  double worst_closed = 0.0;
  for (double s : {0.3, 0.5, 0.9}) {
    const auto p = SpectralParam::complementary(s);
    const double c = hc_c_function(g, p).c.real();
    const double limit = phi(g, p, 40.0) * std::exp((g.rho() - s) * 40.0);
    worst_limit = std::max(worst_limit, std::abs(limit - c) / c);
    worst_closed = std::max(worst_closed, std::abs(c - 1.0 / s) * s);
  }
  return {worst_limit <= 1e-8 && worst_closed <= 1e-10,
          "rel(limit) " + fmt(worst_limit) + ", rel(1/s) " + fmt(worst_closed)};
}

std::vector<SpectralParam> tested_params(const RankOneGroup& g) {
  std::vector<SpectralParam> ps{SpectralParam::trivial()};
  for (double frac : {0.1, 0.3, 0.5, 0.7, 0.9}) ps.push_back(SpectralParam::complementary(frac * g.rho_prime()));
  for (double lambda : {0.5, 1.0, 2.0}) ps.push_back(SpectralParam::principal(lambda));
  return ps;
}

Outcome bound_01(const RankOneGroup& g) {
  const auto ps = tested_params(g);
  const auto grid = linear_grid(0.0, 20.0, 0.05);
  const auto sup = certify_bound_01(g, ps, grid);
  bool finite = true;
  double largest = 0.0;
  for (double v : sup) {
    finite = finite && std::isfinite(v);
    largest = std::max(largest, v);
  }
  return {finite && sup.front() == 1.0,
          "C*(trivial) = " + fmt(sup.front()) + ", max C* = " + fmt(largest)};
}

Outcome ball_volume_check(const RankOneGroup& g) {
  double worst = 0.0;
  for (double t : linear_grid(0.1, 30.0, 0.1)) {
    const double ref = h3_volume(t);
    worst = std::max(worst, std::abs(ball_volume(g, t) - ref) / ref);
  }
  const double scaled = ball_volume(g, 30.0) * std::exp(-60.0);
  const bool ok = worst <= 1e-10 && std::abs(scaled - 0.25) <= 1e-6;
  return {ok, "max rel error " + fmt(worst) + ", m(B_30)e^-60 = " + fmt(scaled) + " (target 0.25)"};
}

Outcome psi_asymptotics(const RankOneGroup& g) {
  const double s = 0.5;
  const auto p = SpectralParam::complementary(s);
  const double ts[] = {30.0, 40.0};
  const auto v = psi_values(g, p, ts);
  const double a = v[0] * std::exp((g.rho() - s) * 30.0);
  const double b = v[1] * std::exp((g.rho() - s) * 40.0);
  const double drift = std::abs(b - a) / std::abs(b);
  // Elementary integration: int sinh(s u) sinh(u)/s ~ e^{(1+s)t}/(4 s (1+s)), int sinh^2 ~ e^{2t}/8.
  const double oracle = 2.0 / (s * (1.0 + s));
  const AsymptoticConstant c = psi_asymptotic_constant(g, p);
  const double err = std::abs(c.numerical - oracle) / oracle;
  return {drift < 1e-3 && err <= 1e-6,
          "drift(30,40) " + fmt(drift) + ", limit " + fmt(c.numerical) + " vs " + fmt(oracle) +
              " (rel " + fmt(err) + ")"};
}

Outcome lipschitz_grid(const RankOneGroup& g) {
  double worst = std::numeric_limits<double>::infinity();
  const std::vector<SpectralParam> ps{SpectralParam::trivial(),
                                      SpectralParam::complementary(0.5 * g.rho_prime()),
                                      SpectralParam::complementary(0.9 * g.rho_prime()),
                                      SpectralParam::principal(1.0)};
  for (const auto& p : ps) {
    for (double t : {1.0, 2.0, 5.0, 10.0}) {
      for (double eps : {0.01, 0.1, 0.5}) worst = std::min(worst, psi_lipschitz_check(g, p, t, eps).slack());
    }
  }
  return {worst >= -1e-9, "min slack " + fmt(worst)};
}

Outcome mean_envelope(const RankOneGroup& g) {
  const auto spec = reference_spectrum(g);
  const auto f = reference_vector();
  const auto coarse = mean_decay_report(spec, f, linear_grid(1.0, 40.0, 0.1));
  const auto fine = mean_decay_report(spec, f, linear_grid(1.0, 40.0, 0.05));
  const double change = std::abs(fine.sup_ratio - coarse.sup_ratio) / coarse.sup_ratio;
  const double gap = g.rho() - spec.r;
  const bool ok = std::isfinite(coarse.sup_ratio) && change < 0.01 &&
                  std::abs(coarse.fitted_exponent + gap) <= 0.05;
  return {ok, "sup ratio " + fmt(coarse.sup_ratio) + " (refined change " + fmt(change) +
                  "), fitted exponent " + fmt(coarse.fitted_exponent)};
}

Outcome direction(const RankOneGroup& g) {
  const auto spec = reference_spectrum(g);
  const auto dist = direction_convergence(spec, reference_vector(), linear_grid(5.0, 40.0, 5.0));
  bool decreasing = true;
  for (std::size_t i = 1; i < dist.size(); ++i) decreasing = decreasing && dist[i] < dist[i - 1];
  return {decreasing && dist.back() < 1e-3, "distance at t=40 " + fmt(dist.back())};
}

Outcome summability() {
  const double delta = 0.5;
  const auto grid = time_grid(delta, 1);
  const bool example = grid.size() == 3 && grid[0] == 1.0 && grid[1] == 1.5 && grid[2] == 2.0;
  const FiniteSumCheck full = finite_sum_check(delta, 60, std::numeric_limits<double>::infinity());
  const FiniteSumCheck wide = finite_sum_check(delta, 2 * kCauchyThresholdHalf);
  const int m = kCauchyThresholdHalf;
  const double gap = std::abs(wide.partial_sums[2 * m - 1] - wide.partial_sums[m - 1]);
  bool dominated_sums = true;
  for (std::size_t i = 0; i < full.partial_sums.size(); ++i) {
    dominated_sums = dominated_sums && full.partial_sums[i] <= full.dominating[i];
  }
  const bool ok = example && full.domination_violations == 0 && dominated_sums && gap < 1e-6;
  return {ok, std::to_string(full.enumerated_terms) + " terms, " +
                  std::to_string(full.domination_violations) + " violations, |S(" +
                  std::to_string(2 * m) + ")-S(" + std::to_string(m) + ")| = " + fmt(gap)};
}

Outcome mc_limit(unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const VolumeProfile profile(make_group(GroupFamily::so, 2), 10.0);
  MCOptions opts;
  opts.threads = threads;
  const HPoint base{0.1, 1.3};
  const MCRun run = mc_average(profile, 6.0, 1'000'000, Observable::cusp(2.0), 42, base, opts);
  const double target = 3.0 / (2.0 * std::numbers::pi);
  const bool within = std::abs(run.estimate - target) <= 4.0 * run.standard_error;
  const MCRun flat = mc_average(profile, 6.0, 100'000, Observable::constant(), 42, base, opts);
  const bool exact = flat.estimate == 1.0 && flat.standard_error == 0.0;
  bool ks = true;
  double worst_ks = 0.0;
  const std::size_t n = 100'000;
  for (double t : {1.0, 3.0, 6.0}) {
    const double d = radial_ks_statistic(profile, t, n, 42 + static_cast<std::uint64_t>(t));
    worst_ks = std::max(worst_ks, d * std::sqrt(double(n)));
    ks = ks && d < 1.63 / std::sqrt(double(n));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {within && exact && ks && secs < 120.0,
          "estimate " + fmt(run.estimate) + " +- " + fmt(run.standard_error) + " vs " + fmt(target) + " (" +
              fmt(std::abs(run.estimate - target) / run.standard_error) + " stderr)" +
              ", sqrt(N) KS max " + fmt(worst_ks) + ", " + fmt(secs) + " s"};
}

Outcome mc_scan(unsigned threads) {
  const VolumeProfile profile(make_group(GroupFamily::so, 2), 10.0);
  MCOptions opts;
  opts.threads = threads;
  const auto grid = linear_grid(2.0, 8.0, 1.0);
  const ScanReport rep = decay_scan(profile, grid, 1'000'000, Observable::cusp(2.0), 42, {0.1, 1.3}, opts);
  bool enveloped = true;
  bool monotone = true;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    enveloped = enveloped && r.deviation <= std::max(r.envelope, 4.0 * r.standard_error);
    if (i > 0) {
      const auto& q = rep.rows[i - 1];
      const double band = 4.0 * std::hypot(r.standard_error, q.standard_error);
      monotone = monotone && r.deviation <= q.deviation + band;
    }
  }
  return {enveloped && monotone, "C = " + fmt(rep.fitted_constant) + ", exponent " +
                                     fmt(rep.fitted_exponent) + " +- " + fmt(rep.fitted_exponent_stderr)};
}

// Group-generic checks.

Outcome generic_normalisation(const RankOneGroup& g) {
  double worst_bound = 0.0;
  bool unit = true;
  for (const auto& p : tested_params(g)) {
    unit = unit && phi(g, p, 0.0) == 1.0;
    for (double t : linear_grid(0.0, 25.0, 0.125)) worst_bound = std::max(worst_bound, std::abs(phi(g, p, t)));
  }
  return {unit && worst_bound <= 1.0 + 1e-12, "max |phi| " + fmt(worst_bound)};
}

Outcome generic_c_function(const RankOneGroup& g) {
  double worst = 0.0;
  for (double frac : {0.6, 0.8}) {
    const double s = frac * g.rho_prime();
    if (s >= g.rho()) continue;
    const auto p = SpectralParam::complementary(s);
    const double c = hc_c_function(g, p).c.real();
    const double t = 40.0 / std::min(1.0, s);
    const double limit = phi(g, p, t) * std::exp((g.rho() - s) * t);
    worst = std::max(worst, std::abs(limit - c) / c);
  }
  return {worst <= 1e-8, "rel(limit) " + fmt(worst)};
}

Outcome generic_volume_growth(const RankOneGroup& g) {
  const double a = std::exp(log_ball_volume(g, 20.0) - 2.0 * g.rho() * 20.0);
  const double b = std::exp(log_ball_volume(g, 30.0) - 2.0 * g.rho() * 30.0);
  bool monotone = true;
  double prev = 0.0;
  for (double t : linear_grid(0.25, 10.0, 0.25)) {
    const double v = log_ball_volume(g, t);
    monotone = monotone && v > prev - 1e300 && (t == 0.25 || v > prev);
    prev = v;
  }
  return {monotone && std::abs(a - b) / b < 1e-8, "m(B_t)e^{-2 rho t}: " + fmt(a) + " -> " + fmt(b)};
}

Outcome generic_psi_constant(const RankOneGroup& g) {
  const double s = std::min(0.8 * g.rho_prime(), 0.9 * g.rho());
  const auto c = psi_asymptotic_constant(g, SpectralParam::complementary(s));
  const double err = std::abs(c.numerical - c.closed_form) / c.closed_form;
  return {err <= 1e-6, "numerical " + fmt(c.numerical) + " vs c(s) 2rho/(rho+s) " + fmt(c.closed_form)};
}

using Check = std::function<Outcome()>;

}  // namespace

std::vector<CriterionResult> run_verification(const RankOneGroup& g, const VerifyOptions& opts) {
  std::vector<std::pair<std::string, Check>> checks;
  const bool h3 = g.n1() == 2 && g.n2() == 0 && g.rho_prime() == g.rho();
  if (h3) {
    checks = {
        {"spherical-function oracle", [&] { return spherical_oracle(g); }},
        {"c-function consistency", [&] { return c_function_consistency(g); }},
        {"bound (01) certification", [&] { return bound_01(g); }},
        {"ball volume", [&] { return ball_volume_check(g); }},
        {"psi asymptotics", [&] { return psi_asymptotics(g); }},
        {"shell Lipschitz bound", [&] { return lipschitz_grid(g); }},
        {"mean-ergodic envelope", [&] { return mean_envelope(g); }},
        {"direction convergence", [&] { return direction(g); }},
        {"grid summability", [] { return summability(); }},
    };
    if (opts.monte_carlo) {
      checks.emplace_back("Monte Carlo ergodic limit", [&] { return mc_limit(opts.threads); });
      checks.emplace_back("Monte Carlo decay scan", [&] { return mc_scan(opts.threads); });
    }
  } else {
    checks = {
        {"normalisation and |phi| <= 1", [&] { return generic_normalisation(g); }},
        {"c-function against numerical limit", [&] { return generic_c_function(g); }},
        {"bound (01) certification", [&] { return bound_01(g); }},
        {"volume growth", [&] { return generic_volume_growth(g); }},
        {"psi asymptotic constant", [&] { return generic_psi_constant(g); }},
        {"shell Lipschitz bound", [&] { return lipschitz_grid(g); }},
    };
  }

  std::vector<CriterionResult> results;
  int id = 0;
  for (auto& [name, check] : checks) {
    CriterionResult r;
    r.id = ++id;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = check();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opts.on_result) opts.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace rankone
