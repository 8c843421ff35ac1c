#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankone/ball_average.hpp"
#include "rankone/error.hpp"
#include "rankone/monte_carlo.hpp"
#include "rankone/spectral_sim.hpp"
#include "rankone/spectrum_io.hpp"
#include "rankone/spherical.hpp"
#include "rankone/table.hpp"
#include "rankone/verify.hpp"

namespace {

using namespace rankone;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Common {
  std::string group = "so:3";
  double rho_prime = 0.0;
  std::string format = "csv";
  unsigned threads = 0;
  std::string out;
  std::uint64_t seed = 42;
};

std::string g_invocation;

std::string invocation(int argc, char** argv) {
  std::string s = "rankone";
  for (int i = 1; i < argc; ++i) {
    s += ' ';
    s += argv[i];
  }
  return s;
}

std::string header() { return "rankone " RANKONE_VERSION ": " + g_invocation; }

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) throw ValidationError("--steps must be at least 1");
  if (!(hi >= lo)) throw ValidationError("--t-max must not be below --t-min");
  std::vector<double> v;
  for (int i = 0; i <= steps; ++i) v.push_back(lo + (hi - lo) * i / steps);
  return v;
}

std::vector<double> parse_range(const std::string& spec) {
  double a = 0, b = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || !in.eof() || step <= 0 || b < a) {
    throw ValidationError("expected a:b:step with a <= b and step > 0, got '" + spec + "'");
  }
  std::vector<double> v;
  const auto n = static_cast<long>(std::floor((b - a) / step + 1e-9));
  for (long i = 0; i <= n; ++i) v.push_back(a + static_cast<double>(i) * step);
  return v;
}

HPoint parse_point(const std::string& spec) {
  double x = 0, y = 0;
  char comma = 0;
  std::istringstream in(spec);
  if (!(in >> x >> comma >> y) || comma != ',' || !in.eof() || !(y > 0)) {
    throw ValidationError("expected x,y with y > 0, got '" + spec + "'");
  }
  return {x, y};
}

void emit(const Table& table, const Common& c) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) throw ValidationError("cannot open '" + c.out + "' for writing");
    out = &file;
  }
  if (c.format == "json") {
    *out << to_json(table) << '\n';
  } else {
    write_csv(*out, table);
  }
}

RankOneGroup group_of(const Common& c) { return parse_group(c.group, c.rho_prime); }

void add_common(CLI::App* cmd, Common& c, bool with_group = true) {
  if (with_group) {
    cmd->add_option("--group", c.group, "so:n | su:n | sp:n | f4 | custom:n1,n2")->capture_default_str();
    cmd->add_option("--rho-prime", c.rho_prime, "edge of the complementary series");
  }
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--threads", c.threads, "worker cap (default: RANKONE_THREADS or hardware)");
  cmd->add_option("--out", c.out, "output file (default: stdout)");
  cmd->add_option("--seed", c.seed, "master seed")->capture_default_str();
}

struct Range {
  double t_min = 0.0;
  double t_max = 10.0;
  int steps = 100;
};

void add_range(CLI::App* cmd, Range& r) {
  cmd->add_option("--t-min", r.t_min)->capture_default_str();
  cmd->add_option("--t-max", r.t_max)->capture_default_str();
  cmd->add_option("--steps", r.steps)->capture_default_str();
}

int run_sphfn(const Common& c, const std::string& param_spec, const Range& r) {
  const auto g = group_of(c);
  const auto p = parse_param(param_spec);
  p.validate(g);
  const double s = p.re_s(g);
  double c_s = kNaN;
  if (p.series() == Series::trivial) c_s = 1.0;
  if (p.series() == Series::complementary) c_s = hc_c_function(g, p).c.real();
  Table t{header(), {"t", "phi", "envelope_01", "ratio_02"}, {}};
  for (double x : linspace(r.t_min, r.t_max, r.steps)) {
    const double v = phi(g, p, x);
    t.add_row({x, v, envelope_01(g, p, x), v * std::exp((g.rho() - s) * x) / c_s});
  }
  emit(t, c);
  return 0;
}

int run_psi(const Common& c, const std::string& param_spec, const Range& r, bool lipschitz,
            std::optional<double> bound_r) {
  const auto g = group_of(c);
  const auto p = parse_param(param_spec);
  p.validate(g);
  const double s = p.re_s(g);
  const double r_exp = bound_r.value_or(s);
  if (bound_r && s > *bound_r) throw ValidationError("parameter lies outside the spectral gap r");
  const auto ts = linspace(r.t_min, r.t_max, r.steps);
  const auto values = psi_values(g, p, ts);
  Table t{header(), {"t", "psi", "psi_times_envelope", "bound_ratio"}, {}};
  if (lipschitz) {
    t.columns.push_back("lipschitz_difference");
    t.columns.push_back("lipschitz_bound");
  }
  const double eps = ts.size() > 1 ? std::min(0.5, ts[1] - ts[0]) : 0.1;
  bool violated = false;
  double sup = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double x = ts[i];
    const double v = values[i];
    const double ratio = x > 0 ? std::abs(v) * std::exp((g.rho() - r_exp) * x) / x : kNaN;
    if (x >= 1.0 && std::isfinite(ratio)) sup = std::max(sup, ratio);
    std::vector<double> row{x, v, v * std::exp((g.rho() - s) * x), ratio};
    if (lipschitz) {
      if (x >= 1.0) {
        const auto chk = psi_lipschitz_check(g, p, x, eps);
        violated = violated || chk.slack() < -1e-9;
        row.push_back(chk.difference);
        row.push_back(chk.bound);
      } else {
        row.push_back(kNaN);
        row.push_back(kNaN);
      }
    }
    t.add_row(std::move(row));
  }
  emit(t, c);
  if (bound_r) std::cerr << "sup_{t>=1} |psi| e^{(rho-r)t} / t = " << format_double(sup) << '\n';
  if (violated) {
    std::cerr << "Lipschitz bound violated\n";
    return 2;
  }
  return 0;
}

int run_volume(const Common& c, double t) {
  const auto g = group_of(c);
  if (!(t >= 0)) throw ValidationError("--t must be non-negative");
  const double v = ball_volume(g, t);
  if (c.format == "json") {
    nlohmann::json j{{"group", g.name()}, {"t", t}, {"volume", v}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << format_double(v) << '\n';
  }
  return 0;
}

int run_simulate(const Common& c, const std::string& spec_path, double t_min, double t_max, double step) {
  const auto cfg = load_spectrum_config(spec_path);
  if (!(step > 0) || !(t_max >= t_min) || t_min < 1.0) throw ValidationError("need 1 <= t-min <= t-max and step > 0");
  std::vector<double> ts;
  const auto n = static_cast<long>(std::floor((t_max - t_min) / step + 1e-9));
  for (long i = 0; i <= n; ++i) ts.push_back(t_min + static_cast<double>(i) * step);
  const auto rep = mean_decay_report(cfg.spectrum, cfg.f, ts);
  std::vector<double> dist(ts.size(), kNaN);
  try {
    dist = direction_convergence(cfg.spectrum, cfg.f, ts);
  } catch (const ValidationError&) {
  }
  Table t{header(), {"t", "deviation", "envelope", "ratio", "direction_distance"}, {}};
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    t.add_row({row.t, row.deviation, row.envelope, row.ratio, dist[i]});
  }
  emit(t, c);
  std::cerr << "fitted exponent " << format_double(rep.fitted_exponent) << " +- "
            << format_double(rep.fitted_exponent_stderr) << ", sup ratio " << format_double(rep.sup_ratio)
            << '\n';
  return 0;
}

struct MCArgs {
  double t = 6.0;
  std::size_t samples = 1'000'000;
  std::string obs = "cusp:2.0";
  std::string base = "0.1,1.3";
  std::string append;
  std::string t_grid = "1:10:0.5";
};

MCOptions mc_options(const Common& c) {
  MCOptions o;
  o.threads = c.threads;
  return o;
}

int run_mc(const Common& c, const MCArgs& a) {
  const auto obs = Observable::parse(a.obs);
  const auto base = parse_point(a.base);
  if (!(a.t > 0) || a.samples == 0) throw ValidationError("need t > 0 and samples > 0");
  const VolumeProfile profile(make_group(GroupFamily::so, 2), a.t);
  const auto run = mc_average(profile, a.t, a.samples, obs, c.seed, base, mc_options(c));
  const double deviation = std::abs(run.estimate - obs.mean());
  if (c.format == "json") {
    nlohmann::json j{{"t", run.t},          {"samples", run.samples},   {"seed", run.seed},
                     {"observable", run.observable}, {"estimate", run.estimate},
                     {"stderr", run.standard_error}, {"mean", obs.mean()}, {"deviation", deviation}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "t=" << format_double(run.t) << " samples=" << run.samples << " seed=" << run.seed
              << " obs=" << run.observable << " estimate=" << format_double(run.estimate)
              << " stderr=" << format_double(run.standard_error) << " mean=" << format_double(obs.mean())
              << " deviation=" << format_double(deviation) << '\n';
  }
  if (!a.append.empty()) {
    const bool fresh = !std::ifstream(a.append).good();
    std::ofstream out(a.append, std::ios::app);
    if (!out) throw ValidationError("cannot open '" + a.append + "' for appending");
    if (fresh) out << "# " << header() << "\nt,samples,seed,estimate,stderr,deviation\n";
    out << format_double(run.t) << ',' << run.samples << ',' << run.seed << ',' << format_double(run.estimate)
        << ',' << format_double(run.standard_error) << ',' << format_double(deviation) << '\n';
  }
  return 0;
}

int run_mc_scan(const Common& c, const MCArgs& a) {
  const auto obs = Observable::parse(a.obs);
  const auto base = parse_point(a.base);
  const auto grid = parse_range(a.t_grid);
  if (grid.front() <= 0 || a.samples == 0) throw ValidationError("need positive radii and samples > 0");
  const VolumeProfile profile(make_group(GroupFamily::so, 2), grid.back());
  const auto rep = decay_scan(profile, grid, a.samples, obs, c.seed, base, mc_options(c));
  Table t{header(), {"t", "estimate", "stderr", "deviation", "envelope"}, {}};
  for (const auto& r : rep.rows) t.add_row({r.t, r.estimate, r.standard_error, r.deviation, r.envelope});
  emit(t, c);
  std::cerr << "C = " << format_double(rep.fitted_constant) << " (from " << rep.calibration_rows
            << " rows), exponent " << format_double(rep.fitted_exponent) << " +- "
            << format_double(rep.fitted_exponent_stderr) << '\n';
  return 0;
}

int run_grid(const Common& c, double delta, int m_max) {
  if (!(delta > 0) || m_max < 1) throw ValidationError("need delta > 0 and m-max >= 1");
  if (delta * m_max > 60.0) throw ValidationError("grid too large to materialise; lower delta * m-max");
  Table t{header(), {"t", "m"}, {}};
  for_each_time_grid_point(delta, m_max, [&](double x, int m) { t.add_row({x, double(m)}); });
  emit(t, c);
  return 0;
}

int run_verify(const Common& c, bool skip_mc) {
  const auto g = group_of(c);
  VerifyOptions opts;
  opts.threads = c.threads;
  opts.monte_carlo = !skip_mc;
  opts.on_result = [](const CriterionResult& r) {
    std::cout << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << ": " << r.detail << " ("
              << std::fixed << std::setprecision(2) << r.seconds << " s)" << std::defaultfloat << std::endl;
  };
  std::cout << "# " << header() << '\n';
  const auto results = run_verification(g, opts);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  g_invocation = invocation(argc, argv);
  CLI::App app{"Ball averages and spherical functions on rank-one groups"};
  app.set_version_flag("--version", RANKONE_VERSION);
  app.require_subcommand(1);

  Common c;
  Range range;
  std::string param = "trivial";

  auto* sphfn = app.add_subcommand("sphfn", "spherical function against its envelope");
  add_common(sphfn, c);
  sphfn->add_option("--param", param, "trivial | c:<s> | p:<lambda>")->required();
  add_range(sphfn, range);

  bool lipschitz = false;
  double bound_r = 0.0;
  auto* psi_cmd = app.add_subcommand("psi", "ball-averaged spherical function");
  add_common(psi_cmd, c);
  psi_cmd->add_option("--param", param)->required();
  add_range(psi_cmd, range);
  psi_cmd->add_flag("--check-lipschitz", lipschitz);
  auto* bound_opt = psi_cmd->add_option("--check-bound", bound_r, "spectral gap r");

  double vol_t = 0.0;
  auto* volume = app.add_subcommand("volume", "volume of the ball of radius t");
  add_common(volume, c);
  volume->add_option("--t", vol_t)->required();

  std::string spec_path;
  double sim_min = 1.0, sim_max = 40.0, sim_step = 0.1;
  auto* simulate = app.add_subcommand("simulate", "mean-ergodic deviation of a spectral model");
  add_common(simulate, c, false);
  simulate->add_option("--spec", spec_path, "spectrum config (JSON)")->required()->check(CLI::ExistingFile);
  simulate->add_option("--t-min", sim_min)->capture_default_str();
  simulate->add_option("--t-max", sim_max)->capture_default_str();
  simulate->add_option("--step", sim_step)->capture_default_str();

  MCArgs mca;
  auto* mc = app.add_subcommand("mc", "Monte Carlo ball average on the modular surface");
  add_common(mc, c, false);
  mc->add_option("--t", mca.t)->capture_default_str();
  mc->add_option("--samples", mca.samples)->capture_default_str();
  mc->add_option("--obs", mca.obs, "const | cusp:Y | disk:x,y,r")->capture_default_str();
  mc->add_option("--base", mca.base, "x,y")->capture_default_str();
  mc->add_option("--append", mca.append, "append a CSV row to this file");

  auto* scan = app.add_subcommand("mc-scan", "Monte Carlo decay scan");
  add_common(scan, c, false);
  scan->add_option("--t-grid", mca.t_grid, "a:b:step")->capture_default_str();
  scan->add_option("--samples", mca.samples)->capture_default_str();
  scan->add_option("--obs", mca.obs)->capture_default_str();
  scan->add_option("--base", mca.base)->capture_default_str();

  double delta = 0.5;
  int m_max = 10;
  auto* grid = app.add_subcommand("grid", "discrete time grid");
  add_common(grid, c, false);
  grid->add_option("--delta", delta)->capture_default_str();
  grid->add_option("--m-max", m_max)->capture_default_str();

  bool skip_mc = false;
  auto* verify = app.add_subcommand("verify", "acceptance suite");
  add_common(verify, c);
  verify->add_flag("--skip-mc", skip_mc, "omit the Monte Carlo criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (*sphfn) return run_sphfn(c, param, range);
    if (*psi_cmd) {
      return run_psi(c, param, range, lipschitz, *bound_opt ? std::optional<double>(bound_r) : std::nullopt);
    }
    if (*volume) return run_volume(c, vol_t);
    if (*simulate) return run_simulate(c, spec_path, sim_min, sim_max, sim_step);
    if (*mc) return run_mc(c, mca);
    if (*scan) return run_mc_scan(c, mca);
    if (*grid) return run_grid(c, delta, m_max);
    if (*verify) return run_verify(c, skip_mc);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
