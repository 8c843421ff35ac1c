#include "rankone/spectral_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rankone/ball_average.hpp"
#include "rankone/error.hpp"
#include "rankone/stats.hpp"

namespace rankone {

namespace {

double sum_squares(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

SpectralParam atom_param(const PuritySpectrum& spec, std::size_t j) {
  if (j == 0) return SpectralParam::trivial();
  return SpectralParam::complementary(spec.atoms[j]);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

double SpectralVector::norm() const {
  return std::sqrt(sum_squares(atom_norms) + sum_squares(omega_norms));
}

SpectralVector SpectralVector::scaled(double factor) const {
  SpectralVector out = *this;
  for (double& v : out.atom_norms) v *= std::abs(factor);
  for (double& v : out.omega_norms) v *= std::abs(factor);
  return out;
}

SpectralVector SpectralVector::from_weights(const PuritySpectrum& spec) {
  SpectralVector f;
  f.atom_norms.assign(spec.atoms.size(), 1.0);
  for (const auto& comp : spec.omega) f.omega_norms.push_back(std::sqrt(comp.weight));
  return f;
}

void validate_model(const PuritySpectrum& spec, const SpectralVector& f) {
  const PurityReport report = validate_purity(spec.group, spec);
  if (!report.ok()) {
    std::string msg = "spectrum violates purity:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw ValidationError(msg);
  }
  for (const auto& comp : spec.omega) comp.param.validate(spec.group);
  if (f.atom_norms.size() != spec.atoms.size()) {
    throw ValidationError("atom_norms must have one entry per atom");
  }
  if (f.omega_norms.size() != spec.omega.size()) {
    throw ValidationError("omega_norms must have one entry per omega component");
  }
  auto check = [](double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ValidationError("spectral vector entries must be finite and >= 0");
    }
  };
  std::for_each(f.atom_norms.begin(), f.atom_norms.end(), check);
  std::for_each(f.omega_norms.begin(), f.omega_norms.end(), check);
}

PsiTable tabulate_psi(const PuritySpectrum& spec, std::span<const double> ts,
                      const QuadratureOptions& opts) {
  PsiTable table;
  table.ts.assign(ts.begin(), ts.end());
  for (std::size_t j = 0; j < spec.atoms.size(); ++j) {
    table.atoms.push_back(psi_values(spec.group, atom_param(spec, j), ts, opts));
  }
  for (const auto& comp : spec.omega) {
    table.omega.push_back(psi_values(spec.group, comp.param, ts, opts));
  }
  return table;
}

AveragedVector apply_average(const PuritySpectrum& spec, const SpectralVector& f, double t) {
  validate_model(spec, f);
  if (!(t > 0.0)) throw ValidationError("averaging needs t > 0");
  const double ts[] = {t};
  const PsiTable table = tabulate_psi(spec, ts);
  AveragedVector out;
  for (std::size_t j = 0; j < spec.atoms.size(); ++j) {
    const double p = table.atoms[j][0];
    out.magnitude.atom_norms.push_back(std::abs(p) * f.atom_norms[j]);
    out.atom_signs.push_back(sign_of(p));
  }
  for (std::size_t i = 0; i < spec.omega.size(); ++i) {
    const double p = table.omega[i][0];
    out.magnitude.omega_norms.push_back(std::abs(p) * f.omega_norms[i]);
    out.omega_signs.push_back(sign_of(p));
  }
  return out;
}

std::vector<double> deviation_norms(const PuritySpectrum& spec, const SpectralVector& f,
                                    std::span<const double> ts) {
  validate_model(spec, f);
  for (double t : ts) {
    if (!(t > 0.0)) throw ValidationError("deviation needs t > 0");
  }
  std::vector<double> out(ts.size(), 0.0);
  for (std::size_t i = 0; i < spec.omega.size(); ++i) {
    if (f.omega_norms[i] == 0.0) continue;
    const auto values = psi_values(spec.group, spec.omega[i].param, ts);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const double c = values[k] * f.omega_norms[i];
      out[k] += c * c;
    }
  }
  for (double& v : out) v = std::sqrt(v);
  return out;
}

double deviation_norm(const PuritySpectrum& spec, const SpectralVector& f, double t) {
  const double ts[] = {t};
  return deviation_norms(spec, f, ts).front();
}

DecayReport mean_decay_report(const PuritySpectrum& spec, const SpectralVector& f,
                                std::span<const double> t_grid) {
  if (t_grid.empty()) throw ValidationError("decay report needs a nonempty grid");
  const auto devs = deviation_norms(spec, f, t_grid);
  const double gap = spec.group.rho() - spec.r;
  const double fnorm = f.norm();
  DecayReport report;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    DecayRow row;
    row.t = t_grid[k];
    row.deviation = devs[k];
    row.envelope = row.t * std::exp(-gap * row.t) * fnorm;
    row.ratio = row.envelope > 0.0 ? row.deviation / row.envelope : 0.0;
    report.sup_ratio = std::max(report.sup_ratio, row.ratio);
    if (row.deviation > 0.0) {
      xs.push_back(row.t);
      ys.push_back(std::log(row.deviation));
    }
    report.rows.push_back(row);
  }
  if (xs.size() >= 2) {
    const LinearFit fit = linear_fit(xs, ys);
    report.fitted_exponent = fit.slope;
    report.fitted_exponent_stderr = fit.slope_stderr;
  } else {
    report.fitted_exponent = nan();
    report.fitted_exponent_stderr = nan();
  }
  return report;
}

std::vector<double> direction_convergence(const PuritySpectrum& spec, const SpectralVector& f,
                                          std::span<const double> t_grid) {
  validate_model(spec, f);
  if (spec.atoms.size() < 2 || !(f.atom_norms[1] > 0.0)) {
    throw ValidationError("direction convergence needs atom s_1 with |P_1 f| > 0");
  }
  const PsiTable table = tabulate_psi(spec, t_grid);
  std::vector<double> out;
  out.reserve(t_grid.size());
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    const double lead = table.atoms[1][k] * f.atom_norms[1];
    double rest2 = 0.0;
    for (std::size_t j = 2; j < spec.atoms.size(); ++j) {
      const double c = table.atoms[j][k] * f.atom_norms[j];
      rest2 += c * c;
    }
    for (std::size_t i = 0; i < spec.omega.size(); ++i) {
      const double c = table.omega[i][k] * f.omega_norms[i];
      rest2 += c * c;
    }
    const double norm = std::sqrt(lead * lead + rest2);
    if (norm == 0.0) {
      out.push_back(0.0);
      continue;
    }
    // |v/|v| - e_1| with v_1 = lead; 1 - lead/norm written without cancellation.
    const double along = lead > 0.0 ? rest2 / (norm * (norm + lead)) : 1.0 - lead / norm;
    out.push_back(std::sqrt(along * along + rest2 / (norm * norm)));
  }
  return out;
}

DiscreteConstant discrete_constant(const PuritySpectrum& spec, const SpectralVector& f, double eps,
                                   int n_max) {
  if (!(eps > 0.0)) throw ValidationError("discrete constant needs eps > 0");
  if (n_max < 1) throw ValidationError("discrete constant needs N_max >= 1");
  std::vector<double> ns(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) ns[static_cast<std::size_t>(n - 1)] = n;
  const auto devs = deviation_norms(spec, f, ns);
  const double gap = spec.group.rho() - spec.r;
  const double fnorm = f.norm();

  DiscreteConstant out;
  double sum = 0.0;
  for (std::size_t k = 0; k < ns.size(); ++k) {
    const double n = ns[k];
    if (devs[k] > 0.0) {
      const double log_term = (-3.0 - 2.0 * eps) * std::log(n) + 2.0 * gap * n + 2.0 * std::log(devs[k]);
      sum += std::exp(log_term);
      if (fnorm > 0.0) {
        out.envelope_constant =
            std::max(out.envelope_constant, std::exp(std::log(devs[k]) - std::log(n) + gap * n) / fnorm);
      }
    }
    out.partial.push_back(std::sqrt(sum));
  }
  const double k2 = out.envelope_constant * out.envelope_constant * fnorm * fnorm;
  out.tail_bound = k2 * std::pow(static_cast<double>(n_max), -2.0 * eps) / (2.0 * eps);
  return out;
}

double subdivision_count(double delta, int m) { return std::floor(std::exp(delta * m / 2.0) + 1.0); }

void for_each_time_grid_point(double delta, int m_max,
                              const std::function<void(double, int)>& visit) {
  if (!(delta > 0.0)) throw ValidationError("time grid needs delta > 0");
  if (m_max < 1) throw ValidationError("time grid needs M_max >= 1");
  for (int m = 1; m <= m_max; ++m) {
    const double count = subdivision_count(delta, m);
    const auto n = static_cast<long long>(count);
    for (long long k = 0; k < n; ++k) visit(m + static_cast<double>(k) / count, m);
  }
  visit(m_max + 1.0, m_max + 1);
}

std::vector<double> time_grid(double delta, int m_max) {
  std::vector<double> grid;
  for_each_time_grid_point(delta, m_max, [&](double t, int) { grid.push_back(t); });
  return grid;
}

FiniteSumCheck finite_sum_check(double delta, int m_max, double enumerate_cap) {
  if (!(delta > 0.0)) throw ValidationError("finite sum check needs delta > 0");
  if (m_max < 1) throw ValidationError("finite sum check needs M_max >= 1");
  FiniteSumCheck out;
  out.delta = delta;
  auto g = [delta](double t) { return t * t * std::exp(-delta * t); };
  auto dg = [delta](double t) { return (2.0 * t - delta * t * t) * std::exp(-delta * t); };
  auto antiderivative = [delta](double t) {
    return -std::exp(-delta * t) * (t * t / delta + 2.0 * t / (delta * delta) + 2.0 / (delta * delta * delta));
  };
  double partial = 0.0;
  double dominating = 0.0;
  for (int m = 1; m <= m_max; ++m) {
    const double count = subdivision_count(delta, m);
    const double bound = (m + 1.0) * (m + 1.0) * std::exp(-delta * m);
    double interval_sum = 0.0;
    if (count <= enumerate_cap) {
      const auto n = static_cast<long long>(count);
      for (long long k = 0; k < n; ++k) {
        const double t = m + static_cast<double>(k) / count;
        const double term = g(t);
        ++out.enumerated_terms;
        if (term > bound) ++out.domination_violations;
        out.max_domination_ratio = std::max(out.max_domination_ratio, term / bound);
        interval_sum += term;
      }
    } else {
      // Euler-Maclaurin for sum_{k<count} g(m + k h), h = 1/count.
      const double h = 1.0 / count;
      const double a = m;
      const double b = m + 1.0;
      interval_sum = count * (antiderivative(b) - antiderivative(a)) + 0.5 * (g(a) - g(b)) +
                     h / 12.0 * (dg(b) - dg(a));
    }
    partial += interval_sum;
    dominating += count * bound;
    out.partial_sums.push_back(partial);
    out.dominating.push_back(dominating);
  }
  return out;
}

int cauchy_threshold(const FiniteSumCheck& check, double tol) {
  const int size = static_cast<int>(check.partial_sums.size());
  for (int m = 1; 2 * m <= size; ++m) {
    const double gap = std::abs(check.partial_sums[2 * m - 1] - check.partial_sums[m - 1]);
    if (gap < tol) return m;
  }
  return -1;
}

InterpolationStep interpolation_step(const PuritySpectrum& spec, const SpectralVector& f,
                                     double delta, double t) {
  validate_model(spec, f);
  if (!(t >= 1.0)) throw ValidationError("interpolation step needs t >= 1");
  if (!(delta > 0.0)) throw ValidationError("interpolation step needs delta > 0");
  const int m = static_cast<int>(std::floor(t));
  const double count = subdivision_count(delta, m);
  const double k = std::floor((t - m) * count);
  InterpolationStep step;
  step.t = t;
  step.t_n = m + k / count;
  step.spacing = 1.0 / count;

  const double ts[] = {step.t_n, t};
  const PsiTable table = tabulate_psi(spec, ts);
  double dev_grid = 0.0;
  double dev_t = 0.0;
  double increment = 0.0;
  for (std::size_t i = 0; i < spec.omega.size(); ++i) {
    const double w = f.omega_norms[i];
    dev_grid += std::pow(table.omega[i][0] * w, 2);
    dev_t += std::pow(table.omega[i][1] * w, 2);
    increment += std::pow((table.omega[i][1] - table.omega[i][0]) * w, 2);
  }
  for (std::size_t j = 0; j < spec.atoms.size(); ++j) {
    const double diff = std::abs(table.atoms[j][1] - table.atoms[j][0]) * f.atom_norms[j];
    increment += diff * diff;
    step.atom_increment += diff;
  }
  step.lhs = std::sqrt(dev_t);
  step.deviation_at_grid = std::sqrt(dev_grid);
  step.average_increment = std::sqrt(increment);
  return step;
}

}  // namespace rankone
