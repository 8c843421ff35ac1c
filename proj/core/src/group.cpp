#include "rankone/group.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "rankone/error.hpp"

namespace rankone {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError("invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

double parse_real(std::string_view text, std::string_view what) {
  std::string buf(text);
  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(value)) {
    throw ValidationError("invalid number for " + std::string(what) + ": '" + buf + "'");
  }
  return value;
}

}  // namespace

RankOneGroup::RankOneGroup(int n1, int n2, double rho_prime, std::string name)
    : n1_(n1), n2_(n2), rho_prime_(rho_prime), name_(std::move(name)) {
  if (n1_ < 1) throw ValidationError("rank-one group needs n1 >= 1");
  if (n2_ < 0) throw ValidationError("root multiplicity n2 must be >= 0");
  if (!(rho_prime_ > 0.0)) rho_prime_ = rho();
  if (rho_prime_ > rho()) {
    throw ValidationError("rho_prime must satisfy 0 < rho_prime <= rho");
  }
  if (name_.empty()) {
    name_ = "custom(" + std::to_string(n1_) + "," + std::to_string(n2_) + ")";
  }
}

RankOneGroup RankOneGroup::with_rho_prime(double rho_prime) const {
  RankOneGroup g(n1_, n2_, rho_prime, name_);
  g.rho_prime_assumed_ = rho_prime_assumed_ && !(rho_prime > 0.0);
  return g;
}

RankOneGroup make_group(GroupFamily family, int n, int n2, double rho_prime) {
  switch (family) {
    case GroupFamily::so: {
      if (n < 2) throw ValidationError("SO(n,1) needs n >= 2");
      return RankOneGroup(n - 1, 0, rho_prime, "SO(" + std::to_string(n) + ",1)");
    }
    case GroupFamily::su: {
      if (n < 2) throw ValidationError("SU(n,1) needs n >= 2");
      RankOneGroup g(2 * (n - 1), 1, rho_prime, "SU(" + std::to_string(n) + ",1)");
      g.rho_prime_assumed_ = !(rho_prime > 0.0);
      return g;
    }
    case GroupFamily::sp: {
      if (n < 2) throw ValidationError("Sp(n,1) needs n >= 2");
      RankOneGroup g(4 * (n - 1), 3, rho_prime, "Sp(" + std::to_string(n) + ",1)");
      g.rho_prime_assumed_ = !(rho_prime > 0.0);
      return g;
    }
    case GroupFamily::f4: {
      RankOneGroup g(8, 7, rho_prime, "F4(-20)");
      g.rho_prime_assumed_ = !(rho_prime > 0.0);
      return g;
    }
    case GroupFamily::custom: {
      RankOneGroup g(n, n2, rho_prime);
      g.rho_prime_assumed_ = !(rho_prime > 0.0);
      return g;
    }
  }
  throw ValidationError("unknown group family");
}

RankOneGroup parse_group(std::string_view spec, double rho_prime) {
  const auto colon = spec.find(':');
  const std::string_view family = spec.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (family == "f4") {
    if (!rest.empty()) throw ValidationError("group 'f4' takes no argument");
    return make_group(GroupFamily::f4, 0, 0, rho_prime);
  }
  if (rest.empty()) throw ValidationError("group spec needs an argument: '" + std::string(spec) + "'");
  if (family == "so") return make_group(GroupFamily::so, parse_int(rest, "n"), 0, rho_prime);
  if (family == "su") return make_group(GroupFamily::su, parse_int(rest, "n"), 0, rho_prime);
  if (family == "sp") return make_group(GroupFamily::sp, parse_int(rest, "n"), 0, rho_prime);
  if (family == "custom") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw ValidationError("custom group needs n1,n2");
    return make_group(GroupFamily::custom, parse_int(rest.substr(0, comma), "n1"),
                      parse_int(rest.substr(comma + 1), "n2"), rho_prime);
  }
  throw ValidationError("unknown group family '" + std::string(family) + "'");
}

SpectralParam SpectralParam::complementary(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw ValidationError("complementary parameter needs s > 0");
  }
  return {Series::complementary, s};
}

SpectralParam SpectralParam::principal(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("principal parameter needs lambda >= 0");
  }
  return {Series::principal, lambda};
}

double SpectralParam::re_s(const RankOneGroup& g) const noexcept {
  switch (series_) {
    case Series::trivial: return g.rho();
    case Series::complementary: return value_;
    case Series::principal: return 0.0;
  }
  return 0.0;
}

std::complex<double> SpectralParam::s(const RankOneGroup& g) const noexcept {
  if (series_ == Series::principal) return {0.0, value_};
  return {re_s(g), 0.0};
}

void SpectralParam::validate(const RankOneGroup& g) const {
  if (series_ == Series::complementary && value_ > g.rho_prime()) {
    std::ostringstream msg;
    msg << "complementary parameter s=" << value_ << " exceeds rho'=" << g.rho_prime();
    throw ValidationError(msg.str());
  }
}

std::string SpectralParam::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (series_) {
    case Series::trivial: return "trivial";
    case Series::complementary: out << "c:" << value_; break;
    case Series::principal: out << "p:" << value_; break;
  }
  return out.str();
}

SpectralParam parse_param(std::string_view spec) {
  if (spec == "trivial") return SpectralParam::trivial();
  if (spec.size() > 2 && spec[1] == ':') {
    const double v = parse_real(spec.substr(2), "spectral parameter");
    if (spec[0] == 'c') return SpectralParam::complementary(v);
    if (spec[0] == 'p') return SpectralParam::principal(v);
  }
  throw ValidationError("spectral parameter must be 'trivial', 'c:<s>' or 'p:<lambda>', got '" +
                        std::string(spec) + "'");
}

PurityReport validate_purity(const RankOneGroup& group, const PuritySpectrum& spectrum) {
  PurityReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  const auto& atoms = spectrum.atoms;
  const double rho = group.rho();

  if (!(spectrum.r > 0.0)) fail("r must be positive");
  if (atoms.empty()) {
    fail("atom list is empty; s_0 = rho is required");
  } else if (std::abs(atoms.front() - rho) > 1e-12 * rho) {
    fail("s_0 must equal rho");
  }
  for (std::size_t j = 1; j < atoms.size(); ++j) {
    if (!(atoms[j] < atoms[j - 1])) {
      fail("atoms must strictly decrease (s_" + std::to_string(j) + ")");
    }
    if (atoms[j] > group.rho_prime()) {
      fail("atom s_" + std::to_string(j) + " exceeds rho'");
    }
  }
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    if (!(atoms[j] > spectrum.r)) fail("atom s_" + std::to_string(j) + " must exceed r");
  }
  for (std::size_t i = 0; i < spectrum.omega.size(); ++i) {
    const auto& comp = spectrum.omega[i];
    const std::string tag = "omega[" + std::to_string(i) + "]";
    if (comp.param.series() == Series::trivial) {
      fail(tag + " is the trivial representation");
    } else if (comp.param.re_s(group) > spectrum.r) {
      fail(tag + " has Re s > r");
    }
    if (!(comp.weight >= 0.0) || !std::isfinite(comp.weight)) {
      fail(tag + " weight must be finite and >= 0");
    }
  }
  return report;
}

}  // namespace rankone
