#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace rankone {

enum class GroupFamily { so, su, sp, f4, custom };

/// Rank-one simple Lie group described by the multiplicities of its restricted
/// roots. Everything the harmonic analysis needs (rho, Jacobi parameters, the
/// Haar density) is derived from (n1, n2).
class RankOneGroup {
 public:
  /// Throws ValidationError unless n1 >= 1, n2 >= 0 and 0 < rho_prime <= rho.
  /// A non-positive rho_prime selects the default rho_prime = rho.
  RankOneGroup(int n1, int n2, double rho_prime = 0.0, std::string name = {});

  int n1() const noexcept { return n1_; }
  int n2() const noexcept { return n2_; }
  double rho() const noexcept { return 0.5 * (n1_ + 2 * n2_); }
  double rho_prime() const noexcept { return rho_prime_; }
  double alpha() const noexcept { return 0.5 * (n1_ + n2_ - 1); }
  double beta() const noexcept { return 0.5 * (n2_ - 1); }
  const std::string& name() const noexcept { return name_; }

  /// Set when rho_prime was not supplied for a group whose complementary
  /// range is not known in closed form (everything except SO(n,1)).
  bool rho_prime_assumed() const noexcept { return rho_prime_assumed_; }

  RankOneGroup with_rho_prime(double rho_prime) const;

 private:
  int n1_;
  int n2_;
  double rho_prime_;
  std::string name_;
  bool rho_prime_assumed_ = false;

  friend RankOneGroup make_group(GroupFamily, int, int, double);
};

/// SO(n,1) -> (n-1, 0), SU(n,1) -> (2(n-1), 1), Sp(n,1) -> (4(n-1), 3),
/// F4(-20) -> (8, 7), custom -> (n, n2). `n` is ignored for F4.
RankOneGroup make_group(GroupFamily family, int n, int n2 = 0, double rho_prime = 0.0);

/// Parses `so:n`, `su:n`, `sp:n`, `f4`, `custom:n1,n2`.
RankOneGroup parse_group(std::string_view spec, double rho_prime = 0.0);

enum class Series { trivial, complementary, principal };

/// Point of the spherical dual {rho} u (0, rho'] u iR+.
class SpectralParam {
 public:
  static SpectralParam trivial() noexcept { return {Series::trivial, 0.0}; }
  /// Real parameter s; range against rho' is checked by validate().
  static SpectralParam complementary(double s);
  /// Imaginary parameter s = i*lambda, lambda >= 0.
  static SpectralParam principal(double lambda);

  Series series() const noexcept { return series_; }
  /// s for complementary, lambda for principal, 0 for trivial.
  double value() const noexcept { return value_; }

  double re_s(const RankOneGroup& g) const noexcept;
  std::complex<double> s(const RankOneGroup& g) const noexcept;

  /// Throws ValidationError if the parameter is outside the dual of `g`.
  void validate(const RankOneGroup& g) const;

  std::string to_string() const;

  friend bool operator==(const SpectralParam&, const SpectralParam&) = default;

 private:
  SpectralParam(Series series, double value) noexcept : series_(series), value_(value) {}
  Series series_;
  double value_;
};

/// Parses `trivial`, `c:<s>`, `p:<lambda>`.
SpectralParam parse_param(std::string_view spec);

struct OmegaComponent {
  SpectralParam param;
  double weight = 1.0;  // nu-mass of the component; metadata, see SpectralVector
};

/// Spherical spectrum of an action of purity type: atoms s_0 = rho > s_1 > ... > s_k > r
/// plus a remainder Omega inside (0, r] u iR+.
struct PuritySpectrum {
  RankOneGroup group;
  std::vector<double> atoms;
  double r = 0.0;
  std::vector<OmegaComponent> omega;
};

struct PurityReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Reports every violated inequality separately; never throws.
PurityReport validate_purity(const RankOneGroup& group, const PuritySpectrum& spectrum);

}  // namespace rankone
