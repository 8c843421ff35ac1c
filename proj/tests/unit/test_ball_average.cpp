#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "rankone/ball_average.hpp"
#include "rankone/error.hpp"
#include "rankone/quadrature.hpp"

using namespace rankone;

namespace {

void expect_rel(double got, double want, double rel) {
  EXPECT_LE(std::abs(got - want), rel * std::abs(want)) << got << " vs " << want;
}

double h3_volume(double t) { return 0.5 * (std::sinh(t) * std::cosh(t) - t); }

}  // namespace

TEST(Quadrature, GaussLegendreIsExactOnPolynomials) {
  const auto r = integrate([](double x) { return std::pow(x, 39); }, 0.0, 1.0);
  expect_rel(r.value, 1.0 / 40.0, 1e-14);
  const auto e = integrate([](double x) { return std::exp(x); }, 0.0, 5.0);
  expect_rel(e.value, std::expm1(5.0), 1e-13);
}

TEST(Density, MatchesDefinition) {
  const RankOneGroup g(4, 3);
  for (double t : {0.1, 1.0, 3.0}) {
    expect_rel(delta(g, t), std::pow(std::sinh(t), 4) * std::pow(std::sinh(2 * t), 3), 1e-13);
    EXPECT_NEAR(log_delta(g, t), std::log(delta(g, t)), 1e-12);
    // d/dt log delta = n1 coth t + 2 n2 coth 2t
    expect_rel(delta_derivative(g, t), delta(g, t) * (4 / std::tanh(t) + 6 / std::tanh(2 * t)), 1e-13);
  }
}

TEST(BallVolume, MpmathValues) {
  expect_rel(ball_volume(make_group(GroupFamily::so, 3), 1.0), 0.40671510196175469192, 1e-12);
  expect_rel(ball_volume(RankOneGroup(1, 0), 1.0), 0.54308063481524377848, 1e-12);
  expect_rel(ball_volume(RankOneGroup(2, 1), 2.0), 86.515389369257008882, 1e-12);
  expect_rel(ball_volume(RankOneGroup(4, 3), 1.5), 1955.0906159117899725, 1e-12);
}

TEST(BallVolume, H3ClosedForm) {
  const auto g = make_group(GroupFamily::so, 3);
  for (double t = 0.1; t <= 30.0; t += 0.7) expect_rel(ball_volume(g, t), h3_volume(t), 1e-10);
  EXPECT_NEAR(std::exp(log_ball_volume(g, 200.0) - 400.0), 0.125, 1e-12);
}

TEST(BallVolume, ShellAndRegularity) {
  const auto g = make_group(GroupFamily::so, 3);
  const double t = 3.0, eps = 0.1;
  expect_rel(shell_fraction(g, t, eps), 1.0 - h3_volume(t) / h3_volume(t + eps), 1e-10);
  EXPECT_GT(volume_regularity(g, t, eps), 0.0);
}

TEST(VolumeProfile, InterpolationWithinBudget) {
  for (const auto& g : {make_group(GroupFamily::so, 2), make_group(GroupFamily::su, 2)}) {
    const VolumeProfile prof(g, 8.0);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 8.0);
    for (int i = 0; i < 200; ++i) {
      const double t = u(rng);
      const double exact = ball_volume(g, t);
      EXPECT_LE(std::abs(prof.volume(t) - exact), 1e-9 * exact + 1e-300) << "t=" << t;
    }
  }
}

TEST(VolumeProfile, InverseCdf) {
  const VolumeProfile prof(make_group(GroupFamily::so, 2), 10.0);
  for (double u : {0.0, 1e-6, 0.2, 0.5, 0.97, 1.0}) {
    const double tau = prof.inverse_cdf(u, 6.0);
    EXPECT_NEAR(prof.volume(tau) / prof.volume(6.0), u, 1e-11);
  }
  // SO(2,1): m(B_t) = cosh t - 1
  EXPECT_NEAR(prof.inverse_cdf(0.5, 6.0), std::acosh(1 + 0.5 * (std::cosh(6.0) - 1)), 1e-9);
  EXPECT_THROW(VolumeProfile(make_group(GroupFamily::so, 2), -1.0), ValidationError);
}

TEST(Psi, MpmathValues) {
  expect_rel(psi(RankOneGroup(2, 0), SpectralParam::complementary(0.5), 2.0).value, 0.7433570263076947367, 1e-10);
  expect_rel(psi(RankOneGroup(1, 0), SpectralParam::complementary(0.25), 3.0).value, 0.80958612074417620403, 1e-10);
  expect_rel(psi(RankOneGroup(2, 1), SpectralParam::complementary(0.7), 2.5).value, 0.19810006574592273768, 1e-10);
  expect_rel(psi(RankOneGroup(2, 0), SpectralParam::principal(1.0), 3.0).value, 0.11586721817127604019, 1e-10);
  expect_rel(psi(RankOneGroup(3, 0), SpectralParam::complementary(1.0), 4.0).value, 0.27403844133028602318, 1e-9);
}

TEST(Psi, TrivialIsExactlyOne) {
  EXPECT_EQ(psi(RankOneGroup(8, 7), SpectralParam::trivial(), 12.0).value, 1.0);
}

TEST(Psi, ValuesAgreeWithPointwise) {
  const auto g = make_group(GroupFamily::su, 3);
  const auto p = SpectralParam::principal(1.3);
  const std::vector<double> ts{5.0, 0.5, 2.0, 9.0};
  const auto v = psi_values(g, p, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) EXPECT_NEAR(v[i], psi(g, p, ts[i]).value, 1e-11);
}

TEST(Psi, H3ElementaryIntegral) {
  // psi = int sinh(su) sinh(u)/s du / int sinh^2
  const auto g = make_group(GroupFamily::so, 3);
  const double s = 0.5;
  for (double t : {1.0, 4.0, 15.0}) {
    const double num = (std::sinh((1 + s) * t) / (2 * (1 + s)) - std::sinh((1 - s) * t) / (2 * (1 - s))) / s;
    expect_rel(psi(g, SpectralParam::complementary(s), t).value, num / h3_volume(t), 1e-11);
  }
}

TEST(Psi, AsymptoticConstant) {
  const auto c = psi_asymptotic_constant(make_group(GroupFamily::so, 3), SpectralParam::complementary(0.5));
  expect_rel(c.numerical, 2.0 / (0.5 * 1.5), 1e-9);
  expect_rel(c.closed_form, 2.0 / (0.5 * 1.5), 1e-12);
  EXPECT_THROW(psi_asymptotic_constant(make_group(GroupFamily::so, 3), SpectralParam::principal(1.0)),
               ValidationError);
}

TEST(Psi, LipschitzAndBound) {
  const auto g = make_group(GroupFamily::so, 3);
  for (const auto& p : {SpectralParam::complementary(0.9), SpectralParam::principal(0.3)}) {
    for (double t : {1.0, 3.0, 8.0}) EXPECT_GE(psi_lipschitz_check(g, p, t, 0.2).slack(), -1e-9);
  }
  const std::vector<SpectralParam> omega{SpectralParam::complementary(0.4), SpectralParam::principal(1.0)};
  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(1.0 + 0.5 * i);
  const double c = psi_bound_check(g, omega, grid, 0.4);
  EXPECT_TRUE(std::isfinite(c));
  EXPECT_GT(c, 0.0);
  EXPECT_THROW(psi_bound_check(g, omega, grid, 0.3), ValidationError);
}
