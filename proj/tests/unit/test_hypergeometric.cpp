#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "rankone/error.hpp"
#include "rankone/hypergeometric.hpp"

using namespace rankone;
using cd = std::complex<double>;

namespace {

struct Case {
  cd a, b;
  double c, x, want;
};

Hyp2f1Result full(cd a, cd b, double c, double x) { return hyp2f1_neg(a, b, c, x); }

void expect_rel(double got, double want, double rel) {
  EXPECT_LE(std::abs(got - want), rel * std::abs(want)) << got << " vs " << want;
}

}  // namespace

TEST(Hyp2f1, MpmathValues) {
  const Case cases[] = {
      {1.0, 0.5, 1.5, -1.0, 0.78539816339744830962},
      {1.0, 1.0, 2.0, -1.0, 0.69314718055994530942},
      {0.75, 0.25, 1.0, -0.3, 0.95142580308787769794},
      {0.75, 0.25, 1.0, -2.0, 0.80558773350325192898},
      {0.75, 0.25, 1.0, -50.0, 0.42854504199911370995},
      {{0.5, 1.5}, {0.5, -1.5}, 1.5, -0.4, 0.51450709194685563425},
      {{0.5, 1.5}, {0.5, -1.5}, 1.5, -2.5, -0.11469297562700923973},
      {{0.5, 1.5}, {0.5, -1.5}, 1.5, -1e4, -0.00061991584187364305302},
      {{1.75, 0.5}, {1.75, -0.5}, 2.5, -1e6, 3.3732673383630362959e-11},
      {2.2, 1.3, 3.0, -7.0, 0.11088012623827896855},
  };
  for (const auto& k : cases) expect_rel(full(k.a, k.b, k.c, k.x).value, k.want, 1e-12);
}

TEST(Hyp2f1, DegenerateConnection) {
  const auto r1 = full(2.0, 1.0, 2.5, -20.0);
  EXPECT_TRUE(r1.degenerate);
  expect_rel(r1.value, 0.066936801626912485766, 1e-10);
  const auto r2 = full(1.0, 1.0, 2.0, -20.0);
  EXPECT_TRUE(r2.degenerate);
  expect_rel(r2.value, 0.15222612188617114983, 1e-10);
  // log(1+z)/z closed form
  for (double z : {5.0, 50.0, 1e4}) expect_rel(full(1.0, 1.0, 2.0, -z).value, std::log1p(z) / z, 1e-10);
}

TEST(Hyp2f1, RegionSelection) {
  EXPECT_EQ(full(0.75, 0.25, 1.0, -0.3).region, Hyp2f1Region::series);
  EXPECT_EQ(full(0.75, 0.25, 1.0, -2.0).region, Hyp2f1Region::pfaff);
  EXPECT_EQ(full(0.75, 0.25, 1.0, -50.0).region, Hyp2f1Region::connection);
  EXPECT_EQ(full(-2.0, 0.5, 1.0, -50.0).region, Hyp2f1Region::terminating);
}

TEST(Hyp2f1, TerminatingPolynomial) {
  // 2F1(-2, b; c; x) = 1 - 2bx/c + b(b+1)x^2/(c(c+1))
  const double b = 0.7, c = 1.3;
  for (double x : {-0.1, -3.0, -400.0}) {
    const double want = 1 - 2 * b * x / c + b * (b + 1) * x * x / (c * (c + 1));
    expect_rel(full(-2.0, b, c, x).value, want, 1e-13);
  }
}

TEST(Hyp2f1, RegionOverlapAgreement) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ua(0.1, 3.0), uc(0.6, 4.0), ul(0.1, 4.0);
  for (int i = 0; i < 200; ++i) {
    const bool complex_pair = i % 2 == 1;
    const cd a = complex_pair ? cd(ua(rng), ul(rng)) : cd(ua(rng));
    const cd b = complex_pair ? std::conj(a) : cd(ua(rng) + 0.37);
    const double c = uc(rng);
    // series / pfaff overlap
    for (double x : {-0.3, -0.45}) {
      const double s = hyp2f1_route::series(a, b, c, x).real();
      const double p = hyp2f1_route::pfaff(a, b, c, x).real();
      EXPECT_LE(std::abs(s - p), 1e-11 * std::max(1.0, std::abs(s))) << a << b << c << x;
    }
    // pfaff / connection overlap
    for (double x : {-2.0, -3.0}) {
      const double p = hyp2f1_route::pfaff(a, b, c, x).real();
      const double k = hyp2f1_route::connection(a, b, c, 1.0 / (1.0 - x), std::log1p(-x)).real();
      EXPECT_LE(std::abs(p - k), 1e-11 * std::max(1.0, std::abs(p))) << a << b << c << x;
    }
  }
}

TEST(Hyp2f1, SwapSymmetry) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 3.0), ux(-1e3, 0.0);
  for (int i = 0; i < 100; ++i) {
    const double a = u(rng), b = u(rng) + 0.11, c = u(rng) + 0.5, x = ux(rng);
    const double ab = hyp2f1_neg(a, b, c, x);
    const double ba = hyp2f1_neg(b, a, c, x);
    EXPECT_LE(std::abs(ab - ba), 1e-12 * std::max(1e-300, std::abs(ab)) + 1e-300);
    const cd z{a, b};
    const double zz = full(z, std::conj(z), c, x).value;
    EXPECT_LE(std::abs(zz - full(std::conj(z), z, c, x).value), 1e-12 * std::abs(zz) + 1e-300);
  }
}

TEST(Hyp2f1, LargeArgumentDoesNotOverflow) {
  const auto r = hyp2f1_neg_sinh2({1.0, 0.5}, {1.0, -0.5}, 2.0, 300.0);
  EXPECT_TRUE(std::isfinite(r.value));
  EXPECT_EQ(r.region, Hyp2f1Region::connection);
}

TEST(Hyp2f1, Validation) {
  EXPECT_THROW(hyp2f1_neg(0.5, 0.5, 1.0, 0.2), ValidationError);
  EXPECT_THROW(hyp2f1_neg(0.5, 0.5, -1.0, -0.2), ValidationError);
  EXPECT_THROW(hyp2f1_neg(cd(0.5, 1.0), cd(0.5, 2.0), 1.0, -0.2), ValidationError);
}
