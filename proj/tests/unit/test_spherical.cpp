#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "rankone/error.hpp"
#include "rankone/spherical.hpp"

using namespace rankone;

namespace {

void expect_rel(double got, double want, double rel) {
  EXPECT_LE(std::abs(got - want), rel * std::abs(want)) << got << " vs " << want;
}

struct PhiCase {
  int n1, n2;
  SpectralParam p;
  double t, want;
};

}  // namespace

TEST(SphericalFn, MpmathValues) {
  const PhiCase cases[] = {
      {1, 0, SpectralParam::complementary(0.25), 3.0, 0.70837163308677320135},
      {2, 1, SpectralParam::complementary(0.7), 1.5, 0.43222793714807717046},
      {4, 3, SpectralParam::complementary(2.5), 6.0, 1.9401593779732176498e-6},
      {8, 7, SpectralParam::principal(2.0), 0.8, 0.096337420380974592723},
      {6, 1, SpectralParam::principal(1.0), 4.0, 7.1905655817993625337e-6},
      {1, 0, SpectralParam::principal(0.5), 10.0, -0.0078680890110719602118},
  };
  for (const auto& k : cases) expect_rel(phi(RankOneGroup(k.n1, k.n2), k.p, k.t), k.want, 1e-11);
}

TEST(SphericalFn, DegenerateFlagged) {
  const RankOneGroup g(3, 0);
  const auto v = spherical_fn(g, SpectralParam::complementary(1.0), 5.0);
  EXPECT_TRUE(v.degenerate);
  expect_rel(v.value, 0.13930861095843220308, 1e-10);
}

TEST(SphericalFn, H3ClosedForm) {
  const auto g = make_group(GroupFamily::so, 3);
  for (double s : {0.1, 0.35, 0.8, 1.0}) {
    for (double t : {0.01, 0.4, 2.0, 11.0, 25.0}) {
      const double want = std::sinh(s * t) / (s * std::sinh(t));
      EXPECT_NEAR(phi(g, SpectralParam::complementary(s), t), want, 1e-10);
    }
  }
  for (double l : {0.5, 1.0, 2.0, 7.0}) {
    for (double t : {0.01, 0.4, 2.0, 11.0, 25.0}) {
      EXPECT_NEAR(phi(g, SpectralParam::principal(l), t), std::sin(l * t) / (l * std::sinh(t)), 1e-10);
    }
  }
}

TEST(SphericalFn, TrivialAndOrigin) {
  const RankOneGroup g(4, 3);
  EXPECT_EQ(phi(g, SpectralParam::trivial(), 17.0), 1.0);
  EXPECT_EQ(phi(g, SpectralParam::principal(3.0), 0.0), 1.0);
  EXPECT_EQ(phi(g, SpectralParam::complementary(2.0), 0.0), 1.0);
}

TEST(SphericalFn, BoundedByOneProperty) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> n1(1, 12), n2(0, 7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const RankOneGroup g(n1(rng), n2(rng));
    const double t = 30.0 * u(rng);
    const auto p = i % 2 ? SpectralParam::principal(10.0 * u(rng))
                         : SpectralParam::complementary(std::max(1e-3, g.rho() * u(rng)));
    const double v = phi(g, p, t);
    EXPECT_LE(std::abs(v), 1.0 + 1e-12) << g.n1() << ',' << g.n2() << ' ' << p.to_string() << " t=" << t;
    if (p.series() == Series::complementary) EXPECT_GT(v, 0.0);
  }
}

TEST(SphericalFn, Validation) {
  const auto g = make_group(GroupFamily::so, 3);
  EXPECT_THROW(phi(g, SpectralParam::complementary(1.5), 1.0), ValidationError);
  EXPECT_THROW(phi(g, SpectralParam::principal(1.0), -1.0), ValidationError);
}

TEST(CFunction, MpmathAndClosedForm) {
  expect_rel(hc_c_function(make_group(GroupFamily::su, 2), SpectralParam::complementary(0.7)).c.real(),
             4.0246597613844072397, 1e-12);
  const auto h3 = make_group(GroupFamily::so, 3);
  for (double s : {0.1, 0.5, 0.9}) {
    expect_rel(hc_c_function(h3, SpectralParam::complementary(s)).c.real(), 1.0 / s, 1e-12);
  }
  EXPECT_NEAR(std::abs(hc_c_function(h3, SpectralParam::trivial()).c - 1.0), 0.0, 1e-13);
}

TEST(CFunction, AsymptoticConsistencyAcrossGroups) {
  for (const auto& g : {make_group(GroupFamily::su, 2), make_group(GroupFamily::sp, 2),
                        make_group(GroupFamily::f4, 0), RankOneGroup(5, 2)}) {
    for (double frac : {0.3, 0.7}) {
      const auto p = SpectralParam::complementary(frac * g.rho());
      const double s = frac * g.rho();
      const double t = 40.0 / std::min(1.0, s);
      expect_rel(phi(g, p, t) * std::exp((g.rho() - s) * t), hc_c_function(g, p).c.real(), 1e-8);
    }
  }
}

TEST(Envelope01, CertifiedConstants) {
  const auto g = make_group(GroupFamily::so, 3);
  std::vector<double> grid;
  for (int i = 0; i <= 400; ++i) grid.push_back(0.05 * i);
  const std::vector<SpectralParam> ps{SpectralParam::trivial(), SpectralParam::complementary(0.5),
                                      SpectralParam::principal(0.0)};
  const auto sup = certify_bound_01(g, ps, grid);
  EXPECT_EQ(sup[0], 1.0);
  // sinh(st)/(s sinh t) e^{(1-s)t}/(1+t) -> 1/s / (1+t), sup finite
  EXPECT_LT(sup[1], 2.0);
  // lambda = 0 limit t / sinh t, envelope e^{-t}(1+t)
  EXPECT_LE(sup[2], 2.0 + 1e-9);
  EXPECT_EQ(envelope_01(g, SpectralParam::complementary(0.5), 0.0), 1.0);
}
