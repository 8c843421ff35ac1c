#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "rankone/ball_average.hpp"
#include "rankone/error.hpp"
#include "rankone/monte_carlo.hpp"

using namespace rankone;

namespace {

const VolumeProfile& profile() {
  static const VolumeProfile p(make_group(GroupFamily::so, 2), 8.0);
  return p;
}

}  // namespace

TEST(MonteCarlo, ThreadCountDoesNotChangeResult) {
  MCOptions one, four;
  one.threads = 1;
  four.threads = 4;
  one.chunk_size = four.chunk_size = 1000;
  const auto a = mc_average(profile(), 3.0, 20'000, Observable::cusp(1.5), 9, {0.1, 1.3}, one);
  const auto b = mc_average(profile(), 3.0, 20'000, Observable::cusp(1.5), 9, {0.1, 1.3}, four);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.standard_error, b.standard_error);
  const auto c = mc_average(profile(), 3.0, 20'000, Observable::cusp(1.5), 10, {0.1, 1.3}, one);
  EXPECT_NE(a.estimate, c.estimate);
}

TEST(MonteCarlo, ConstantIsExact) {
  const auto r = mc_average(profile(), 5.0, 10'000, Observable::constant(), 1, {0.0, 1.0});
  EXPECT_EQ(r.estimate, 1.0);
  EXPECT_EQ(r.standard_error, 0.0);
}

TEST(MonteCarlo, SmallBallAroundBasePoint) {
  // A tiny ball around a point inside a disk observable stays inside it.
  const auto r = mc_average(profile(), 0.05, 5'000, Observable::disk({0.0, 2.0}, 0.2), 3, {0.0, 2.0});
  EXPECT_EQ(r.estimate, 1.0);
}

TEST(MonteCarlo, CartanSampleRadius) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const auto s = cartan_sample(profile(), 4.0, rng);
    EXPECT_GE(s.tau, 0.0);
    EXPECT_LE(s.tau, 4.0);
    EXPECT_NEAR(hyp_dist({0.0, 1.0}, s.g * HPoint{0.0, 1.0}), s.tau, 1e-9);
  }
}

TEST(MonteCarlo, RadialKolmogorovSmirnov) {
  const double n = 20'000;
  for (double t : {1.0, 5.0}) EXPECT_LT(radial_ks_statistic(profile(), t, 20'000, 5), 1.63 / std::sqrt(n));
}

TEST(MonteCarlo, SubstreamsDiffer) {
  EXPECT_NE(substream_seed(42, 0), substream_seed(42, 1));
  EXPECT_NE(substream_seed(42, 0), substream_seed(43, 0));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform01(rng);
    EXPECT_GT(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(MonteCarlo, ThreadResolution) {
  EXPECT_EQ(resolve_threads(3), 3u);
  setenv("RANKONE_THREADS", "2", 1);
  EXPECT_EQ(resolve_threads(0), 2u);
  EXPECT_EQ(resolve_threads(5), 5u);
  unsetenv("RANKONE_THREADS");
  EXPECT_GE(resolve_threads(0), 1u);
}

TEST(MonteCarlo, DecayScanShape) {
  const std::vector<double> grid{1.0, 2.0, 3.0, 4.0};
  const auto rep = decay_scan(profile(), grid, 20'000, Observable::cusp(2.0), 42, {0.1, 1.3});
  ASSERT_EQ(rep.rows.size(), 4u);
  EXPECT_EQ(rep.calibration_rows, 2u);
  for (const auto& r : rep.rows) {
    EXPECT_NEAR(r.envelope, rep.fitted_constant * r.t * std::exp(-r.t / 2), 1e-15);
  }
}

TEST(MonteCarlo, Validation) {
  EXPECT_THROW(mc_average(profile(), 9.0, 10, Observable::constant(), 1, {0, 1}), ValidationError);
  EXPECT_THROW(mc_average(profile(), 1.0, 10, Observable::constant(), 1, {0, -1}), ValidationError);
  const VolumeProfile h3(make_group(GroupFamily::so, 3), 3.0);
  EXPECT_THROW(mc_average(h3, 1.0, 10, Observable::constant(), 1, {0, 1}), ValidationError);
}
