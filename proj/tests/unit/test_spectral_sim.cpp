#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "rankone/ball_average.hpp"
#include "rankone/error.hpp"
#include "rankone/spectral_sim.hpp"
#include "rankone/verify.hpp"

using namespace rankone;

namespace {

PuritySpectrum reference() {
  return {make_group(GroupFamily::so, 3),
          {1.0, 0.7},
          0.4,
          {{SpectralParam::complementary(0.4), 1.0}, {SpectralParam::principal(1.0), 1.0}}};
}

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> v;
  for (double t = lo; t <= hi + 1e-9; t += step) v.push_back(t);
  return v;
}

}  // namespace

TEST(Purity, AcceptsReferenceAndRejectsViolations) {
  EXPECT_TRUE(validate_purity(reference().group, reference()).ok());
  auto bad = reference();
  bad.omega.push_back({SpectralParam::complementary(0.6), 1.0});
  EXPECT_FALSE(validate_purity(bad.group, bad).ok());
  auto atom_in_omega = reference();
  atom_in_omega.atoms = {0.3};
  EXPECT_FALSE(validate_purity(atom_in_omega.group, atom_in_omega).ok());
  EXPECT_THROW(validate_model(bad, SpectralVector::from_weights(bad)), ValidationError);
}

TEST(SpectralVector, NormAndDefaults) {
  const SpectralVector f{{3.0}, {4.0}};
  EXPECT_DOUBLE_EQ(f.norm(), 5.0);
  EXPECT_DOUBLE_EQ(f.scaled(2.0).norm(), 10.0);
  auto spec = reference();
  spec.omega[0].weight = 4.0;
  const auto d = SpectralVector::from_weights(spec);
  EXPECT_EQ(d.atom_norms, (std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(d.omega_norms, (std::vector<double>{2.0, 1.0}));
}

TEST(Average, DeviationIsPsiWeightedNorm) {
  const auto spec = reference();
  const SpectralVector f{{1.0, 2.0}, {0.5, 1.5}};
  const double t = 3.0;
  const auto& g = spec.group;
  const double b = psi(g, SpectralParam::complementary(0.7), t).value;
  const double c = psi(g, SpectralParam::complementary(0.4), t).value;
  const double d = psi(g, SpectralParam::principal(1.0), t).value;
  // atom main terms are subtracted; only Omega remains
  const double want = std::sqrt(0.25 * c * c + 2.25 * d * d);
  EXPECT_NEAR(deviation_norm(spec, f, t), want, 1e-11);
  const auto avg = apply_average(spec, f, t);
  EXPECT_NEAR(avg.magnitude.atom_norms[1], 2.0 * b, 1e-12);
}

TEST(Average, TrivialComponentIsFixed) {
  const auto spec = reference();
  const SpectralVector f{{5.0, 1.0}, {1.0, 1.0}};
  const auto avg = apply_average(spec, f, 4.0);
  EXPECT_EQ(avg.magnitude.atom_norms[0], 5.0);
  EXPECT_EQ(avg.atom_signs[0], 1);
  const SpectralVector g{{0.0, 3.0}, {1.0, 1.0}};
  EXPECT_NEAR(deviation_norm(spec, f, 4.0), deviation_norm(spec, g, 4.0), 1e-14);
}

TEST(MeanReport, EnvelopeAndExponent) {
  const auto rep = mean_decay_report(reference(), SpectralVector{{1, 1}, {1, 1}}, grid(1.0, 40.0, 0.1));
  EXPECT_TRUE(std::isfinite(rep.sup_ratio));
  EXPECT_NEAR(rep.fitted_exponent, -0.6, 0.05);
  for (const auto& r : rep.rows) EXPECT_LE(r.ratio, rep.sup_ratio);
}

TEST(Direction, ConvergesToLeadingAtom) {
  const auto d = direction_convergence(reference(), SpectralVector{{1, 1}, {1, 1}}, grid(10.0, 40.0, 10.0));
  EXPECT_LT(d.back(), 1e-3);
  EXPECT_LT(d.back(), d.front());
}

TEST(DiscreteConstant, FiniteWithTail) {
  const auto dc = discrete_constant(reference(), SpectralVector{{1, 1}, {1, 1}}, 0.1, 200);
  EXPECT_EQ(dc.partial.size(), 200u);
  for (std::size_t i = 1; i < dc.partial.size(); ++i) EXPECT_GE(dc.partial[i], dc.partial[i - 1]);
  EXPECT_TRUE(std::isfinite(dc.value()));
  EXPECT_GT(dc.tail_bound, 0.0);
}

TEST(TimeGrid, Example) {
  EXPECT_EQ(time_grid(0.5, 1), (std::vector<double>{1.0, 1.5, 2.0}));
  EXPECT_EQ(subdivision_count(0.5, 1), 2.0);
  EXPECT_EQ(subdivision_count(0.5, 10), std::floor(std::exp(2.5) + 1));
  const auto g = time_grid(0.5, 6);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_GT(g[i], g[i - 1]);
  EXPECT_EQ(g.front(), 1.0);
  EXPECT_EQ(g.back(), 7.0);
}

TEST(FiniteSum, DominationAndCauchy) {
  const auto small = finite_sum_check(0.5, 30, 1e9);
  EXPECT_EQ(small.domination_violations, 0u);
  EXPECT_LE(small.max_domination_ratio, 1.0);
  const auto wide = finite_sum_check(0.5, 2 * kCauchyThresholdHalf);
  const int m = cauchy_threshold(wide, 1e-6);
  EXPECT_GT(m, 0);
  EXPECT_EQ(m, kCauchyThresholdHalf);
  for (std::size_t i = 0; i < wide.partial_sums.size(); ++i) {
    EXPECT_LE(wide.partial_sums[i], wide.dominating[i] * (1 + 1e-12));
  }
}

TEST(FiniteSum, EulerMaclaurinMatchesEnumeration) {
  const auto exact = finite_sum_check(0.5, 40, 1e9);
  const auto fast = finite_sum_check(0.5, 40, 1000);
  for (std::size_t i = 0; i < exact.partial_sums.size(); ++i) {
    EXPECT_NEAR(fast.partial_sums[i], exact.partial_sums[i], 1e-10 * exact.partial_sums[i]);
  }
}

TEST(Interpolation, ChainHolds) {
  const auto spec = reference();
  const SpectralVector f{{1, 1}, {1, 1}};
  for (double t : {1.2, 3.7, 8.9, 15.3}) {
    const auto step = interpolation_step(spec, f, 0.5, t);
    EXPECT_LE(step.t_n, t);
    EXPECT_LE(step.lhs, step.rhs() + 1e-12);
  }
}
