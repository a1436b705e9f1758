#include "grt/gamma.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "grt/bounds.hpp"
#include "grt/metric.hpp"
#include "grt/tree.hpp"

using namespace grt;

namespace {

GammaEstimate comb_gamma(int n, const ScanConfig& cfg = {}) {
  return gamma(path_metric(build_comb(full_comb_teeth(n)).tree), cfg);
}

}  // namespace

TEST(Gamma, TwoToothCombIsExactlyTwo) {
  GammaEstimate est = comb_gamma(2);
  EXPECT_NEAR(est.midpoint(), 2.000000000, 1e-6);
  EXPECT_EQ(est.indicator, GammaIndicator::matrix_determinant_zero);
  EXPECT_LE(est.p_high, 2.0);
  EXPECT_LE(est.p_high - est.p_low, est.config.bisect_tolerance);
}

TEST(Gamma, ThreeToothComb) {
  // det(A_p) for this metric first vanishes near 1.7757, but the bordered
  // indicator vanishes earlier, and the star simplex around the degree-3
  // shaft vertex (a = its three neighbors, b = the vertex three times) has
  // gap 9 - 3*2^p < 0 for every p > log2(3), so the infimum tracks the
  // earlier zero.
  GammaEstimate est = comb_gamma(3);
  EXPECT_NEAR(est.midpoint(), 1.565814081, 1e-6);
  EXPECT_EQ(est.indicator, GammaIndicator::bordered_determinant_zero);
}

TEST(Gamma, FourToothComb) {
  EXPECT_NEAR(comb_gamma(4).midpoint(), 1.494625215, 1e-6);
}

TEST(Gamma, BinaryDepthFour) {
  GammaEstimate est = gamma(path_metric(build_complete_nary(2, 4)));
  EXPECT_NEAR(est.midpoint(), 1.2514, 1e-3);
}

TEST(Gamma, StarsMatchClosedForm) {
  for (int n = 2; n <= 8; ++n) {
    GammaEstimate est = gamma(path_metric(build_star(n)));
    EXPECT_NEAR(est.midpoint(), star_gamma_exact(n), 1e-6) << "n=" << n;
  }
}

TEST(Gamma, DegenerateSmallSpace) {
  ToothSet two;
  two.shaft_length = 2;
  GammaEstimate est = gamma(path_metric(build_comb(two).tree));
  EXPECT_EQ(est.indicator, GammaIndicator::degenerate_small_space);
  EXPECT_TRUE(std::isinf(est.p_low));
}

TEST(Gamma, NoneInRange) {
  ScanConfig cfg;
  cfg.p_max = 1.3;
  GammaEstimate est = comb_gamma(2, cfg);  // gamma(C_2) = 2, outside [1, 1.3]
  EXPECT_EQ(est.indicator, GammaIndicator::none_in_range);
  EXPECT_EQ(est.p_low, 1.0);
  EXPECT_EQ(est.p_high, 1.3);
}

TEST(Gamma, IndicatorZeroAtWindowStart) {
  ScanConfig cfg;
  cfg.p_min = 2.0;
  cfg.p_max = 2.5;
  GammaEstimate est = comb_gamma(2, cfg);  // det(A_2) = 0 exactly at p = 2
  EXPECT_EQ(est.indicator, GammaIndicator::matrix_determinant_zero);
  EXPECT_EQ(est.p_low, 2.0);
  EXPECT_EQ(est.p_high, 2.0);
}

TEST(Gamma, ScaleInvariance) {
  DistanceMatrix m = path_metric(build_comb(full_comb_teeth(5)).tree);
  GammaEstimate base = gamma(m);
  for (double lambda : {0.5, 3.0}) {
    GammaEstimate scaled = gamma(m.scaled(lambda));
    EXPECT_NEAR(scaled.midpoint(), base.midpoint(),
                base.config.bisect_tolerance);
    EXPECT_EQ(scaled.indicator, base.indicator);
  }
}

TEST(Gamma, TreesLandStrictlyInsideTheWindow) {
  // Any tree with >= 3 vertices: a 2-edge geodesic forces gamma <= 2, and
  // finite trees have gamma > 1.
  std::vector<DistanceMatrix> metrics;
  metrics.push_back(path_metric(build_comb(full_comb_teeth(6)).tree));
  metrics.push_back(path_metric(build_complete_nary(3, 2)));
  metrics.push_back(path_metric(build_star(4)));
  metrics.push_back(path_metric(build_ychain(2, 5)));
  metrics.push_back(path_metric(build_kregular_truncation(3, 3)));
  metrics.push_back(path_metric(build_sst({1, 1})));
  for (const DistanceMatrix& m : metrics) {
    GammaEstimate est = gamma(m);
    ASSERT_NE(est.indicator, GammaIndicator::none_in_range);
    EXPECT_LE(est.p_high, 2.0);
    EXPECT_GT(est.p_low, 1.0);
  }
}

TEST(Gamma, BoundsBracketNumericalValue) {
  for (int n : {2, 5, 9}) {
    const double g = comb_gamma(n).midpoint();
    EXPECT_LT(comb_lower_bound(n).value, g);
    EXPECT_LE(g, comb_upper_bound(n).value + 1e-9);
  }
  for (int m = 2; m <= 4; ++m) {
    const double g =
        gamma(path_metric(build_complete_nary(2, m))).midpoint();
    EXPECT_LT(generic_lower_bound((1ll << (m + 1)) - 1, m).value, g);
    if (m >= 3) EXPECT_LT(g, sst_upper_bound(DegreeSequence(m, 2), m).value);
    EXPECT_LT(g, comb_upper_bound(m).value);
  }
}

TEST(Gamma, ConfigEchoAndEvaluationCount) {
  ScanConfig cfg;
  cfg.grid_steps = 64;
  cfg.bisect_tolerance = 1e-7;
  GammaEstimate est = comb_gamma(4, cfg);
  EXPECT_EQ(est.config.grid_steps, 64);
  EXPECT_EQ(est.config.bisect_tolerance, 1e-7);
  EXPECT_GT(est.evaluations, 10);
  EXPECT_LE(est.p_high - est.p_low, 1e-7);
  EXPECT_NEAR(est.midpoint(), 1.494625215, 1e-5);
}

TEST(Gamma, RejectsBadConfig) {
  DistanceMatrix m = path_metric(build_star(3));
  ScanConfig bad;
  bad.p_min = 2.0;
  bad.p_max = 1.0;
  EXPECT_THROW(gamma(m, bad), Error);
  bad = {};
  bad.grid_steps = 4;
  EXPECT_THROW(gamma(m, bad), Error);
}
