#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ksl/constants.hpp"

using namespace ksl;

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Admissible (n, q) with n in 2..6 and q strictly inside (1, critical).
Dimensions random_dims(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(2, 6);
  std::uniform_real_distribution<double> t(0.01, 0.99);
  const int nn = n(rng);
  const double crit = double(nn + 1) / (nn - 1);
  return {nn, 1 + (crit - 1) * t(rng)};
}

}  // namespace

TEST(SharpConstant, KnownValues) {
  EXPECT_NEAR(cs_bm({2, 2}), 1 - kSqrt3 / 4, 1e-15);
  EXPECT_NEAR(cs_bm({2, 2}), 0.566987298, 1e-9);
  EXPECT_NEAR(cs_bm({1, 1.5}), 0.25, 1e-15);
  EXPECT_NEAR(cs_bm({3, 1 + 1e-12}), 0.0, 1e-11);
  EXPECT_NEAR(cs_bm({2, 3}), 1.5, 1e-12);
}

TEST(SharpConstant, EqualsConjectureInDimensionOne) {
  for (double q : {1.1, 1.5, 2.0, 3.0, 5.0, 17.0}) EXPECT_NEAR(cs_bm({1, q}), (q - 1) / 2, 1e-12);
}

TEST(SharpConstant, RejectsInadmissible) {
  EXPECT_THROW(cs_bm({2, 1.0}), DomainError);
  EXPECT_THROW(cs_bm({2, 3.5}), DomainError);
  EXPECT_THROW(cs_bm({0, 2}), DomainError);
  EXPECT_THROW(cs_bm({2, std::nan("")}), DomainError);
}

TEST(SharpConstant, NotBelowConjecturedValue) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Dimensions d = random_dims(rng);
    const ConstantsReport r = constants_report(d);
    EXPECT_GT(r.c_s, 0);
    EXPECT_GE(r.c_s + 1e-12, r.c_conj);
    EXPECT_NEAR(r.lambda1_lower, (d.q - 1) / (2 * r.c_s), 1e-12 * r.lambda1_lower);
  }
}

TEST(RiemannianConstants, DirectArithmetic) {
  const auto a = riemannian_constants({2, 2});
  EXPECT_DOUBLE_EQ(a.raw, 0.25);
  EXPECT_DOUBLE_EQ(a.bridged, 0.75);
  const auto b = riemannian_constants({1, 3});
  EXPECT_DOUBLE_EQ(b.raw, 1.0);
  EXPECT_DOUBLE_EQ(b.bridged, 1.0);
  EXPECT_THROW(riemannian_constants({2, 0.5}), DomainError);
}

TEST(KInterval, KnownEndpoints) {
  const KInterval iv = k_interval({2, 2});
  EXPECT_NEAR(iv.k_lo, 2 - kSqrt3, 1e-14);
  EXPECT_NEAR(iv.k_hi, 2 + kSqrt3, 1e-14);
  const KInterval crit = k_interval({2, 3});
  EXPECT_NEAR(crit.k_lo, 1, 1e-12);
  EXPECT_NEAR(crit.k_hi, 1, 1e-12);
  const KInterval c = k_interval({3, 1.5});
  EXPECT_NEAR(c.k_lo * c.k_hi, 1, 1e-12);
  EXPECT_THROW(k_interval({1, 2}), DomainError);
}

TEST(KInterval, RoundedCriticalExponent) {
  for (int n = 2; n <= 9; ++n) {
    const Dimensions d{n, double(n + 1) / (n - 1)};
    EXPECT_NEAR(k_interval(d).k_lo, 1, 1e-6);
    EXPECT_NEAR(epsilon_max(d), 0, 1e-6);
    EXPECT_NEAR(section2_threshold(d), 1 / (2 * cs_bm(d)), 1e-10);
  }
}

TEST(KInterval, EndpointProductProperty) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Dimensions d = random_dims(rng);
    const KInterval iv = k_interval(d);
    ASSERT_LT(iv.k_lo, iv.k_hi);
    EXPECT_NEAR(iv.k_lo * iv.k_hi, 1, 1e-12);
    EXPECT_NEAR(k_lower_bound_eps0(d), iv.k_lo, 1e-12);
    EXPECT_NEAR(section2_threshold(d), 1 / (2 * cs_bm(d)), 1e-10);
  }
}

TEST(Lambda1Coefficient, Values) {
  EXPECT_NEAR(lambda1_coefficient({2, 2}, 2 - kSqrt3), 0, 1e-10);
  EXPECT_NEAR(lambda1_coefficient({2, 2}, 1), 4.0 / 13, 1e-14);
  EXPECT_LT(lambda1_coefficient({2, 2}, 10), 0);
  EXPECT_THROW(lambda1_coefficient({2, 2}, 0), DomainError);
  EXPECT_THROW(lambda1_coefficient({2, 2}, -1), DomainError);
}

TEST(GeneralConstant, Values) {
  EXPECT_NEAR(cs_general({2, 2}, 1, 1), 13.0 / 20, 1e-14);
  for (double l1 : {1.0, 2.0, 5.0}) EXPECT_NEAR(cs_general({2, 2}, 2 - kSqrt3, l1), cs_bm({2, 2}), 1e-10);
  EXPECT_THROW(cs_general({2, 2}, 5, 1), DomainError);
  EXPECT_THROW(cs_general({1, 2}, 1, 1), DomainError);
  EXPECT_NEAR(f_of_k({2, 2}, 1, 1), 10.0 / 13, 1e-14);
  EXPECT_NEAR(f_of_k({2, 2}, 2 - kSqrt3, 1), 2 / (4 - kSqrt3), 1e-12);
}

TEST(GeneralConstant, LeftEndpointIndependentOfLambda1) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> l1(1, 20);
  for (int i = 0; i < 200; ++i) {
    const Dimensions d = random_dims(rng);
    const double k = k_interval(d).k_lo;
    EXPECT_NEAR(cs_general(d, k, l1(rng)), cs_bm(d), 1e-10);
  }
}

TEST(OptimizeK, KnownOptimum) {
  const KOptimum o = optimize_k({2, 2}, 1);
  EXPECT_NEAR(o.k_star, 2 - kSqrt3, 1e-6);
  EXPECT_NEAR(o.lambda_threshold, 2 / (4 - kSqrt3), 1e-8);
  EXPECT_NEAR(optimize_k({2, 3}, 1).k_star, 1, 1e-9);
  EXPECT_THROW(optimize_k({1, 2}, 1), DomainError);
}

TEST(OptimizeK, MatchesDenseScan) {
  for (double l1 : {2.0, 5.0}) {
    const Dimensions d{2, 2};
    const KInterval iv = k_interval(d);
    double best = -INFINITY;
    for (int i = 0; i <= 200000; ++i) best = std::max(best, f_of_k(d, iv.k_lo + iv.width() * i / 200000, l1));
    const KOptimum o = optimize_k(d, l1);
    EXPECT_NEAR(o.lambda_threshold, best, 1e-6);
    EXPECT_TRUE(iv.contains(o.k_star));
  }
}

TEST(OptimizeK, NeverBelowSampledK) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> t(0, 1), l1(1, 6);
  for (int i = 0; i < 100; ++i) {
    const Dimensions d = random_dims(rng);
    const double lam = l1(rng);
    const KInterval iv = k_interval(d);
    const KOptimum o = optimize_k(d, lam);
    EXPECT_GE(o.lambda_threshold + 1e-12, f_of_k(d, iv.k_lo + iv.width() * t(rng), lam));
  }
}

TEST(EpsilonMax, Values) {
  EXPECT_NEAR(epsilon_max({2, 2}), (20 - 2 * std::sqrt(52.0)) / 4, 1e-12);
  EXPECT_NEAR(epsilon_max({2, 2}), 1.394449, 1e-6);
  EXPECT_NEAR(epsilon_max({2, 3}), 0, 1e-12);
  EXPECT_NEAR(epsilon_max({2, 1.0001}), 6, 1e-2);
  EXPECT_LT(epsilon_max({2, 1.0001}), 6);
  EXPECT_THROW(epsilon_max({1, 2}), DomainError);
}

TEST(Thresholds, Values) {
  EXPECT_NEAR(k_lower_bound_eps0({2, 2}), 2 - kSqrt3, 1e-12);
  EXPECT_NEAR(k_lower_bound_eps0({2, 3}), 1, 1e-12);
  EXPECT_NEAR(k_lower_bound_eps0({3, 1.5}), k_interval({3, 1.5}).k_lo, 1e-12);
  EXPECT_NEAR(section2_threshold({2, 2}), 0.8818539704, 1e-9);
  EXPECT_NEAR(section2_threshold({2, 3}), 1.0 / 3, 1e-12);
  EXPECT_THROW(section2_threshold({1, 2}), DomainError);
}

TEST(XBounds, Values) {
  const XBounds a = x_bounds({2, 2}, 1);
  EXPECT_NEAR(a.x_lo, 1, 1e-14);
  EXPECT_NEAR(a.x_hi, 13.0 / 9, 1e-14);
  const XBounds b = x_bounds({2, 2}, 2 - kSqrt3);
  EXPECT_NEAR(b.x_lo, b.x_hi, 1e-9);
  EXPECT_NEAR(b.x_lo, 0.755983, 1e-6);
  EXPECT_FALSE(x_bounds({2, 2}, 5).feasible());
}

TEST(LambdaBound, Values) {
  EXPECT_NEAR(lambda_bound_star3({2, 2}, 1, 13.0 / 9, 1), 10.0 / 13, 1e-14);
  EXPECT_NEAR(lambda_bound_star3({2, 2}, 1, 1, 1), 2.0 / 3, 1e-14);
  EXPECT_THROW(lambda_bound_star3({2, 2}, 1, 3, 1), DomainError);
}

TEST(LambdaBound, UpperEndMatchesF) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> t(0.05, 0.95), l1(1, 4);
  for (int i = 0; i < 100; ++i) {
    const Dimensions d = random_dims(rng);
    const KInterval iv = k_interval(d);
    const double k = iv.k_lo + iv.width() * t(rng), lam = l1(rng);
    const XBounds xb = x_bounds(d, k);
    EXPECT_NEAR(lambda_bound_star3(d, k, xb.x_hi, lam), f_of_k(d, k, lam),
                1e-10 * std::max(1.0, std::fabs(f_of_k(d, k, lam))));
  }
}
