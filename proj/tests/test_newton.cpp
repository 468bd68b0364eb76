#include <gtest/gtest.h>

#include <cmath>

#include "ksl/constants.hpp"
#include "ksl/sphere/lab.hpp"
#include "ksl/sphere/newton.hpp"

using namespace ksl::sphere;

namespace {

SpherePtr sphere16() {
  static const SpherePtr s = Sphere::create(16);
  return s;
}

double sup_deviation(const std::vector<double>& coeffs, double c) {
  const auto f = SphereField::from_coefficients(sphere16(), coeffs);
  double d = 0;
  for (double v : f.fine_values()) d = std::max(d, std::fabs(v - c));
  return d;
}

}  // namespace

TEST(Gmres, SolvesDiagonalSystem) {
  const LinearOperator A = [](const std::vector<double>& x) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = (i + 1.0) * x[i] + (i ? 0.1 * x[i - 1] : 0.0);
    return y;
  };
  const std::vector<double> b{1, 2, 3, 4, 5, 6};
  const GmresResult r = gmres(A, b, 1e-12, 20);
  ASSERT_TRUE(r.converged);
  const auto Ax = A(r.x);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_NEAR(Ax[i], b[i], 1e-10);
}

TEST(Gmres, ZeroRightHandSide) {
  const LinearOperator id = [](const std::vector<double>& x) { return x; };
  const GmresResult r = gmres(id, std::vector<double>(4, 0.0), 1e-10, 10);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 0);
}

TEST(Newton, SpecInitialGuess) {
  const auto S = sphere16();
  const SphereField u0 = SphereField::constant(S, 0.4) + z_field(S) * 0.1;
  const SolveReport r = newton_solve(0.4, 2, u0);
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(r.is_constant);
  EXPECT_LT(sup_deviation(r.coeffs, 0.4), 1e-8);
  EXPECT_EQ(r.message, "constant solution 0.400000");
}

TEST(Newton, ExactSolutionTakesNoSteps) {
  const SolveReport r = newton_solve(0.4, 2, SphereField::constant(sphere16(), 0.4));
  EXPECT_EQ(r.iterations, 0);
  EXPECT_LT(r.residual, 1e-14);  // transform round-off only
  EXPECT_TRUE(r.converged);
}

TEST(Newton, RandomGuessesBelowThreshold) {
  const auto S = sphere16();
  for (double lambda : {0.4, 0.9})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const SolveReport r = newton_solve(lambda, 2, random_initial_guess(S, lambda, 2, seed));
      EXPECT_TRUE(r.converged) << lambda << " " << seed << " " << r.message;
      EXPECT_LT(sup_deviation(r.coeffs, lambda), 1e-8) << lambda << " " << seed;
    }
}

TEST(Newton, OtherExponent) {
  const auto S = sphere16();
  const SolveReport r = newton_solve(0.5, 1.5, SphereField::constant(S, 0.3) + z_field(S) * 0.05);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.constant_value, std::pow(0.5, 2.0), 1e-8);
}

TEST(Newton, IterationCapIsReportedNotThrown) {
  const auto S = sphere16();
  const SolveReport r = newton_solve(0.4, 2, SphereField::constant(S, 0.4) + z_field(S) * 0.1, 1e-10, 1);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.message, "no convergence after 1 iterations");
}

TEST(Newton, InvalidArguments) {
  const auto S = sphere16();
  const SphereField one = SphereField::constant(S, 1);
  EXPECT_THROW(newton_solve(0, 2, one), ksl::DomainError);
  EXPECT_THROW(newton_solve(0.4, 1, one), ksl::DomainError);
  EXPECT_THROW(newton_solve(0.4, 2, one, 0), ksl::DomainError);
  EXPECT_THROW(newton_solve(0.4, 2, z_field(S)), ksl::DomainError);
}

TEST(Newton, InitialGuessIsPositiveAndSeeded) {
  const auto S = sphere16();
  const SphereField a = random_initial_guess(S, 0.9, 2, 3), b = random_initial_guess(S, 0.9, 2, 3);
  EXPECT_GT(a.min_value(), 0);
  EXPECT_EQ(a.coeffs(), b.coeffs());
  EXPECT_NE(a.coeffs(), random_initial_guess(S, 0.9, 2, 4).coeffs());
}
