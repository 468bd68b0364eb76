#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ksl/constants.hpp"
#include "ksl/sphere/lab.hpp"

using namespace ksl::sphere;

namespace {

const double kFourPi = 4 * std::numbers::pi;

SpherePtr sphere16() {
  static const SpherePtr s = Sphere::create(16);
  return s;
}

SphereField mode(const SpherePtr& s, int l, int m) {
  std::vector<double> c(coeff_count(s->band_limit()), 0.0);
  c[coeff_index(l, m)] = 1;
  return SphereField::from_coefficients(s, c);
}

}  // namespace

TEST(Grid, GaussLegendreWeights) {
  for (int count : {1, 2, 5, 17}) {
    const auto gl = gauss_legendre(count);
    double sum = 0;
    for (double w : gl.weights) sum += w;
    EXPECT_NEAR(sum, 2, 1e-14);
  }
}

TEST(Grid, AreaAndErrors) {
  const QuadratureGrid g = make_grid(8);
  EXPECT_NEAR(g.area(), kFourPi, 1e-13);
  EXPECT_THROW(make_grid(1), ksl::DomainError);
  EXPECT_THROW(make_grid(8, 0), ksl::DomainError);
}

TEST(Grid, ExactForPolynomialsOfDesignDegree) {
  const Mesh m = make_mesh(10);
  std::vector<double> f(m.size());
  for (int i = 0; i < m.nlat(); ++i)
    for (int j = 0; j < m.nphi(); ++j) f[i * m.nphi() + j] = std::pow(m.mu[i], 10);
  EXPECT_NEAR(m.average(f), 1.0 / 11, 1e-14);
}

TEST(Field, RoundTripAndMean) {
  const auto S = sphere16();
  const SphereField f = random_field(S, 3);
  const SphereField back = SphereField::from_native_values(S, f.values());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) EXPECT_NEAR(back.coeffs()[i], f.coeffs()[i], 1e-10);
  const SphereField g = f + SphereField::constant(S, 2.5);
  EXPECT_NEAR(g.mean(), 2.5, 1e-13);
  EXPECT_NEAR(g.quadrature_mean(), 2.5, 1e-12);
}

TEST(Field, AverageOfZSquared) { EXPECT_NEAR(mean_square(z_field(sphere16())), 1.0 / 3, 1e-12); }

TEST(Box, Eigenvalues) {
  const auto S = sphere16();
  EXPECT_NEAR(rayleigh_quotient(z_field(S)), 1, 1e-12);
  for (int l = 1; l <= 4; ++l)
    for (int m : {-l, 0, l}) {
      const SphereField f = mode(S, l, m);
      const SphereField bf = box_op(f);
      EXPECT_NEAR(bf.coeff(l, m), -0.5 * l * (l + 1), 1e-12);
    }
  const SphereField c = box_op(SphereField::constant(S, 3));
  for (double v : c.coeffs()) EXPECT_NEAR(v, 0, 1e-14);
  EXPECT_NEAR(rayleigh_quotient(mode(S, 2, 1)), 3, 1e-12);
}

TEST(Box, SelfAdjointAndEnergyIdentity) {
  const auto S = sphere16();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const SphereField f = random_field(S, seed), g = random_field(S, seed + 50);
    EXPECT_LT(self_adjointness_residual(f, g), 1e-10);
    EXPECT_LT(energy_identity_residual(f), 1e-10);
    EXPECT_NEAR(grad_energy(f), grad_energy_quadrature(f), 1e-10 * grad_energy(f));
    EXPECT_NEAR(inner(f, g), inner_quadrature(f, g), 1e-12);
  }
}

TEST(GradEnergy, Values) {
  const auto S = sphere16();
  EXPECT_NEAR(grad_energy(z_field(S)), 2.0 / 3, 1e-10);
  EXPECT_NEAR(grad_energy(SphereField::constant(S, 4)), 0, 1e-14);
}

TEST(Lambda1, MeasuredValue) {
  const EigenEstimate e = measure_lambda1(sphere16(), 7);
  EXPECT_NEAR(e.lambda1, 1, 1e-8);
  EXPECT_GT(e.iterations, 0);
}

TEST(Sobolev, ConstantsSaturate) {
  const IneqReport r = sobolev_check(SphereField::constant(sphere16(), 1.7), 2, 0.5);
  EXPECT_NEAR(r.lhs, 1.7 * 1.7, 1e-12);
  EXPECT_NEAR(r.rhs, 1.7 * 1.7, 1e-12);
  EXPECT_NEAR(r.margin, 0, 1e-12);
}

TEST(Sobolev, OnePlusZ) {
  const auto S = sphere16();
  const double c = ksl::cs_bm({1, 2});
  const IneqReport r = sobolev_check(SphereField::constant(S, 1) + z_field(S), 2, c);
  EXPECT_NEAR(r.lhs, std::cbrt(4.0), 1e-12);
  EXPECT_NEAR(r.rhs, 5.0 / 3, 1e-12);
  EXPECT_NEAR(r.margin, 0.079265, 1e-6);
}

TEST(Sobolev, RandomCorpusNonNegativeMargin) {
  const auto S = sphere16();
  const SphereField one = SphereField::constant(S, 1);
  for (int i = 0; i < 30; ++i) {
    const SphereField g = random_field(S, 500 + i);
    double peak = 0;
    for (double v : g.fine_values()) peak = std::max(peak, std::fabs(v));
    for (double t : {0.02, 0.3, 2.0})
      EXPECT_GE(sobolev_check(one + g * (t / peak), 2, 0.5).margin, -1e-9) << i << " " << t;
  }
}

TEST(Perturbation, EqualityCaseAndLargerConstant) {
  const auto S = sphere16();
  const auto p = perturbation_tcoeff(z_field(S), 2, 0.5);
  EXPECT_NEAR(p.lhs_t2, 2.0 / 3, 1e-8);
  EXPECT_NEAR(p.rhs_t2, 2.0 / 3, 1e-8);
  EXPECT_LT(p.numeric_rel_error, 1e-6);
  const auto w = perturbation_tcoeff(z_field(S), 2, 0.75);
  EXPECT_NEAR(w.rhs_t2, 5.0 / 6, 1e-8);
  EXPECT_NEAR(w.lhs_t2, 2.0 / 3, 1e-8);
  const auto near1 = perturbation_tcoeff(z_field(S), 1 + 1e-9, 0.5);
  EXPECT_NEAR(near1.lhs_t2, near1.mean_square, 1e-8);
}

TEST(Perturbation, RejectsNonEigenfunction) {
  const auto S = sphere16();
  EXPECT_THROW(perturbation_tcoeff(mode(S, 2, 0), 2, 0.5), ksl::DomainError);
  EXPECT_THROW(perturbation_tcoeff(z_field(S) + SphereField::constant(S, 1), 2, 0.5), ksl::DomainError);
}

TEST(Quotient, ConstantAndHomogeneity) {
  const auto S = sphere16();
  const SphereField one = SphereField::constant(S, 1);
  EXPECT_NEAR(quotient(one, 0.7, 2), 0.7 * std::pow(kFourPi, 1.0 / 3), 1e-12);
  const SphereField u = one + z_field(S) * 0.1;
  EXPECT_NEAR(quotient(u * 3.0, 1, 2), quotient(u, 1, 2), 1e-12);
  EXPECT_THROW(quotient(z_field(S), 1, 2), ksl::DomainError);
}

TEST(Quotient, ResolutionRefinement) {
  const auto coarse = Sphere::create(8), fine = Sphere::create(24);
  const auto f = [](double mu, double) { return 1 + 0.1 * mu; };
  EXPECT_NEAR(quotient(SphereField::from_function(coarse, f), 1, 2),
              quotient(SphereField::from_function(fine, f), 1, 2), 1e-8);
}

TEST(QuotientGradient, ZeroAtConstants) {
  const auto S = sphere16();
  const SphereField g = quotient_gradient(SphereField::constant(S, 2), 1, 2);
  for (double c : g.coeffs()) EXPECT_NEAR(c, 0, 1e-12);
}

TEST(QuotientGradient, FiniteDifferenceAgreement) {
  const auto S = sphere16();
  const SphereField u = SphereField::constant(S, 1) + z_field(S) * 0.1;
  EXPECT_LT(check_quotient_gradient(u, 1, 2, 5, 1).max_rel_error, 1e-6);
  for (std::uint64_t b = 0; b < 3; ++b)
    EXPECT_LT(check_quotient_gradient(random_positive_field(S, 30 + b, 1.0, 0.5), 1, 2, 5, 40 + b)
                  .max_rel_error,
              1e-6);
}
