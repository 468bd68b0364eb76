#pragma once

// Checks on CP^1 realized as the unit round sphere: Ric = omega,
// box = Delta/2, |d u|^2 = |grad u|^2 / 2, first eigenvalue of -box is 1.

#include <cstdint>
#include <string>
#include <vector>

#include "ksl/sphere/field.hpp"

namespace ksl::sphere {

/// Coefficient (l, m) multiplied by -l(l+1)/2.
SphereField box_op(const SphereField& f);

/// Average of |grad f|^2 from the coefficients.
double grad_energy(const SphereField& f);
/// Average of |grad f|^2 by quadrature of the pointwise gradient (fine mesh).
double grad_energy_quadrature(const SphereField& f);

/// Raw integral of f g from the coefficients, and by fine-mesh quadrature.
double inner(const SphereField& f, const SphereField& g);
double inner_quadrature(const SphereField& f, const SphereField& g);

/// Average of f^2 by fine-mesh quadrature.
double mean_square(const SphereField& f);

/// |int (box f) g - int f (box g)| by quadrature.
double self_adjointness_residual(const SphereField& f, const SphereField& g);
/// |int |d f|^2 + int f box f| by quadrature.
double energy_identity_residual(const SphereField& f);

/// (1/2) avg|grad f|^2 / avg f^2 with both averages by quadrature.
double rayleigh_quotient(const SphereField& f);

/// Power iteration for the largest eigenvalue of (sigma + box) on the
/// mean-zero subspace, reported as the Rayleigh quotient of the limit.
struct EigenEstimate {
  double lambda1 = 0.0;
  int iterations = 0;
};
EigenEstimate measure_lambda1(const SpherePtr& sphere, std::uint64_t seed);

struct IneqReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double constant = 0.0;
  double q = 0.0;
  std::string trial;
};

/// lhs = (avg |phi|^(q+1))^(2/(q+1)), rhs = avg phi^2 + C avg |grad phi|^2.
IneqReport sobolev_check(const SphereField& phi, double q, double C,
                         std::string trial = "");

struct PerturbationReport {
  double lhs_t2 = 0.0;      // q avg f^2
  double rhs_t2 = 0.0;      // (2 C lambda1 + 1) avg f^2
  double lambda1 = 0.0;     // Rayleigh quotient of f
  double mean_square = 0.0;
  double numeric_t2 = 0.0;  // psi''(0)/2 by finite differences
  double numeric_rel_error = 0.0;
};

/// t^2 coefficients of both sides of the inequality at phi = 1 + t f.
/// Throws DomainError unless -box f = f and avg f = 0 to 1e-8.
PerturbationReport perturbation_tcoeff(const SphereField& f, double q, double C);

/// (int |d u|^2 + lambda int u^2) / (int u^(q+1))^(2/(q+1)) with raw integrals.
double quotient(const SphereField& u, double lambda, double q);

/// First variation of the quotient, as a field G with <G, v> = dQ[v].
SphereField quotient_gradient(const SphereField& u, double lambda, double q);

struct GradientCheck {
  double max_rel_error = 0.0;
  std::vector<double> rel_errors;
};

/// Compares <G, v> with Richardson-extrapolated central differences of the
/// quotient along random band-limited directions.
GradientCheck check_quotient_gradient(const SphereField& u, double lambda, double q,
                                      int directions, std::uint64_t seed);

/// Gaussian coefficients with standard deviation 1/(1+l) for 1 <= l <= L.
SphereField random_field(const SpherePtr& sphere, std::uint64_t seed);

/// mean * (1 + amplitude * g / max|g|) for a random g: strictly positive
/// for amplitude < 1.
SphereField random_positive_field(const SpherePtr& sphere, std::uint64_t seed, double mean,
                                  double amplitude);

/// The coordinate function z = cos(theta).
SphereField z_field(const SpherePtr& sphere);

}  // namespace ksl::sphere
