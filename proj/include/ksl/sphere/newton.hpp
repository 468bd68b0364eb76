#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ksl/sphere/field.hpp"

namespace ksl::sphere {

using LinearOperator = std::function<std::vector<double>(const std::vector<double>&)>;

struct GmresResult {
  std::vector<double> x;
  int iterations = 0;
  double rel_residual = 0.0;
  bool converged = false;
};

/// Unrestarted GMRES from x = 0 with modified Gram-Schmidt and Givens
/// rotations; stops when |b - A x| <= rel_tol |b|.
GmresResult gmres(const LinearOperator& A, const std::vector<double>& b, double rel_tol,
                  int max_iters);

struct SolveReport {
  bool converged = false;
  int iterations = 0;
  int halvings = 0;            // total step halvings over the run
  double residual = 0.0;       // sup norm on the fine mesh
  bool is_constant = false;
  double constant_value = 0.0;
  double constant_error = 0.0; // |constant - lambda^(1/(q-1))| when constant
  std::string message;
  std::vector<double> coeffs;  // final iterate
};

/// Newton iteration for -box u + lambda u = u^q in harmonic space. Each
/// step is damped by halving until the iterate stays positive and the
/// residual norm decreases; 30 consecutive halvings end the run.
SolveReport newton_solve(double lambda, double q, const SphereField& u0, double tol = 1e-10,
                         int max_iters = 50);

/// Smooth positive starting guess: lambda^(1/(q-1)) times a factor drawn
/// uniformly from [0.6, 1.4], plus a random band-limited perturbation of
/// half that size.
SphereField random_initial_guess(const SpherePtr& sphere, double lambda, double q,
                                 std::uint64_t seed);

}  // namespace ksl::sphere
