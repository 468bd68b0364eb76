#pragma once

// Closed-form Sobolev constants, admissible k-intervals and eigenvalue
// thresholds for compact Kahler manifolds with Ric >= omega.
//
// Every routine is a pure function. Internally all closed forms are
// evaluated in long double and rounded to double on return.

#include <stdexcept>
#include <string>

namespace ksl {

/// Raised when an argument violates the admissible range of a formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Complex dimension n and exponent q. The real dimension is 2n.
struct Dimensions {
  int n = 1;
  double q = 2.0;

  int real_dim() const { return 2 * n; }

  /// (n+1)/(n-1) for n >= 2; +inf for n == 1.
  double critical_exponent() const;

  /// q sits exactly at the critical exponent (closed forms degenerate but
  /// stay finite).
  bool is_boundary() const;

  /// Throws DomainError unless n >= 1, 1 < q and, for n >= 2,
  /// q <= (n+1)/(n-1).
  void validate() const;
};

struct KInterval {
  double k_lo = 0.0;
  double k_hi = 0.0;

  bool contains(double k, double rel_tol = 1e-12) const;
  double width() const { return k_hi - k_lo; }
};

struct RiemannianConstants {
  double raw = 0.0;      // (q-1)/m for Ric >= (m-1) g
  double bridged = 0.0;  // (q-1)(m-1)/m for Ric >= g
};

struct ConstantsReport {
  double c_s = 0.0;
  double c_riem_raw = 0.0;
  double c_riem_bridged = 0.0;
  double c_conj = 0.0;
  double lambda1_lower = 0.0;
  bool boundary = false;
};

struct KOptimum {
  double k_star = 0.0;
  double lambda_threshold = 0.0;
};

struct XBounds {
  double x_lo = 0.0;
  double x_hi = 0.0;
  bool feasible() const { return x_lo <= x_hi; }
};

/// Kahler Sobolev constant
///   C_S = (q-1) (2n+q+2 - 2 sqrt((n+1)(n+1-(n-1)q))) / (2qn).
double cs_bm(const Dimensions& dims);

/// Bidaut-Veron--Veron constant and its rescaling to the Ric >= g
/// normalization.
RiemannianConstants riemannian_constants(const Dimensions& dims);

ConstantsReport constants_report(const Dimensions& dims);

/// Admissible k-range of the generalized constant; requires n >= 2.
KInterval k_interval(const Dimensions& dims);

/// Coefficient of lambda_1 in 1/C_{S,lambda_1,k}, up to the factor 2/(q-1).
double lambda1_coefficient(const Dimensions& dims, double k);

/// F(k): the eigenvalue threshold obtained for a fixed k.
double f_of_k(const Dimensions& dims, double k, double lambda1);

/// C_{S,lambda_1,k} = 1 / (2 F(k)).
double cs_general(const Dimensions& dims, double k, double lambda1);

/// Maximizes F over the closed k-interval: 10^4-point scan followed by a
/// golden-section polish around the best cell. Ties within 1e-9 resolve
/// to the smallest k.
KOptimum optimize_k(const Dimensions& dims, double lambda1);

/// Largest epsilon for which the discriminant in k stays nonnegative.
double epsilon_max(const Dimensions& dims);

/// Lower bound on k from the epsilon = 0 discriminant; coincides with
/// k_interval(dims).k_lo.
double k_lower_bound_eps0(const Dimensions& dims);

/// 1 / ((q-1)(1 + (n-1)/n * k_lo)), which equals 1/(2 C_S).
double section2_threshold(const Dimensions& dims);

/// Range of x = a/beta compatible with a vanishing quadratic coefficient
/// and a nonpositive Hessian coefficient.
XBounds x_bounds(const Dimensions& dims, double k);

/// Right side of the lambda lower bound for nonconstant solutions:
///   lambda_1/(q-1) + (1 - lambda_1 (1 + (n-1)k/n)) qn / (2(q-1)(n+1)x).
double lambda_bound_star3(const Dimensions& dims, double k, double x,
                          double lambda1);

}  // namespace ksl
