#include "ksl/constants.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace ksl {
namespace {

using Real = long double;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

// Radicands that vanish at the critical exponent come out slightly negative
// once q has been rounded to double; below this scale they count as zero.
Real clamped_sqrt(Real r, Real scale) {
  const Real floor = 64 * std::numeric_limits<double>::epsilon() * scale;
  if (r < 0 && r > -floor) return 0;
  if (r < 0) throw DomainError("negative radicand " + fmt(double(r)));
  return std::sqrt(r);
}

void require_n_ge_2(const Dimensions& dims) {
  if (dims.n == 1)
    throw DomainError("interval unbounded at n = 1; use limit semantics");
  dims.validate();
}

void require_k_in_interval(const Dimensions& dims, double k) {
  const KInterval iv = k_interval(dims);
  if (!iv.contains(k))
    throw DomainError("k = " + fmt(k) + " outside the admissible interval [" +
                      fmt(iv.k_lo) + ", " + fmt(iv.k_hi) + "]");
}

Real lambda1_coefficient_ld(Real n, Real q, Real k) {
  const Real d = 4 * n * n + 4 * n + q;
  return 1 - (n + (n - 1) * k) * (k * n + n - 1) * q / (d * k);
}

Real f_of_k_ld(Real n, Real q, Real k, Real lambda1) {
  const Real d = 4 * n * n + 4 * n + q;
  const Real free_term = q * n * (k * n + n - 1) / (d * k);
  return (lambda1_coefficient_ld(n, q, k) * lambda1 + free_term) / (q - 1);
}

Real k_lower_bound_eps0_ld(Real n, Real q) {
  const Real np = n * n + n, nm = n * n - n;
  const Real root = clamped_sqrt(np * (np - nm * q), np * np);
  return (2 * n * n + 2 * n - q * nm - 2 * root) / (n * (n - 1) * q);
}

}  // namespace

double Dimensions::critical_exponent() const {
  if (n <= 1) return std::numeric_limits<double>::infinity();
  return double(n + 1) / double(n - 1);
}

bool Dimensions::is_boundary() const {
  if (n <= 1) return false;
  return std::abs(q - critical_exponent()) <= 1e-15 * critical_exponent();
}

void Dimensions::validate() const {
  if (n < 1) throw DomainError("complex dimension n must be >= 1, got " +
                               std::to_string(n));
  if (!(q > 1.0)) throw DomainError("exponent q must exceed 1, got " + fmt(q));
  if (n >= 2 && q > critical_exponent() && !is_boundary())
    throw DomainError("exponent q = " + fmt(q) + " exceeds (n+1)/(n-1) = " +
                      fmt(critical_exponent()));
}

bool KInterval::contains(double k, double rel_tol) const {
  const double slack = rel_tol * std::max(1.0, std::abs(k_hi));
  return k >= k_lo - slack && k <= k_hi + slack;
}

double cs_bm(const Dimensions& dims) {
  dims.validate();
  const Real n = dims.n, q = dims.q;
  const Real root = clamped_sqrt((n + 1) * (n + 1 - (n - 1) * q), (n + 1) * (n + 1));
  return double((q - 1) * (2 * n + q + 2 - 2 * root) / (2 * q * n));
}

RiemannianConstants riemannian_constants(const Dimensions& dims) {
  if (dims.n < 1) throw DomainError("real dimension m = 2n must be >= 2");
  const Real m = dims.real_dim(), q = dims.q;
  if (!(q > 1)) throw DomainError("exponent q must exceed 1, got " + fmt(dims.q));
  if (m > 2 && q > (m + 2) / (m - 2) + 1e-15L)
    throw DomainError("exponent q = " + fmt(dims.q) + " exceeds (m+2)/(m-2) = " +
                      fmt(double((m + 2) / (m - 2))));
  return {double((q - 1) / m), double((q - 1) * (m - 1) / m)};
}

ConstantsReport constants_report(const Dimensions& dims) {
  ConstantsReport r;
  r.c_s = cs_bm(dims);
  const RiemannianConstants riem = riemannian_constants(dims);
  r.c_riem_raw = riem.raw;
  r.c_riem_bridged = riem.bridged;
  r.c_conj = (dims.q - 1) / 2;
  r.lambda1_lower = double((Real(dims.q) - 1) / (2 * Real(r.c_s)));
  r.boundary = dims.is_boundary();
  return r;
}

KInterval k_interval(const Dimensions& dims) {
  require_n_ge_2(dims);
  const Real n = dims.n, q = dims.q;
  const Real s = 2 * (n + 1) / (q * (n - 1));
  const Real root = clamped_sqrt(((n + 1) - (n - 1) * q) / (n + 1), 1);
  return {double(s - s * root - 1), double(s + s * root - 1)};
}

double lambda1_coefficient(const Dimensions& dims, double k) {
  dims.validate();
  if (!(k > 0)) throw DomainError("k must be positive, got " + fmt(k));
  return double(lambda1_coefficient_ld(dims.n, dims.q, k));
}

double f_of_k(const Dimensions& dims, double k, double lambda1) {
  require_k_in_interval(dims, k);
  if (!(lambda1 >= 1.0))
    throw DomainError("lambda1 must be >= 1, got " + fmt(lambda1));
  return double(f_of_k_ld(dims.n, dims.q, k, lambda1));
}

double cs_general(const Dimensions& dims, double k, double lambda1) {
  require_k_in_interval(dims, k);
  if (!(lambda1 >= 1.0))
    throw DomainError("lambda1 must be >= 1, got " + fmt(lambda1));
  return double(1 / (2 * f_of_k_ld(dims.n, dims.q, k, lambda1)));
}

KOptimum optimize_k(const Dimensions& dims, double lambda1) {
  const KInterval iv = k_interval(dims);
  if (!(lambda1 >= 1.0))
    throw DomainError("lambda1 must be >= 1, got " + fmt(lambda1));
  const Real n = dims.n, q = dims.q, l1 = lambda1;
  const auto F = [&](Real k) { return f_of_k_ld(n, q, k, l1); };

  if (iv.k_hi <= iv.k_lo) return {iv.k_lo, double(F(iv.k_lo))};

  constexpr int kCells = 10000;
  constexpr Real kTie = 1e-9L;
  const Real lo = iv.k_lo, hi = iv.k_hi, h = (hi - lo) / kCells;
  std::vector<Real> values(kCells + 1);
  Real best = -std::numeric_limits<Real>::infinity();
  for (int i = 0; i <= kCells; ++i) {
    values[i] = F(i == kCells ? hi : lo + h * i);
    best = std::max(best, values[i]);
  }
  int idx = 0;
  while (values[idx] < best - kTie) ++idx;

  Real k_best = idx == kCells ? hi : lo + h * idx;
  Real f_best = values[idx];

  // Golden-section polish on the two cells around the grid winner.
  Real a = lo + h * std::max(0, idx - 1);
  Real b = idx + 1 >= kCells ? hi : lo + h * (idx + 1);
  const Real inv_phi = (std::sqrt(5.0L) - 1) / 2;
  Real c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  Real fc = F(c), fd = F(d);
  while (b - a > 1e-13L * std::max<Real>(1, std::abs(b))) {
    if (fc >= fd) {
      b = d; d = c; fd = fc;
      c = b - inv_phi * (b - a); fc = F(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + inv_phi * (b - a); fd = F(d);
    }
  }
  const Real k_polish = (a + b) / 2, f_polish = F(k_polish);
  if (f_polish > f_best) {
    k_best = k_polish;
    f_best = f_polish;
  }
  return {double(k_best), double(f_best)};
}

double epsilon_max(const Dimensions& dims) {
  require_n_ge_2(dims);
  const Real n = dims.n, q = dims.q;
  const Real root = std::sqrt(q * q + 4 * q * n * (n + 1));
  return double((4 * n * (n + 1) - 2 * q * (n - 1) - 2 * (n - 1) * root) /
                (n * (n - 1) * q));
}

double k_lower_bound_eps0(const Dimensions& dims) {
  require_n_ge_2(dims);
  return double(k_lower_bound_eps0_ld(dims.n, dims.q));
}

double section2_threshold(const Dimensions& dims) {
  require_n_ge_2(dims);
  const Real n = dims.n, q = dims.q;
  const Real k_lo = k_lower_bound_eps0_ld(n, q);
  return double(1 / ((q - 1) * (1 + (n - 1) / n * k_lo)));
}

XBounds x_bounds(const Dimensions& dims, double k) {
  require_n_ge_2(dims);
  if (!(k > 0)) throw DomainError("k must be positive, got " + fmt(k));
  const Real n = dims.n, q = dims.q, kk = k;
  const Real denom = kk * n + n - 1;
  if (!(denom > 0)) throw DomainError("kn + n - 1 must be positive");
  return {double((kk * n + n - kk) * q / (2 * (n + 1))),
          double((4 * n * n + 4 * n + q) * kk / (2 * (n + 1) * denom))};
}

double lambda_bound_star3(const Dimensions& dims, double k, double x,
                          double lambda1) {
  const XBounds xb = x_bounds(dims, k);
  const double slack = 1e-12 * std::max(1.0, std::abs(xb.x_hi));
  if (x < xb.x_lo - slack || x > xb.x_hi + slack)
    throw DomainError("x = " + fmt(x) + " outside [" + fmt(xb.x_lo) + ", " +
                      fmt(xb.x_hi) + "]");
  const Real n = dims.n, q = dims.q, kk = k, xx = x, l1 = lambda1;
  return double(l1 / (q - 1) +
                (1 - l1 * (1 + (n - 1) * kk / n)) * q * n /
                    (2 * (q - 1) * (n + 1) * xx));
}

}  // namespace ksl
