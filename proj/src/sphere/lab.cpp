#include "ksl/sphere/lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ksl/constants.hpp"

namespace ksl::sphere {

namespace {

double eigen_of(int l) { return 0.5 * l * (l + 1); }

int degree_of(int index) { return static_cast<int>(std::sqrt(static_cast<double>(index))); }

std::vector<double> pointwise_grad_sq(const SphereField& f) {
  std::vector<double> dt, dp;
  f.sphere()->fine().synthesize_gradient(f.coeffs(), dt, dp);
  for (std::size_t i = 0; i < dt.size(); ++i) dt[i] = dt[i] * dt[i] + dp[i] * dp[i];
  return dt;
}

double fine_average(const SphereField& f, const std::vector<double>& values) {
  return f.sphere()->fine().mesh().average(values);
}

double abs_power_average(const std::vector<double>& values, const Mesh& mesh, double p) {
  std::vector<double> w(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) w[i] = std::pow(std::fabs(values[i]), p);
  return mesh.average(w);
}

void require_positive(const SphereField& u, const char* who) {
  if (!(u.min_value() > 0))
    throw DomainError(std::string(who) + ": u must be positive at every grid point");
}

void require_params(double lambda, double q, const char* who) {
  if (!(lambda > 0)) throw DomainError(std::string(who) + ": lambda must be positive");
  if (!(q > 1)) throw DomainError(std::string(who) + ": q must exceed 1");
}

}  // namespace

SphereField box_op(const SphereField& f) {
  std::vector<double> c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= -eigen_of(degree_of(static_cast<int>(i)));
  return SphereField::from_coefficients(f.sphere(), std::move(c));
}

double grad_energy(const SphereField& f) {
  double s = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) s += 2 * eigen_of(degree_of(static_cast<int>(i))) * c[i] * c[i];
  return s / Sphere::area();
}

double grad_energy_quadrature(const SphereField& f) {
  return fine_average(f, pointwise_grad_sq(f));
}

double inner(const SphereField& f, const SphereField& g) {
  double s = 0;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) s += f.coeffs()[i] * g.coeffs()[i];
  return s;
}

double inner_quadrature(const SphereField& f, const SphereField& g) {
  auto a = f.fine_values();
  const auto b = g.fine_values();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  return f.sphere()->fine().mesh().integrate(a);
}

double mean_square(const SphereField& f) { return inner_quadrature(f, f) / Sphere::area(); }

double self_adjointness_residual(const SphereField& f, const SphereField& g) {
  return std::fabs(inner_quadrature(box_op(f), g) - inner_quadrature(f, box_op(g)));
}

double energy_identity_residual(const SphereField& f) {
  const double dsq = 0.5 * grad_energy_quadrature(f) * Sphere::area();
  return std::fabs(dsq + inner_quadrature(f, box_op(f)));
}

double rayleigh_quotient(const SphereField& f) {
  return 0.5 * grad_energy_quadrature(f) / mean_square(f);
}

EigenEstimate measure_lambda1(const SpherePtr& sphere, std::uint64_t seed) {
  const int L = sphere->band_limit();
  const double sigma = eigen_of(L) + 1;
  std::vector<double> v = random_field(sphere, seed).coeffs();
  v[0] = 0;
  EigenEstimate est;
  double prev = 0;
  for (int it = 1; it <= 20000; ++it) {
    double norm = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] *= sigma - eigen_of(degree_of(static_cast<int>(i)));
      norm += v[i] * v[i];
    }
    v[0] = 0;
    norm = std::sqrt(norm);
    double num = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] /= norm;
      num += eigen_of(degree_of(static_cast<int>(i))) * v[i] * v[i];
    }
    est.iterations = it;
    if (std::fabs(num - prev) < 1e-15) break;
    prev = num;
  }
  est.lambda1 = rayleigh_quotient(SphereField::from_coefficients(sphere, v));
  return est;
}

IneqReport sobolev_check(const SphereField& phi, double q, double C, std::string trial) {
  if (!(q > 1)) throw DomainError("sobolev_check: q must exceed 1");
  if (!(C > 0)) throw DomainError("sobolev_check: C must be positive");
  if (std::all_of(phi.coeffs().begin(), phi.coeffs().end(), [](double c) { return c == 0; }))
    throw DomainError("sobolev_check: phi is identically zero");
  const Mesh& mesh = phi.sphere()->fine().mesh();
  const double moment = abs_power_average(phi.fine_values(), mesh, q + 1);
  IneqReport r;
  r.lhs = std::pow(moment, 2 / (q + 1));
  r.rhs = mean_square(phi) + C * grad_energy(phi);
  if (!std::isfinite(r.lhs) || !std::isfinite(r.rhs))
    throw DomainError("sobolev_check: non-finite value in the power integrals");
  r.margin = r.rhs - r.lhs;
  r.constant = C;
  r.q = q;
  r.trial = std::move(trial);
  return r;
}

PerturbationReport perturbation_tcoeff(const SphereField& f, double q, double C) {
  if (!(q > 1)) throw DomainError("perturbation_tcoeff: q must exceed 1");
  const SphereField minus_box = box_op(f) * -1.0;
  double scale = 0, defect = 0;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    scale = std::max(scale, std::fabs(f.coeffs()[i]));
    defect = std::max(defect, std::fabs(minus_box.coeffs()[i] - f.coeffs()[i]));
  }
  if (scale == 0 || defect > 1e-8 * std::max(1.0, scale))
    throw DomainError("perturbation_tcoeff: f is not a first eigenfunction of -box");
  if (std::fabs(f.quadrature_mean()) > 1e-8 * std::max(1.0, scale))
    throw DomainError("perturbation_tcoeff: f must have zero average");

  PerturbationReport r;
  r.mean_square = mean_square(f);
  r.lambda1 = rayleigh_quotient(f);
  r.lhs_t2 = q * r.mean_square;
  r.rhs_t2 = (2 * C * r.lambda1 + 1) * r.mean_square;

  const Mesh& mesh = f.sphere()->fine().mesh();
  const auto fv = f.fine_values();
  auto psi = [&](double t) {
    std::vector<double> w(fv.size());
    for (std::size_t i = 0; i < fv.size(); ++i) w[i] = 1 + t * fv[i];
    return std::pow(abs_power_average(w, mesh, q + 1), 2 / (q + 1));
  };
  const double h = 1e-3;
  const double p0 = psi(0);
  const double d1 = (psi(h) - 2 * p0 + psi(-h)) / (h * h);
  const double d2 = (psi(2 * h) - 2 * p0 + psi(-2 * h)) / (4 * h * h);
  r.numeric_t2 = 0.5 * (4 * d1 - d2) / 3;
  r.numeric_rel_error = std::fabs(r.numeric_t2 - r.lhs_t2) / std::fabs(r.lhs_t2);
  return r;
}

double quotient(const SphereField& u, double lambda, double q) {
  require_params(lambda, q, "quotient");
  require_positive(u, "quotient");
  const double grad = 0.5 * grad_energy(u) * Sphere::area();
  const double l2 = inner(u, u);
  const double m = abs_power_average(u.fine_values(), u.sphere()->fine().mesh(), q + 1) *
                   Sphere::area();
  return (grad + lambda * l2) / std::pow(m, 2 / (q + 1));
}

SphereField quotient_gradient(const SphereField& u, double lambda, double q) {
  require_params(lambda, q, "quotient_gradient");
  require_positive(u, "quotient_gradient");
  const auto& sphere = u.sphere();
  const Mesh& mesh = sphere->fine().mesh();
  auto fv = u.fine_values();
  const double m = abs_power_average(fv, mesh, q + 1) * Sphere::area();
  const double n = 0.5 * grad_energy(u) * Sphere::area() + lambda * inner(u, u);
  for (double& v : fv) v = std::pow(v, q);
  const std::vector<double> uq = sphere->fine().analyze(fv);
  const double scale = 2 * std::pow(m, -2 / (q + 1));
  std::vector<double> g(u.coeffs().size());
  for (std::size_t i = 0; i < g.size(); ++i)
    g[i] = scale * ((eigen_of(degree_of(static_cast<int>(i))) + lambda) * u.coeffs()[i] -
                    (n / m) * uq[i]);
  return SphereField::from_coefficients(sphere, std::move(g));
}

GradientCheck check_quotient_gradient(const SphereField& u, double lambda, double q,
                                      int directions, std::uint64_t seed) {
  const SphereField g = quotient_gradient(u, lambda, q);
  GradientCheck out;
  for (int d = 0; d < directions; ++d) {
    SphereField v = random_field(u.sphere(), seed + 7919 * (d + 1));
    v.set_coeff(0, 0, 0.3);
    const double h = 1e-4 * std::fabs(u.mean()) / std::max(1e-12, std::sqrt(mean_square(v)));
    auto central = [&](double step) {
      return (quotient(u + v * step, lambda, q) - quotient(u - v * step, lambda, q)) / (2 * step);
    };
    const double fd = (4 * central(h / 2) - central(h)) / 3;
    const double an = inner(g, v);
    const double rel = std::fabs(fd - an) / std::max(std::fabs(an), 1e-12);
    out.rel_errors.push_back(rel);
    out.max_rel_error = std::max(out.max_rel_error, rel);
  }
  return out;
}

SphereField random_field(const SpherePtr& sphere, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<double> c(coeff_count(sphere->band_limit()), 0.0);
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = nd(rng) / (1 + degree_of(static_cast<int>(i)));
  return SphereField::from_coefficients(sphere, std::move(c));
}

SphereField random_positive_field(const SpherePtr& sphere, std::uint64_t seed, double mean,
                                  double amplitude) {
  SphereField g = random_field(sphere, seed);
  const auto& nv = g.values();
  const auto fv = g.fine_values();
  double peak = 0;
  for (double v : nv) peak = std::max(peak, std::fabs(v));
  for (double v : fv) peak = std::max(peak, std::fabs(v));
  g *= mean * amplitude / peak;
  return SphereField::constant(sphere, mean) + g;
}

SphereField z_field(const SpherePtr& sphere) {
  SphereField z(sphere);
  z.set_coeff(1, 0, std::sqrt(Sphere::area() / 3));
  return z;
}

}  // namespace ksl::sphere
