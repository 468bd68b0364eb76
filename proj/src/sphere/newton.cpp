#include "ksl/sphere/newton.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "ksl/constants.hpp"
#include "ksl/sphere/lab.hpp"

namespace ksl::sphere {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

double sup_norm(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double eigen_of(std::size_t index) {
  const int l = static_cast<int>(std::sqrt(static_cast<double>(index)));
  return 0.5 * l * (l + 1);
}

class Problem {
 public:
  Problem(SpherePtr sphere, double lambda, double q)
      : sphere_(std::move(sphere)), lambda_(lambda), q_(q) {}

  std::vector<double> residual(const std::vector<double>& u) const {
    auto fv = sphere_->fine().synthesize(u);
    for (double& v : fv) v = std::pow(v, q_);
    const auto uq = sphere_->fine().analyze(fv);
    std::vector<double> r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = (eigen_of(i) + lambda_) * u[i] - uq[i];
    return r;
  }

  double residual_sup(const std::vector<double>& r) const {
    return sup_norm(sphere_->fine().synthesize(r));
  }

  bool positive(const std::vector<double>& u) const {
    const auto a = sphere_->native().synthesize(u);
    const auto b = sphere_->fine().synthesize(u);
    return *std::min_element(a.begin(), a.end()) > 0 && *std::min_element(b.begin(), b.end()) > 0;
  }

  LinearOperator jacobian(const std::vector<double>& u) const {
    auto w = sphere_->fine().synthesize(u);
    for (double& v : w) v = q_ * std::pow(v, q_ - 1);
    return [this, w = std::move(w)](const std::vector<double>& x) {
      auto fv = sphere_->fine().synthesize(x);
      for (std::size_t i = 0; i < fv.size(); ++i) fv[i] *= w[i];
      const auto p = sphere_->fine().analyze(fv);
      std::vector<double> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = (eigen_of(i) + lambda_) * x[i] - p[i];
      return y;
    };
  }

 private:
  SpherePtr sphere_;
  double lambda_, q_;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

GmresResult gmres(const LinearOperator& A, const std::vector<double>& b, double rel_tol,
                  int max_iters) {
  const std::size_t n = b.size();
  GmresResult res;
  res.x.assign(n, 0.0);
  const double beta = norm2(b);
  if (beta == 0) {
    res.converged = true;
    return res;
  }
  std::vector<std::vector<double>> V{b};
  for (double& v : V[0]) v /= beta;
  std::vector<std::vector<double>> H;  // columns of the Hessenberg matrix
  std::vector<double> cs, sn, g{beta};
  int k = 0;
  for (; k < max_iters; ++k) {
    std::vector<double> w = A(V[k]);
    std::vector<double> h(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) {
      h[i] = dot(w, V[i]);
      for (std::size_t j = 0; j < n; ++j) w[j] -= h[i] * V[i][j];
    }
    h[k + 1] = norm2(w);
    for (int i = 0; i < k; ++i) {
      const double t = cs[i] * h[i] + sn[i] * h[i + 1];
      h[i + 1] = -sn[i] * h[i] + cs[i] * h[i + 1];
      h[i] = t;
    }
    const double r = std::hypot(h[k], h[k + 1]);
    cs.push_back(h[k] / r);
    sn.push_back(h[k + 1] / r);
    const double hk1 = h[k + 1];
    h[k] = r;
    h[k + 1] = 0;
    g.push_back(-sn[k] * g[k]);
    g[k] *= cs[k];
    H.push_back(h);
    res.rel_residual = std::fabs(g[k + 1]) / beta;
    if (res.rel_residual <= rel_tol || hk1 == 0) {
      ++k;
      break;
    }
    for (double& x : w) x /= hk1;
    V.push_back(std::move(w));
  }
  std::vector<double> y(k, 0.0);
  for (int i = k - 1; i >= 0; --i) {
    double s = g[i];
    for (int j = i + 1; j < k; ++j) s -= H[j][i] * y[j];
    y[i] = s / H[i][i];
  }
  for (int i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) res.x[j] += y[i] * V[i][j];
  res.iterations = k;
  res.converged = res.rel_residual <= rel_tol;
  return res;
}

SolveReport newton_solve(double lambda, double q, const SphereField& u0, double tol,
                         int max_iters) {
  if (!(lambda > 0)) throw DomainError("newton_solve: lambda must be positive");
  if (!(q > 1)) throw DomainError("newton_solve: q must exceed 1");
  if (!(tol > 0)) throw DomainError("newton_solve: tol must be positive");
  if (!(u0.min_value() > 0)) throw DomainError("newton_solve: initial guess must be positive");

  const Problem prob(u0.sphere(), lambda, q);
  SolveReport rep;
  std::vector<double> u = u0.coeffs();
  std::vector<double> r = prob.residual(u);
  rep.residual = prob.residual_sup(r);
  constexpr int kMaxHalvings = 30;

  while (rep.residual >= tol) {
    if (rep.iterations >= max_iters) {
      rep.message = "no convergence after " + std::to_string(max_iters) + " iterations";
      break;
    }
    std::vector<double> rhs(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) rhs[i] = -r[i];
    const GmresResult lin =
        gmres(prob.jacobian(u), rhs, 1e-10, static_cast<int>(u.size()) + 10);
    const double rn = norm2(r);
    double alpha = 1;
    int halvings = 0;
    bool accepted = false;
    while (halvings <= kMaxHalvings) {
      std::vector<double> cand(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) cand[i] = u[i] + alpha * lin.x[i];
      if (prob.positive(cand)) {
        std::vector<double> rc = prob.residual(cand);
        const double sup = prob.residual_sup(rc);
        if (norm2(rc) <= (1 - 1e-4 * alpha) * rn || sup < tol) {
          u = std::move(cand);
          r = std::move(rc);
          rep.residual = sup;
          accepted = true;
          break;
        }
      }
      alpha /= 2;
      ++halvings;
    }
    rep.halvings += halvings;
    ++rep.iterations;
    if (!accepted) {
      rep.message = "step rejected after " + std::to_string(kMaxHalvings) + " halvings";
      break;
    }
  }

  rep.converged = rep.residual < tol;
  rep.coeffs = u;
  const SphereField sol = SphereField::from_coefficients(u0.sphere(), u);
  const double mean = sol.mean();
  auto fv = sol.fine_values();
  double dev = 0;
  for (double v : fv) dev = std::max(dev, std::fabs(v - mean));
  rep.is_constant = dev < 10 * tol;
  rep.constant_value = mean;
  rep.constant_error = std::fabs(mean - std::pow(lambda, 1 / (q - 1)));
  if (rep.converged)
    rep.message = rep.is_constant ? "constant solution " + fixed6(mean)
                                  : "nonconstant solution, mean " + fixed6(mean);
  return rep;
}

SphereField random_initial_guess(const SpherePtr& sphere, double lambda, double q,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> factor(0.6, 1.4);
  const double mean = std::pow(lambda, 1 / (q - 1)) * factor(rng);
  return random_positive_field(sphere, rng(), mean, 0.5);
}

}  // namespace ksl::sphere
