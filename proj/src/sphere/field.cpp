#include "ksl/sphere/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ksl::sphere {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
}

Transform::Transform(int L, Mesh mesh) : L_(L), mesh_(std::move(mesh)), ntri_((L + 1) * (L + 2) / 2) {
  const int nlat = mesh_.nlat();
  plm_.assign(static_cast<std::size_t>(nlat) * ntri_, 0.0);
  dplm_.assign(static_cast<std::size_t>(nlat) * ntri_, 0.0);
  for (int i = 0; i < nlat; ++i) {
    const long double mu = mesh_.mu[i];
    const long double st = mesh_.sin_theta[i];
    double* p = &plm_[static_cast<std::size_t>(i) * ntri_];
    double* dp = &dplm_[static_cast<std::size_t>(i) * ntri_];
    long double pmm = 1 / std::sqrt(4 * std::numbers::pi_v<long double>);
    for (int m = 0; m <= L; ++m) {
      if (m > 0) pmm *= std::sqrt((2 * m + 1) / (2.0L * m)) * st;
      p[tri(m, m)] = static_cast<double>(pmm);
      if (m == L) break;
      long double prev = pmm;
      long double cur = std::sqrt(2 * m + 3.0L) * mu * pmm;
      p[tri(m + 1, m)] = static_cast<double>(cur);
      for (int l = m + 2; l <= L; ++l) {
        const long double ll = l, mm = m;
        const long double a = std::sqrt((4 * ll * ll - 1) / (ll * ll - mm * mm));
        const long double b =
            std::sqrt(((ll - 1) * (ll - 1) - mm * mm) / (4 * (ll - 1) * (ll - 1) - 1));
        const long double next = a * (mu * cur - b * prev);
        p[tri(l, m)] = static_cast<double>(next);
        prev = cur;
        cur = next;
      }
    }
    for (int m = 0; m <= L; ++m) {
      for (int l = m; l <= L; ++l) {
        const long double ll = l, mm = m;
        long double v = ll * mu * p[tri(l, m)];
        if (l > m)
          v -= std::sqrt((2 * ll + 1) * (ll * ll - mm * mm) / (2 * ll - 1)) * p[tri(l - 1, m)];
        dp[tri(l, m)] = static_cast<double>(v / st);
      }
    }
  }
  const int nphi = mesh_.nphi();
  cos_.resize(static_cast<std::size_t>(nphi) * (L + 1));
  sin_.resize(cos_.size());
  for (int j = 0; j < nphi; ++j)
    for (int m = 0; m <= L; ++m) {
      cos_[j * (L + 1) + m] = std::cos(m * mesh_.phi[j]);
      sin_[j * (L + 1) + m] = std::sin(m * mesh_.phi[j]);
    }
}

void Transform::latitude_sums(const std::vector<double>& coeffs, int i, bool derivative,
                              std::vector<double>& cos_part,
                              std::vector<double>& sin_part) const {
  for (int m = 0; m <= L_; ++m) {
    double c = 0, s = 0;
    for (int l = m; l <= L_; ++l) {
      const double pv = derivative ? dplm(i, l, m) : plm(i, l, m);
      c += coeffs[coeff_index(l, m)] * pv;
      if (m > 0) s += coeffs[coeff_index(l, -m)] * pv;
    }
    const double f = m > 0 ? kSqrt2 : 1.0;
    cos_part[m] = f * c;
    sin_part[m] = f * s;
  }
}

std::vector<double> Transform::synthesize(const std::vector<double>& coeffs) const {
  const int nlat = mesh_.nlat(), nphi = mesh_.nphi();
  std::vector<double> out(static_cast<std::size_t>(nlat) * nphi);
  std::vector<double> cp(L_ + 1), sp(L_ + 1);
  for (int i = 0; i < nlat; ++i) {
    latitude_sums(coeffs, i, false, cp, sp);
    for (int j = 0; j < nphi; ++j) {
      const double* cj = &cos_[j * (L_ + 1)];
      const double* sj = &sin_[j * (L_ + 1)];
      double v = 0;
      for (int m = 0; m <= L_; ++m) v += cp[m] * cj[m] + sp[m] * sj[m];
      out[i * nphi + j] = v;
    }
  }
  return out;
}

void Transform::synthesize_gradient(const std::vector<double>& coeffs,
                                    std::vector<double>& d_theta,
                                    std::vector<double>& d_phi) const {
  const int nlat = mesh_.nlat(), nphi = mesh_.nphi();
  d_theta.assign(static_cast<std::size_t>(nlat) * nphi, 0.0);
  d_phi.assign(d_theta.size(), 0.0);
  std::vector<double> cp(L_ + 1), sp(L_ + 1), cd(L_ + 1), sd(L_ + 1);
  for (int i = 0; i < nlat; ++i) {
    latitude_sums(coeffs, i, false, cp, sp);
    latitude_sums(coeffs, i, true, cd, sd);
    const double inv_sin = 1.0 / mesh_.sin_theta[i];
    for (int j = 0; j < nphi; ++j) {
      const double* cj = &cos_[j * (L_ + 1)];
      const double* sj = &sin_[j * (L_ + 1)];
      double t = 0, p = 0;
      for (int m = 0; m <= L_; ++m) {
        t += cd[m] * cj[m] + sd[m] * sj[m];
        p += m * (sp[m] * cj[m] - cp[m] * sj[m]);
      }
      d_theta[i * nphi + j] = t;
      d_phi[i * nphi + j] = p * inv_sin;
    }
  }
}

std::vector<double> Transform::analyze(const std::vector<double>& values) const {
  const int nlat = mesh_.nlat(), nphi = mesh_.nphi();
  if (static_cast<int>(values.size()) != nlat * nphi)
    throw std::invalid_argument("Transform::analyze: value count does not match the mesh");
  std::vector<double> out(coeff_count(L_), 0.0);
  std::vector<double> fc(L_ + 1), fs(L_ + 1);
  const double dphi = 2 * std::numbers::pi / nphi;
  for (int i = 0; i < nlat; ++i) {
    std::fill(fc.begin(), fc.end(), 0.0);
    std::fill(fs.begin(), fs.end(), 0.0);
    for (int j = 0; j < nphi; ++j) {
      const double v = values[i * nphi + j];
      const double* cj = &cos_[j * (L_ + 1)];
      const double* sj = &sin_[j * (L_ + 1)];
      for (int m = 0; m <= L_; ++m) {
        fc[m] += v * cj[m];
        fs[m] += v * sj[m];
      }
    }
    const double w = mesh_.lat_weight[i] * dphi;
    for (int m = 0; m <= L_; ++m) {
      const double f = (m > 0 ? kSqrt2 : 1.0) * w;
      for (int l = m; l <= L_; ++l) {
        const double pv = plm(i, l, m) * f;
        out[coeff_index(l, m)] += pv * fc[m];
        if (m > 0) out[coeff_index(l, -m)] += pv * fs[m];
      }
    }
  }
  return out;
}

Sphere::Sphere(QuadratureGrid grid)
    : grid_(std::move(grid)), native_(grid_.L, grid_.native), fine_(grid_.L, grid_.fine) {}

std::shared_ptr<const Sphere> Sphere::create(int L, int oversample) {
  return std::shared_ptr<const Sphere>(new Sphere(make_grid(L, oversample)));
}

double Sphere::area() { return 4 * std::numbers::pi; }

SphereField::SphereField(SpherePtr sphere)
    : sphere_(std::move(sphere)), coeffs_(coeff_count(sphere_->band_limit()), 0.0) {}

SphereField SphereField::from_coefficients(SpherePtr sphere, std::vector<double> coeffs) {
  SphereField f(std::move(sphere));
  f.set_coeffs(std::move(coeffs));
  return f;
}

SphereField SphereField::constant(SpherePtr sphere, double c) {
  SphereField f(std::move(sphere));
  f.coeffs_[0] = c * std::sqrt(Sphere::area());
  return f;
}

SphereField SphereField::from_function(SpherePtr sphere,
                                       const std::function<double(double, double)>& fn) {
  const Mesh& mesh = sphere->fine().mesh();
  std::vector<double> values(mesh.size());
  for (int i = 0; i < mesh.nlat(); ++i)
    for (int j = 0; j < mesh.nphi(); ++j) values[i * mesh.nphi() + j] = fn(mesh.mu[i], mesh.phi[j]);
  return from_fine_values(std::move(sphere), values);
}

SphereField SphereField::from_native_values(SpherePtr sphere, const std::vector<double>& values) {
  auto c = sphere->native().analyze(values);
  return from_coefficients(std::move(sphere), std::move(c));
}

SphereField SphereField::from_fine_values(SpherePtr sphere, const std::vector<double>& values) {
  auto c = sphere->fine().analyze(values);
  return from_coefficients(std::move(sphere), std::move(c));
}

void SphereField::set_coeff(int l, int m, double v) {
  coeffs_[coeff_index(l, m)] = v;
  dirty_ = true;
}

void SphereField::set_coeffs(std::vector<double> c) {
  if (c.size() != coeffs_.size())
    throw std::invalid_argument("SphereField: coefficient count does not match the band limit");
  coeffs_ = std::move(c);
  dirty_ = true;
}

const std::vector<double>& SphereField::values() const {
  if (dirty_) {
    values_ = sphere_->native().synthesize(coeffs_);
    dirty_ = false;
  }
  return values_;
}

std::vector<double> SphereField::fine_values() const { return sphere_->fine().synthesize(coeffs_); }

double SphereField::mean() const { return coeffs_[0] / std::sqrt(Sphere::area()); }

double SphereField::quadrature_mean() const {
  return sphere_->native().mesh().average(values());
}

double SphereField::min_value() const {
  const auto& v = values();
  const auto f = fine_values();
  return std::min(*std::min_element(v.begin(), v.end()), *std::min_element(f.begin(), f.end()));
}

SphereField& SphereField::operator+=(const SphereField& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  dirty_ = true;
  return *this;
}

SphereField& SphereField::operator-=(const SphereField& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  dirty_ = true;
  return *this;
}

SphereField& SphereField::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  dirty_ = true;
  return *this;
}

}  // namespace ksl::sphere
