#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "ksl/sphere/grid.hpp"

namespace ksl::sphere {

/// Position of the real harmonic Y_lm, -l <= m <= l, in a coefficient vector.
inline int coeff_index(int l, int m) { return l * l + l + m; }
inline int coeff_count(int L) { return (L + 1) * (L + 1); }

/// Real orthonormal spherical harmonics up to degree L evaluated on a mesh:
/// Y_l0 = P_l^0, Y_lm = sqrt2 P_l^m cos(m phi), Y_l,-m = sqrt2 P_l^m sin(m phi),
/// with P_l^m the orthonormal associated Legendre functions (no
/// Condon-Shortley phase).
class Transform {
 public:
  Transform(int L, Mesh mesh);

  int band_limit() const { return L_; }
  const Mesh& mesh() const { return mesh_; }

  std::vector<double> synthesize(const std::vector<double>& coeffs) const;
  /// d/dtheta and (1/sin theta) d/dphi of the synthesized field.
  void synthesize_gradient(const std::vector<double>& coeffs, std::vector<double>& d_theta,
                           std::vector<double>& d_phi) const;
  /// Quadrature projection onto degrees <= L.
  std::vector<double> analyze(const std::vector<double>& values) const;

 private:
  double plm(int i, int l, int m) const { return plm_[i * ntri_ + tri(l, m)]; }
  double dplm(int i, int l, int m) const { return dplm_[i * ntri_ + tri(l, m)]; }
  static int tri(int l, int m) { return l * (l + 1) / 2 + m; }

  // Per-latitude Fourier amplitudes of the synthesized field.
  void latitude_sums(const std::vector<double>& coeffs, int i, bool derivative,
                     std::vector<double>& cos_part, std::vector<double>& sin_part) const;

  int L_;
  Mesh mesh_;
  int ntri_;
  std::vector<double> plm_, dplm_;
  std::vector<double> cos_, sin_;  // [j * (L+1) + m]
};

/// Immutable discretization of the unit sphere at band limit L: the native
/// transform and an oversampled one for nonlinear terms.
class Sphere {
 public:
  static std::shared_ptr<const Sphere> create(int L, int oversample = 2);

  int band_limit() const { return grid_.L; }
  const QuadratureGrid& grid() const { return grid_; }
  const Transform& native() const { return native_; }
  const Transform& fine() const { return fine_; }
  static double area();

 private:
  explicit Sphere(QuadratureGrid grid);
  QuadratureGrid grid_;
  Transform native_, fine_;
};

using SpherePtr = std::shared_ptr<const Sphere>;

/// Band-limited field. Coefficients are authoritative; native grid values
/// are synthesized lazily and invalidated on every coefficient change.
class SphereField {
 public:
  explicit SphereField(SpherePtr sphere);

  static SphereField from_coefficients(SpherePtr sphere, std::vector<double> coeffs);
  static SphereField constant(SpherePtr sphere, double c);
  /// Projection of f(mu, phi) using the fine mesh.
  static SphereField from_function(SpherePtr sphere,
                                   const std::function<double(double, double)>& f);
  /// Projection of values given on the native or fine mesh.
  static SphereField from_native_values(SpherePtr sphere, const std::vector<double>& values);
  static SphereField from_fine_values(SpherePtr sphere, const std::vector<double>& values);

  const SpherePtr& sphere() const { return sphere_; }
  int band_limit() const { return sphere_->band_limit(); }

  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(int l, int m) const { return coeffs_[coeff_index(l, m)]; }
  void set_coeff(int l, int m, double v);
  void set_coeffs(std::vector<double> c);

  const std::vector<double>& values() const;
  std::vector<double> fine_values() const;

  /// Mean read off the l = 0 coefficient.
  double mean() const;
  /// Mean by quadrature of the native grid values.
  double quadrature_mean() const;
  double min_value() const;  // over native and fine meshes

  SphereField& operator+=(const SphereField& o);
  SphereField& operator-=(const SphereField& o);
  SphereField& operator*=(double s);
  friend SphereField operator+(SphereField a, const SphereField& b) { return a += b; }
  friend SphereField operator-(SphereField a, const SphereField& b) { return a -= b; }
  friend SphereField operator*(SphereField a, double s) { return a *= s; }
  friend SphereField operator*(double s, SphereField a) { return a *= s; }

 private:
  SpherePtr sphere_;
  std::vector<double> coeffs_;
  mutable std::vector<double> values_;
  mutable bool dirty_ = true;
};

}  // namespace ksl::sphere
