#pragma once

#include <vector>

namespace ksl::sphere {

struct GaussLegendre {
  std::vector<double> nodes;    // ascending in [-1, 1]
  std::vector<double> weights;  // sum to 2
};

/// Nodes and weights of the `count`-point rule, exact for polynomials of
/// degree 2 count - 1.
GaussLegendre gauss_legendre(int count);

/// Tensor grid: Gauss-Legendre in mu = cos(theta), equispaced in phi.
struct Mesh {
  std::vector<double> mu;
  std::vector<double> sin_theta;
  std::vector<double> lat_weight;  // Gauss-Legendre weight of each latitude
  std::vector<double> phi;

  int nlat() const { return static_cast<int>(mu.size()); }
  int nphi() const { return static_cast<int>(phi.size()); }
  int size() const { return nlat() * nphi(); }
  /// Area weight of flat point index i * nphi + j.
  double weight(int index) const;
  double integrate(const std::vector<double>& values) const;
  double average(const std::vector<double>& values) const;
};

/// Mesh integrating every spherical polynomial of degree <= `degree`
/// exactly.
Mesh make_mesh(int degree);

struct QuadratureGrid {
  int L = 0;
  int oversample = 2;
  Mesh native;  // exact to degree 2L: L+1 latitudes, 2L+2 longitudes
  Mesh fine;    // exact to degree (oversample+1) L, for nonlinear terms

  double area() const;
};

/// Throws DomainError for L < 2 or oversample < 1.
QuadratureGrid make_grid(int L, int oversample = 2);

}  // namespace ksl::sphere
