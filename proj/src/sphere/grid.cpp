#include "ksl/sphere/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "ksl/constants.hpp"

namespace ksl::sphere {

namespace {

// P_count(x) and its derivative by the three-term recurrence.
std::pair<long double, long double> legendre(int count, long double x) {
  long double p0 = 1, p1 = x;
  for (int j = 2; j <= count; ++j) {
    const long double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  if (count == 0) return {1, 0};
  return {p1, count * (x * p1 - p0) / (x * x - 1)};
}

}  // namespace

GaussLegendre gauss_legendre(int count) {
  if (count < 1) throw DomainError("gauss_legendre: count must be positive");
  GaussLegendre gl;
  gl.nodes.resize(count);
  gl.weights.resize(count);
  for (int i = 0; i < (count + 1) / 2; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (count + 0.5L));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(count, x);
      const long double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    const long double dp = legendre(count, x).second;
    const long double w = 2 / ((1 - x * x) * dp * dp);
    gl.nodes[count - 1 - i] = static_cast<double>(x);
    gl.nodes[i] = static_cast<double>(-x);
    gl.weights[i] = gl.weights[count - 1 - i] = static_cast<double>(w);
  }
  return gl;
}

double Mesh::weight(int index) const {
  return lat_weight[index / nphi()] * 2 * std::numbers::pi / nphi();
}

double Mesh::integrate(const std::vector<double>& values) const {
  const int np = nphi();
  double total = 0;
  for (int i = 0; i < nlat(); ++i) {
    double row = 0;
    for (int j = 0; j < np; ++j) row += values[i * np + j];
    total += lat_weight[i] * row;
  }
  return total * 2 * std::numbers::pi / np;
}

double Mesh::average(const std::vector<double>& values) const {
  return integrate(values) / (4 * std::numbers::pi);
}

Mesh make_mesh(int degree) {
  const GaussLegendre gl = gauss_legendre(degree / 2 + 1);
  Mesh m;
  m.mu = gl.nodes;
  m.lat_weight = gl.weights;
  for (double x : m.mu) m.sin_theta.push_back(std::sqrt((1 - x) * (1 + x)));
  const int nphi = degree + 2 - (degree % 2);
  for (int j = 0; j < nphi; ++j) m.phi.push_back(2 * std::numbers::pi * j / nphi);
  return m;
}

double QuadratureGrid::area() const {
  double s = 0;
  for (int i = 0; i < native.nlat(); ++i) s += native.lat_weight[i];
  return s * 2 * std::numbers::pi;
}

QuadratureGrid make_grid(int L, int oversample) {
  if (L < 2) throw DomainError("make_grid: band limit L must be >= 2, got " + std::to_string(L));
  if (oversample < 1) throw DomainError("make_grid: oversampling factor must be >= 1");
  return {L, oversample, make_mesh(2 * L), make_mesh((oversample + 1) * L)};
}

}  // namespace ksl::sphere
