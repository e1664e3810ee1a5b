#include "support/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "endfire/far_field.hpp"

namespace endfire::testsupport {
namespace {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], by Newton
// iteration on the Legendre polynomial.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        break;
      }
    }
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

}  // namespace

double directivity_sphere(const ArrayLayout& layout, const Eigen::VectorXcd& currents,
                          Direction dir, const ModelParams& p, int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) {
    throw std::invalid_argument("directivity_sphere: need at least 2 nodes per axis");
  }
  std::vector<double> u_nodes;
  std::vector<double> u_weights;
  gauss_legendre(n_theta, u_nodes, u_weights);

  // Power pattern integral over the sphere: Gauss-Legendre handles the
  // sin(theta) d(theta) measure through the cos(theta) substitution, and the
  // phi integral of a periodic integrand is spectrally accurate with the
  // trapezoid rule.
  double integral = 0.0;
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(n_phi);
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(u_nodes[static_cast<std::size_t>(i)]);
    double ring = 0.0;
    for (int jphi = 0; jphi < n_phi; ++jphi) {
      const double phi = dphi * static_cast<double>(jphi);
      ring += std::norm(pattern_amplitude(layout, currents, Direction{theta, phi}, p));
    }
    integral += u_weights[static_cast<std::size_t>(i)] * ring * dphi;
  }

  const double peak = std::norm(pattern_amplitude(layout, currents, dir, p));
  return 4.0 * std::numbers::pi * peak / integral;
}

}  // namespace endfire::testsupport
