#include "endfire/far_field.hpp"

#include <cmath>

#include "endfire/dipole.hpp"

namespace endfire {

Eigen::VectorXcd steering_vector(const ArrayLayout& layout, Direction dir,
                                 const ModelParams& p) {
  const double k = p.wavenumber_rad_per_m();
  const double projection = std::sin(dir.theta) * std::cos(dir.phi);
  const auto& positions = layout.positions_m();
  Eigen::VectorXcd a(static_cast<Eigen::Index>(positions.size()));
  for (std::size_t n = 0; n < positions.size(); ++n) {
    const double phase = -k * positions[n] * projection;
    a[static_cast<Eigen::Index>(n)] = std::polar(1.0, phase);
  }
  return a;
}

std::complex<double> pattern_amplitude(const ArrayLayout& layout,
                                       const Eigen::VectorXcd& currents, Direction dir,
                                       const ModelParams& p) {
  const Eigen::VectorXcd a = steering_vector(layout, dir, p);
  return element_factor(dir.theta, p) * a.dot(currents);
}

}  // namespace endfire
