#include "endfire/excitation.hpp"

#include <cmath>
#include <stdexcept>

#include "endfire/far_field.hpp"

namespace endfire {

Eigen::VectorXcd optimal_currents(const CouplingMatrices& cm, const ArrayLayout& layout,
                                  Direction dir, const ModelParams& p) {
  const Eigen::VectorXcd a = steering_vector(layout, dir, p);
  const Eigen::MatrixXd resistance = cm.z_total.real();
  const Eigen::LDLT<Eigen::MatrixXd> solver(resistance);
  Eigen::VectorXcd shape(a.size());
  shape.real() = solver.solve(a.real());
  shape.imag() = solver.solve(a.imag());
  // a^H R^{-1} a is real and positive for a positive-definite resistance part.
  const double quad_form = a.dot(shape).real();
  if (!(quad_form > 0.0) || !std::isfinite(quad_form)) {
    throw std::runtime_error(
        "optimal_currents: resistance matrix is not positive along the steering "
        "direction");
  }
  const double n = static_cast<double>(layout.size());
  const double scale = std::sqrt(n * p.element_power_w / quad_form);
  return scale * shape;
}

Eigen::VectorXcd parasitic_currents(const CouplingMatrices& cm, std::size_t feed) {
  const Eigen::Index n = cm.z_total.rows();
  const auto f = static_cast<Eigen::Index>(feed);
  if (f >= n) {
    throw std::invalid_argument("parasitic_currents: feed index out of range");
  }
  Eigen::VectorXcd currents = Eigen::VectorXcd::Zero(n);
  currents[f] = 1.0;
  if (n == 1) {
    return currents;
  }
  // Passive ports p: Z_pp i_p = -Z_pf * i_f.
  Eigen::MatrixXcd z_pp(n - 1, n - 1);
  Eigen::VectorXcd z_pf(n - 1);
  Eigen::Index r = 0;
  for (Eigen::Index row = 0; row < n; ++row) {
    if (row == f) {
      continue;
    }
    z_pf[r] = cm.z_total(row, f);
    Eigen::Index c = 0;
    for (Eigen::Index col = 0; col < n; ++col) {
      if (col == f) {
        continue;
      }
      z_pp(r, c) = cm.z_total(row, col);
      ++c;
    }
    ++r;
  }
  const Eigen::VectorXcd passive = z_pp.partialPivLu().solve(-z_pf);
  r = 0;
  for (Eigen::Index row = 0; row < n; ++row) {
    if (row == f) {
      continue;
    }
    currents[row] = passive[r++];
  }
  return currents;
}

Eigen::VectorXcd driving_impedances(const Eigen::MatrixXcd& z, const Eigen::VectorXcd& currents) {
  const Eigen::VectorXcd voltages = z * currents;
  return voltages.cwiseQuotient(currents);
}

std::vector<double> loads_from_impedances(const Eigen::VectorXcd& driving_impedance,
                                          std::size_t feed) {
  if (feed >= static_cast<std::size_t>(driving_impedance.size())) {
    throw std::invalid_argument("loads_from_impedances: feed index out of range");
  }
  std::vector<double> loads(static_cast<std::size_t>(driving_impedance.size()), 0.0);
  for (std::size_t port = 0; port < loads.size(); ++port) {
    if (port == feed) {
      continue;
    }
    loads[port] = -driving_impedance[static_cast<Eigen::Index>(port)].imag();
  }
  return loads;
}

double input_power_w(const Eigen::MatrixXcd& z, const Eigen::VectorXcd& currents) {
  return 0.5 * currents.dot(z * currents).real();
}

}  // namespace endfire
