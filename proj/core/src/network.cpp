#include "endfire/network.hpp"

#include <complex>
#include <stdexcept>

#include "endfire/dipole.hpp"

namespace endfire {

CouplingMatrices assemble_active(const ArrayLayout& layout, const ModelParams& p,
                                 CouplingOptions options) {
  const auto n = static_cast<Eigen::Index>(layout.size());
  const auto& positions = layout.positions_m();

  const std::complex<double> self = self_impedance(p);
  const std::complex<double> diagonal =
      options.self_term == SelfTerm::resonant ? std::complex<double>{self.real(), 0.0} : self;

  CouplingMatrices cm;
  cm.z_radiation.resize(n, n);
  for (Eigen::Index row = 0; row < n; ++row) {
    cm.z_radiation(row, row) = diagonal;
    for (Eigen::Index col = row + 1; col < n; ++col) {
      const double d = positions[static_cast<std::size_t>(col)] -
                       positions[static_cast<std::size_t>(row)];
      const std::complex<double> zm = mutual_impedance(d, p);
      cm.z_radiation(row, col) = zm;
      cm.z_radiation(col, row) = zm;
    }
  }
  cm.z_total = cm.z_radiation;
  cm.z_total.diagonal().array() += loss_resistance(p);
  return cm;
}

CouplingMatrices assemble_parasitic(const ArrayLayout& layout, std::size_t feed,
                                    const std::vector<double>& loads_ohm,
                                    const ModelParams& p, CouplingOptions options) {
  if (feed >= layout.size()) {
    throw std::invalid_argument("assemble_parasitic: feed index out of range");
  }
  if (loads_ohm.size() != layout.size()) {
    throw std::invalid_argument("assemble_parasitic: need one load entry per element");
  }
  CouplingMatrices cm = assemble_active(layout, p, options);
  for (std::size_t port = 0; port < loads_ohm.size(); ++port) {
    if (port == feed) {
      continue;
    }
    cm.z_total(static_cast<Eigen::Index>(port), static_cast<Eigen::Index>(port)) +=
        std::complex<double>{0.0, loads_ohm[port]};
  }
  return cm;
}

Eigen::MatrixXcd z_to_s(const Eigen::MatrixXcd& z, double z0_ohm) {
  if (z.rows() != z.cols()) {
    throw std::invalid_argument("z_to_s: matrix must be square");
  }
  if (!(z0_ohm > 0.0)) {
    throw std::invalid_argument("z_to_s: reference impedance must be positive");
  }
  const Eigen::MatrixXcd identity =
      Eigen::MatrixXcd::Identity(z.rows(), z.cols());
  return (z - z0_ohm * identity) * (z + z0_ohm * identity).inverse();
}

}  // namespace endfire
