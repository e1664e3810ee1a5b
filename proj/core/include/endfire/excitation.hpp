#pragma once

#include <vector>

#include <Eigen/Dense>

#include "endfire/network.hpp"

namespace endfire {

// Gain-optimal drive currents for a fully driven array toward `dir`:
//   i = c * Re{Z}^{-1} a,
// scaled so the delivered input power equals n * element_power (every element's
// power budget is pooled). Re{Z} is taken from z_total, so ohmic loss is part
// of the optimum.
Eigen::VectorXcd optimal_currents(const CouplingMatrices& cm, const ArrayLayout& layout,
                                  Direction dir, const ModelParams& p);

// Port currents of a single-feed loaded array driven with a unit feed current:
// the passive ports satisfy (Z i) = 0, the feed current is 1 + j0.
Eigen::VectorXcd parasitic_currents(const CouplingMatrices& cm, std::size_t feed);

// Per-port driving impedance v_n / i_n with v = Z i.
Eigen::VectorXcd driving_impedances(const Eigen::MatrixXcd& z, const Eigen::VectorXcd& currents);

// Reactive loads that emulate a driven excitation on a single-feed array:
// X_n = -Im{Z_drive,n} at every port except the feed; the feed entry is 0.
std::vector<double> loads_from_impedances(const Eigen::VectorXcd& driving_impedance,
                                          std::size_t feed);

// Delivered input power 0.5 * Re{i^H Z i}.
double input_power_w(const Eigen::MatrixXcd& z, const Eigen::VectorXcd& currents);

}  // namespace endfire
