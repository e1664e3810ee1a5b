#pragma once

#include <complex>

#include <Eigen/Dense>

#include "endfire/layout.hpp"

namespace endfire {

// Plane-wave response (steering) vector toward (theta, phi):
//   a_n = exp(-j k d_n sin(theta) cos(phi)).
Eigen::VectorXcd steering_vector(const ArrayLayout& layout, Direction dir, const ModelParams& p);

// Far-field pattern amplitude of the excited array toward (theta, phi): the
// element pattern factor times the coherent port sum conj(a)^T i.
std::complex<double> pattern_amplitude(const ArrayLayout& layout,
                                       const Eigen::VectorXcd& currents, Direction dir,
                                       const ModelParams& p);

}  // namespace endfire
