#pragma once

#include <complex>

namespace endfire {

struct TrigIntegrals {
  double si;
  double ci;
};

// Sine and cosine integrals Si(x) and Ci(x) for x >= 0.
//
// Si(0) = 0 and Ci(0) = -infinity (returned as such, not an error); negative
// arguments throw std::domain_error. Absolute error is below 1e-12 over
// (0, 100], the range exercised by the impedance kernels.
TrigIntegrals sin_cos_integrals(double x);

// Exponential integral on the positive imaginary axis:
//   E1(j y) = -Ci(y) + j (Si(y) - pi/2),  y > 0.
// This is the building block of the closed-form coupling impedance.
std::complex<double> exp_integral_e1_imag(double y);

}  // namespace endfire
