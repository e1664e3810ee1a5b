#pragma once

#include <complex>

#include "endfire/model_params.hpp"

namespace endfire {

// Mutual impedance between two parallel side-by-side thin-wire dipoles with
// sinusoidal current profiles, by the induced-EMF method (closed form in sine
// and cosine integrals), referred to the input (feed-point) currents.
// `separation_m` is the lateral distance between the wire axes and must be
// positive. Throws std::domain_error for a half-length that is a multiple of
// half a wavelength, where the input-current referral degenerates.
std::complex<double> mutual_impedance(double separation_m, const ModelParams& p);

// Self-impedance of one element: the same induced-EMF expression evaluated at
// a lateral offset of one wire radius, so the radius sets the reactance term.
std::complex<double> self_impedance(const ModelParams& p);

// Input-referred ohmic resistance of one element: skin-effect surface
// resistance distributed over the wire circumference, weighted by the
// sinusoidal current profile. Zero for infinite conductivity.
double loss_resistance(const ModelParams& p);

// Element far-field pattern factor versus polar angle, with the analytic
// limit 0 on the wire axis.
double element_factor(double theta_rad, const ModelParams& p);

}  // namespace endfire
