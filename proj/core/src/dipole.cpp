#include "endfire/dipole.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "endfire/constants.hpp"
#include "endfire/trig_integrals.hpp"

namespace endfire {
namespace {

using cplx = std::complex<double>;
constexpr cplx j{0.0, 1.0};

void check_not_degenerate(double kh) {
  if (std::abs(std::sin(kh)) < 1e-9) {
    throw std::domain_error(
        "dipole impedance: length is a multiple of a full wavelength; the "
        "input-current referral 1/sin^2(kl/2) degenerates");
  }
}

}  // namespace

std::complex<double> mutual_impedance(double separation_m, const ModelParams& p) {
  if (!(separation_m > 0.0)) {
    throw std::invalid_argument("mutual_impedance: separation must be positive");
  }
  const double k = p.wavenumber_rad_per_m();
  const double h = p.half_length_m();
  const double kh = k * h;
  check_not_degenerate(kh);

  const double u_p = k * (std::hypot(separation_m, h) + h);
  const double u_m = k * (std::hypot(separation_m, h) - h);
  const double v_p = k * (std::hypot(separation_m, 2.0 * h) + 2.0 * h);
  const double v_m = k * (std::hypot(separation_m, 2.0 * h) - 2.0 * h);
  const double w0 = k * separation_m;

  const cplx phi_w0 = exp_integral_e1_imag(w0);
  const cplx phi_up = exp_integral_e1_imag(u_p);
  const cplx phi_um = exp_integral_e1_imag(u_m);
  const cplx phi_vp = exp_integral_e1_imag(v_p);
  const cplx phi_vm = exp_integral_e1_imag(v_m);

  const double cos_kh = std::cos(kh);
  const cplx t0 =
      (2.0 * cos_kh * phi_w0 - std::exp(j * kh) * phi_up - std::exp(-j * kh) * phi_um) / j;
  const cplx a = -(2.0 * phi_w0 - phi_up - phi_um) / (2.0 * j);
  const cplx b = (std::exp(2.0 * j * kh) * (phi_up - phi_vp) -
                  std::exp(-2.0 * j * kh) * (phi_vm - phi_um)) /
                 (2.0 * j);
  const cplx zm = j * free_space_impedance_ohm / (2.0 * std::numbers::pi) *
                  ((a + b) - cos_kh * t0);
  const double s = std::sin(kh);
  return zm / (s * s);
}

std::complex<double> self_impedance(const ModelParams& p) {
  return mutual_impedance(p.radius_m, p);
}

double loss_resistance(const ModelParams& p) {
  if (std::isinf(p.conductivity_s_per_m)) {
    return 0.0;
  }
  const double k = p.wavenumber_rad_per_m();
  const double h = p.half_length_m();
  const double kh = k * h;
  check_not_degenerate(kh);
  const double surface_resistance = std::sqrt(
      std::numbers::pi * p.frequency_hz * vacuum_permeability_h_per_m / p.conductivity_s_per_m);
  const double s = std::sin(kh);
  return surface_resistance / (2.0 * std::numbers::pi * p.radius_m) *
         (h - std::sin(2.0 * kh) / (2.0 * k)) / (s * s);
}

double element_factor(double theta_rad, const ModelParams& p) {
  const double kh = p.wavenumber_rad_per_m() * p.half_length_m();
  const double s = std::sin(theta_rad);
  if (std::abs(s) < 1e-9) {
    return 0.0;
  }
  return (std::cos(kh * std::cos(theta_rad)) - std::cos(kh)) / s;
}

}  // namespace endfire
