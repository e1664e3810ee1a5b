#include "endfire/model_params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "endfire/constants.hpp"

namespace endfire {

double ModelParams::wavelength_m() const { return speed_of_light_m_per_s / frequency_hz; }

double ModelParams::wavenumber_rad_per_m() const {
  return 2.0 * std::numbers::pi / wavelength_m();
}

ModelParams ModelParams::at_frequency(double frequency_hz) {
  if (!(frequency_hz > 0.0)) {
    throw std::invalid_argument("ModelParams::at_frequency: frequency must be positive");
  }
  ModelParams p;
  p.frequency_hz = frequency_hz;
  const double lambda = speed_of_light_m_per_s / frequency_hz;
  p.length_m = 0.5 * lambda;
  p.radius_m = lambda / 200.0;
  p.conductivity_s_per_m = 5.8e7;
  p.ref_impedance_ohm = 73.0;
  p.element_power_w = 0.5;
  return p;
}

void ModelParams::validate() const {
  if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz)) {
    throw std::invalid_argument("ModelParams: frequency must be positive and finite");
  }
  if (!(length_m > 0.0) || !std::isfinite(length_m)) {
    throw std::invalid_argument("ModelParams: dipole length must be positive and finite");
  }
  if (!(radius_m > 0.0) || !std::isfinite(radius_m)) {
    throw std::invalid_argument("ModelParams: wire radius must be positive and finite");
  }
  if (!(radius_m < 0.1 * length_m)) {
    throw std::invalid_argument("ModelParams: wire radius must be small against the length");
  }
  if (!(conductivity_s_per_m > 0.0)) {  // +infinity (lossless) is allowed
    throw std::invalid_argument("ModelParams: conductivity must be positive");
  }
  if (!(ref_impedance_ohm > 0.0) || !std::isfinite(ref_impedance_ohm)) {
    throw std::invalid_argument("ModelParams: reference impedance must be positive and finite");
  }
  if (!(element_power_w > 0.0) || !std::isfinite(element_power_w)) {
    throw std::invalid_argument("ModelParams: element power must be positive and finite");
  }
}

}  // namespace endfire
