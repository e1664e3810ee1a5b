#pragma once

namespace endfire {

// Physical description of one thin-wire dipole element plus the scalar
// quantities every array computation shares (reflection reference impedance
// and the per-element transmit power budget).
struct ModelParams {
  double frequency_hz = 0.0;
  double length_m = 0.0;  // full dipole length
  double radius_m = 0.0;  // wire radius
  double conductivity_s_per_m = 0.0;
  double ref_impedance_ohm = 73.0;  // real reflection reference
  double element_power_w = 0.5;     // per-element transmit power budget

  double wavelength_m() const;
  double wavenumber_rad_per_m() const;
  double half_length_m() const { return 0.5 * length_m; }

  // Half-wave copper thin-wire defaults at the given carrier frequency:
  // length = lambda/2, radius = lambda/200, copper conductivity 5.8e7 S/m,
  // 73-ohm reflection reference, 0.5 W per element.
  static ModelParams at_frequency(double frequency_hz);

  // Throws std::invalid_argument when a field is out of range (non-positive
  // sizes, radius not small against the length, bad conductivity).
  void validate() const;
};

}  // namespace endfire
