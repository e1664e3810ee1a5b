#pragma once

#include <numbers>

namespace endfire {

inline constexpr double speed_of_light_m_per_s = 299792458.0;
inline constexpr double vacuum_permeability_h_per_m = 4.0e-7 * std::numbers::pi;
// Wave impedance of free space, eta0 = mu0 * c (~ 376.73 ohm).
inline constexpr double free_space_impedance_ohm =
    vacuum_permeability_h_per_m * speed_of_light_m_per_s;

}  // namespace endfire
