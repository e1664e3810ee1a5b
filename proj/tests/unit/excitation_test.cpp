#include <complex>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "endfire/excitation.hpp"
#include "endfire/network.hpp"

using namespace endfire;

namespace {

const ModelParams params = ModelParams::at_frequency(3.5e9);

ArrayLayout two_elements(double spacing_wavelengths) {
  return ArrayLayout::from_positions({0.0, spacing_wavelengths * params.wavelength_m()});
}

}  // namespace

TEST_CASE("gain-optimal currents match the reference solution") {
  const ArrayLayout layout = two_elements(0.27);
  const CouplingMatrices cm = assemble_active(layout, params);
  const Eigen::VectorXcd currents = optimal_currents(cm, layout, end_fire_direction, params);

  REQUIRE(currents.size() == 2);
  CHECK(currents[0].real() == doctest::Approx(0.09802615650975366).epsilon(1e-11));
  CHECK(currents[0].imag() == doctest::Approx(0.04531981727051865).epsilon(1e-11));
  CHECK(currents[1].real() == doctest::Approx(-0.05724839214421535).epsilon(1e-11));
  CHECK(currents[1].imag() == doctest::Approx(-0.09157311174362298).epsilon(1e-11));
}

TEST_CASE("optimal currents exhaust the pooled power budget") {
  for (const double spacing : {0.21, 0.27, 0.4}) {
    const ArrayLayout layout = two_elements(spacing);
    const CouplingMatrices cm = assemble_active(layout, params);
    const Eigen::VectorXcd currents = optimal_currents(cm, layout, end_fire_direction, params);
    // Delivered power = n * element budget / 2.
    CHECK(input_power_w(cm.z_total, currents) ==
          doctest::Approx(2.0 * params.element_power_w / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("driving-point impedances under optimal drive match the reference") {
  const ArrayLayout layout = two_elements(0.27);
  const CouplingMatrices cm = assemble_active(layout, params);
  const Eigen::VectorXcd currents = optimal_currents(cm, layout, end_fire_direction, params);
  const Eigen::VectorXcd z_drive = driving_impedances(cm.z_total, currents);

  CHECK(z_drive[0].real() == doctest::Approx(25.831125800115647).epsilon(1e-10));
  CHECK(z_drive[0].imag() == doctest::Approx(6.243175025562855).epsilon(1e-10));
  CHECK(z_drive[1].real() == doctest::Approx(59.910010136665555).epsilon(1e-10));
  CHECK(z_drive[1].imag() == doctest::Approx(45.88333589257581).epsilon(1e-10));
}

TEST_CASE("load derivation negates the passive-port reactances") {
  // At the 0.21-wavelength two-element design the optimal drive leaves a
  // capacitive reactance on port 1, which the load derivation converts into
  // an inductive termination.
  const ArrayLayout layout = two_elements(0.21);
  const CouplingMatrices cm = assemble_active(layout, params);
  const Eigen::VectorXcd currents = optimal_currents(cm, layout, end_fire_direction, params);
  const Eigen::VectorXcd z_drive = driving_impedances(cm.z_total, currents);

  CHECK(z_drive[0].real() == doctest::Approx(19.661491070380922).epsilon(1e-10));
  CHECK(z_drive[0].imag() == doctest::Approx(-4.5708991992498).epsilon(1e-9));
  CHECK(z_drive[1].real() == doctest::Approx(39.70402824988216).epsilon(1e-10));
  CHECK(z_drive[1].imag() == doctest::Approx(42.009112629225534).epsilon(1e-10));

  const std::vector<double> loads = loads_from_impedances(z_drive, 1);
  REQUIRE(loads.size() == 2);
  CHECK(loads[0] == doctest::Approx(4.5708991992498).epsilon(1e-9));
  CHECK(loads[1] == 0.0);  // feed carries no load

  CHECK_THROWS_AS(loads_from_impedances(z_drive, 5), std::invalid_argument);
}

TEST_CASE("single-feed currents zero the passive-port voltages") {
  const ArrayLayout layout = two_elements(0.21);
  const std::vector<double> loads = {4.5708991992498, 0.0};
  const CouplingMatrices cm = assemble_parasitic(layout, 1, loads, params);
  const Eigen::VectorXcd currents = parasitic_currents(cm, 1);

  CHECK(currents[1] == std::complex<double>{1.0, 0.0});
  const Eigen::VectorXcd voltages = cm.z_total * currents;
  CHECK(std::abs(voltages[0]) < 1e-10 * std::abs(voltages[1]));

  CHECK_THROWS_AS(parasitic_currents(cm, 7), std::invalid_argument);
}

TEST_CASE("single-feed solve handles the single-element edge case") {
  const CouplingMatrices cm = assemble_parasitic(ArrayLayout{}, 0, {0.0}, params);
  const Eigen::VectorXcd currents = parasitic_currents(cm, 0);
  REQUIRE(currents.size() == 1);
  CHECK(currents[0] == std::complex<double>{1.0, 0.0});
}
