#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include <doctest.h>

#include "endfire/performance.hpp"

using namespace endfire;

namespace {

const ModelParams params = ModelParams::at_frequency(3.5e9);

ArrayLayout layout_wl(const std::vector<double>& positions_wavelengths) {
  std::vector<double> positions_m(positions_wavelengths.size());
  for (std::size_t k = 0; k < positions_m.size(); ++k) {
    positions_m[k] = positions_wavelengths[k] * params.wavelength_m();
  }
  return ArrayLayout::from_positions(positions_m);
}

}  // namespace

TEST_CASE("a single copper element reproduces the textbook figures") {
  const ArrayLayout layout;
  const CouplingMatrices cm = assemble_active(layout, params);
  const Eigen::VectorXcd one = Eigen::VectorXcd::Ones(1);

  CHECK(gain_toward(cm, layout, one, end_fire_direction, params) ==
        doctest::Approx(1.6385001855523325).epsilon(1e-12));
  CHECK(radiation_efficiency(cm, one) == doctest::Approx(0.9983217531899219).epsilon(1e-12));

  ModelParams lossless = params;
  lossless.conductivity_s_per_m = std::numeric_limits<double>::infinity();
  const CouplingMatrices cm_lossless = assemble_active(layout, lossless);
  CHECK(gain_toward(cm_lossless, layout, one, end_fire_direction, lossless) ==
        doctest::Approx(1.641254615875952).epsilon(1e-12));
  CHECK(radiation_efficiency(cm_lossless, one) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("match efficiency behaves like 1 - |Gamma|^2") {
  CHECK(match_efficiency({73.0, 0.0}, 73.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(match_efficiency({73.0, 73.0}, 73.0) < 1.0);
  CHECK(match_efficiency({1e9, 0.0}, 73.0) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(match_efficiency({36.5, 0.0}, 73.0) ==
        doctest::Approx(1.0 - 1.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("single-feed evaluation reproduces the frozen two-element reference") {
  const PerformanceReport report =
      evaluate_parasitic(layout_wl({0.0, 0.21}), 1, {4.07, 0.0}, params);
  CHECK(report.feasible);
  CHECK(report.realized_gain_dbi == doctest::Approx(6.200592400017229).epsilon(1e-10));
  CHECK(report.radiation_efficiency == doctest::Approx(0.9960458230882256).epsilon(1e-10));
  CHECK(report.reflection_efficiency == doctest::Approx(0.900496143745362).epsilon(1e-10));
  REQUIRE(report.input_impedance_ohm.has_value());
  CHECK(report.input_impedance_ohm->real() ==
        doctest::Approx(47.74641060614954).epsilon(1e-10));
  CHECK(report.input_impedance_ohm->imag() ==
        doctest::Approx(30.047078493648712).epsilon(1e-10));
  // Gain, efficiency and directivity stay consistent.
  CHECK(report.directivity_dbi ==
        doctest::Approx(report.gain_dbi - 10.0 * std::log10(report.radiation_efficiency))
            .epsilon(1e-12));
}

TEST_CASE("single-feed evaluation reproduces the frozen larger references") {
  struct Expected {
    std::vector<double> positions;
    std::vector<double> loads;
    double gre;
    double ecd;
    double er;
  };
  // Feed port index 1 (0-based) throughout; values frozen from the validated
  // implementation of this model.
  const std::vector<Expected> cases = {
      {{0.0, 0.36, 0.57}, {-4.18, 0.0, -36.50}, 8.19423904435476, 0.9933276944040726,
       0.8116641955460816},
      {{0.0, 0.40, 0.67, 0.98}, {-5.21, 0.0, -53.31, -48.11}, 9.898632931492152,
       0.9918029597068008, 0.8453605215243682},
      {{0.0, 0.41, 0.71, 1.02, 1.43}, {-4.33, 0.0, -51.95, -59.67, -66.58},
       10.950829954949866, 0.9893603086234515, 0.8292932516750684},
      {{0.0, 0.42, 0.74, 1.03, 1.46, 1.88}, {-3.17, 0.0, -47.85, -57.43, -88.07, -76.54},
       11.944104246357988, 0.9868273098711529, 0.8433418124637118},
      {{0.0, 0.42, 0.76, 1.04, 1.46, 1.91, 2.34},
       {-2.13, 0.0, -44.52, -56.41, -88.78, -104.11, -83.40}, 12.746828586446085,
       0.9846955353946002, 0.8563282163549821},
  };
  for (const Expected& expected : cases) {
    CAPTURE(expected.positions.size());
    const PerformanceReport report =
        evaluate_parasitic(layout_wl(expected.positions), 1, expected.loads, params);
    CHECK(report.feasible);
    CHECK(report.realized_gain_dbi == doctest::Approx(expected.gre).epsilon(1e-10));
    CHECK(report.radiation_efficiency == doctest::Approx(expected.ecd).epsilon(1e-10));
    CHECK(report.reflection_efficiency == doctest::Approx(expected.er).epsilon(1e-10));
  }
}

TEST_CASE("fully driven evaluation reproduces the frozen references") {
  struct Expected {
    std::vector<double> positions;
    double gre;
    double ecd;
    double er;
  };
  const std::vector<Expected> cases = {
      {{0.0, 0.27}, 6.136329037317413, 0.997134959322193, 0.8912679068688556},
      {{0.0, 0.41, 0.70}, 7.729319585172874, 0.9967106513053626, 0.8093810419944774},
      {{0.0, 0.38, 0.86, 1.14}, 8.569385696636921, 0.9964116863563721, 0.7126762438088738},
      {{0.0, 0.37, 0.83, 1.33, 1.58}, 9.11995574638447, 0.9958485143785527,
       0.6274665044797325},
      {{0.0, 0.36, 0.82, 1.29, 1.79, 2.02}, 9.555009914701687, 0.9951760033652673,
       0.5565712975625654},
      {{0.0, 0.35, 0.82, 1.28, 1.76, 2.26, 2.48}, 9.88604151802747, 0.9948218562116595,
       0.5073567935085714},
  };
  for (const Expected& expected : cases) {
    CAPTURE(expected.positions.size());
    const PerformanceReport report = evaluate_active(layout_wl(expected.positions), params);
    CHECK(report.feasible);
    CHECK(report.realized_gain_dbi == doctest::Approx(expected.gre).epsilon(1e-10));
    CHECK(report.radiation_efficiency == doctest::Approx(expected.ecd).epsilon(1e-10));
    CHECK(report.reflection_efficiency == doctest::Approx(expected.er).epsilon(1e-10));
    CHECK(report.input_power_w ==
          doctest::Approx(0.5 * static_cast<double>(expected.positions.size()) *
                          params.element_power_w)
              .epsilon(1e-12));
  }
}

TEST_CASE("uniform progressive-phase evaluation reproduces the frozen references") {
  const std::vector<double> expected = {4.265179438891689,  5.361403491519826,
                                        6.0955672485379075, 6.649740772645904,
                                        7.0971605957059944, 7.473999696495424};
  for (std::size_t n = 2; n <= 7; ++n) {
    CAPTURE(n);
    const ArrayLayout layout = ArrayLayout::uniform(n, 0.5 * params.wavelength_m());
    const PerformanceReport report = evaluate_ula(layout, params);
    CHECK(report.realized_gain_dbi == doctest::Approx(expected[n - 2]).epsilon(1e-10));
  }
}

TEST_CASE("a port driven against its own voltage is flagged infeasible") {
  const ArrayLayout layout = layout_wl({0.0, 0.05});
  const CouplingMatrices cm = assemble_active(layout, params);
  Eigen::VectorXcd currents(2);
  currents << std::complex<double>{1.0, 0.0}, std::complex<double>{-1.2, 0.0};
  const PerformanceReport report =
      evaluate_driven(cm, layout, currents, params, end_fire_direction);
  CHECK_FALSE(report.feasible);
}

TEST_CASE("evaluate_parasitic validates feed and load inputs") {
  const ArrayLayout layout = layout_wl({0.0, 0.21});
  CHECK_THROWS_AS(evaluate_parasitic(layout, 2, {0.0, 0.0}, params), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_parasitic(layout, 1, {0.0}, params), std::invalid_argument);
}
