#include "endfire/performance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "endfire/constants.hpp"
#include "endfire/excitation.hpp"

namespace endfire {
namespace {

// Floor for log conversion; keeps hard nulls finite.
constexpr double kMinGainLinear = 1e-30;

double to_dbi(double linear) { return 10.0 * std::log10(std::max(linear, kMinGainLinear)); }

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

PerformanceReport infeasible_report(std::size_t n) {
  PerformanceReport report;
  report.feasible = false;
  report.currents = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  return report;
}

}  // namespace

double gain_toward(const CouplingMatrices& cm, const ArrayLayout& layout,
                   const Eigen::VectorXcd& currents, Direction dir, const ModelParams& p) {
  const std::complex<double> amplitude = pattern_amplitude(layout, currents, dir, p);
  const double accepted = currents.dot(cm.z_total * currents).real();
  if (!positive_finite(accepted)) {
    throw std::runtime_error("gain_toward: array accepts no positive power");
  }
  return free_space_impedance_ohm / std::numbers::pi * std::norm(amplitude) / accepted;
}

double radiation_efficiency(const CouplingMatrices& cm, const Eigen::VectorXcd& currents) {
  const double radiated = currents.dot(cm.z_radiation * currents).real();
  const double accepted = currents.dot(cm.z_total * currents).real();
  if (!positive_finite(accepted)) {
    throw std::runtime_error("radiation_efficiency: array accepts no positive power");
  }
  return radiated / accepted;
}

double active_reflection_efficiency(const CouplingMatrices& cm, const Eigen::VectorXcd& currents,
                                    const ModelParams& p, ReflectionOptions options) {
  const Eigen::Index n = currents.size();
  const Eigen::MatrixXcd s = z_to_s(cm.z_total, p.ref_impedance_ohm);
  const Eigen::VectorXcd voltages = cm.z_total * currents;

  double total_power = 0.0;
  double reflected_power = 0.0;
  for (Eigen::Index port = 0; port < n; ++port) {
    const double port_power = 0.5 * (voltages[port] * std::conj(currents[port])).real();
    std::complex<double> gamma{0.0, 0.0};
    for (Eigen::Index other = 0; other < n; ++other) {
      if (other == port && !options.include_self_term) {
        continue;
      }
      gamma += s(port, other) * currents[other];
    }
    gamma /= currents[port];
    total_power += port_power;
    reflected_power += std::norm(gamma) * port_power;
  }
  if (!positive_finite(total_power)) {
    throw std::runtime_error("active_reflection_efficiency: array accepts no positive power");
  }
  return std::clamp(1.0 - reflected_power / total_power, 0.0, 1.0);
}

double match_efficiency(std::complex<double> z_in, double z0_ohm) {
  const std::complex<double> gamma = (z_in - z0_ohm) / (z_in + z0_ohm);
  return std::clamp(1.0 - std::norm(gamma), 0.0, 1.0);
}

PerformanceReport evaluate_driven(const CouplingMatrices& cm, const ArrayLayout& layout,
                                  const Eigen::VectorXcd& currents, const ModelParams& p,
                                  Direction dir, ReflectionOptions reflection) {
  PerformanceReport report;
  report.currents = currents;

  const Eigen::VectorXcd z_drive = driving_impedances(cm.z_total, currents);
  for (Eigen::Index port = 0; port < z_drive.size(); ++port) {
    if (!positive_finite(z_drive[port].real())) {
      report.feasible = false;
      return report;
    }
  }

  report.input_power_w = input_power_w(cm.z_total, currents);
  const double gain = gain_toward(cm, layout, currents, dir, p);
  const double e_cd = radiation_efficiency(cm, currents);
  const double e_r = active_reflection_efficiency(cm, currents, p, reflection);

  report.gain_dbi = to_dbi(gain);
  report.directivity_dbi = to_dbi(gain / e_cd);
  report.realized_gain_dbi = to_dbi(gain * e_r);
  report.radiation_efficiency = e_cd;
  report.reflection_efficiency = e_r;
  return report;
}

PerformanceReport evaluate_active(const ArrayLayout& layout, const ModelParams& p, Direction dir,
                                  CouplingOptions coupling, ReflectionOptions reflection) {
  const CouplingMatrices cm = assemble_active(layout, p, coupling);
  const Eigen::VectorXcd currents = optimal_currents(cm, layout, dir, p);
  return evaluate_driven(cm, layout, currents, p, dir, reflection);
}

PerformanceReport evaluate_ula(const ArrayLayout& layout, const ModelParams& p, Direction dir,
                               CouplingOptions coupling, ReflectionOptions reflection) {
  const CouplingMatrices cm = assemble_active(layout, p, coupling);
  // Unit amplitudes, phased so the port contributions add coherently toward
  // `dir`: the steering phases cancel inside the conjugating inner product of
  // the pattern sum.
  const Eigen::VectorXcd currents = steering_vector(layout, dir, p);
  return evaluate_driven(cm, layout, currents, p, dir, reflection);
}

PerformanceReport evaluate_parasitic(const ArrayLayout& layout, std::size_t feed,
                                     const std::vector<double>& loads_ohm, const ModelParams& p,
                                     Direction dir, CouplingOptions coupling) {
  const std::size_t n = layout.size();
  if (feed >= n) {
    throw std::invalid_argument("evaluate_parasitic: feed port index out of range");
  }
  if (loads_ohm.size() != n) {
    throw std::invalid_argument("evaluate_parasitic: need one load entry per element");
  }

  const CouplingMatrices cm = assemble_parasitic(layout, feed, loads_ohm, p, coupling);
  const Eigen::VectorXcd currents = parasitic_currents(cm, feed);
  const Eigen::VectorXcd voltages = cm.z_total * currents;

  // The passive ports are short-circuited behind their loads, so their
  // voltages must vanish; a visible residual means the solve failed.
  const double v_scale = std::max(voltages.cwiseAbs().maxCoeff(), 1.0);
  for (Eigen::Index port = 0; port < voltages.size(); ++port) {
    if (port == static_cast<Eigen::Index>(feed)) {
      continue;
    }
    if (std::abs(voltages[port]) > 1e-8 * v_scale) {
      return infeasible_report(n);
    }
  }

  const std::complex<double> z_in = voltages[static_cast<Eigen::Index>(feed)] /
                                    currents[static_cast<Eigen::Index>(feed)];
  if (!positive_finite(z_in.real())) {
    return infeasible_report(n);
  }

  PerformanceReport report;
  report.currents = currents;
  report.input_impedance_ohm = z_in;
  report.input_power_w = input_power_w(cm.z_total, currents);

  const double gain = gain_toward(cm, layout, currents, dir, p);
  const double e_cd = radiation_efficiency(cm, currents);
  const double e_r = match_efficiency(z_in, p.ref_impedance_ohm);

  report.gain_dbi = to_dbi(gain);
  report.directivity_dbi = to_dbi(gain / e_cd);
  report.realized_gain_dbi = to_dbi(gain * e_r);
  report.radiation_efficiency = e_cd;
  report.reflection_efficiency = e_r;
  return report;
}

}  // namespace endfire
