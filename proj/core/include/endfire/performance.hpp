#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "endfire/far_field.hpp"
#include "endfire/layout.hpp"
#include "endfire/model_params.hpp"
#include "endfire/network.hpp"

namespace endfire {

// Options for the fully-driven-array reflection model.
struct ReflectionOptions {
  // Include the diagonal scattering term in each port's active reflection
  // coefficient. The default models per-port sources individually matched to
  // the reference impedance, so only coupling from the other ports reflects.
  bool include_self_term = false;
};

// Figures of merit for one array configuration.
struct PerformanceReport {
  // False when the configuration is physically unusable (for example a
  // driving-point resistance that is not positive).
  bool feasible = true;
  double directivity_dbi = 0.0;
  double gain_dbi = 0.0;
  double realized_gain_dbi = 0.0;
  // Radiated power over accepted power (conduction efficiency), in [0, 1].
  double radiation_efficiency = 1.0;
  // Power kept after reflection at the source interface, in [0, 1].
  double reflection_efficiency = 1.0;
  double input_power_w = 0.0;
  // Feed-port impedance; only set for single-feed arrays.
  std::optional<std::complex<double>> input_impedance_ohm;
  Eigen::VectorXcd currents;
};

// Power gain (linear, relative to isotropic) of the array carrying `currents`,
// looking toward `dir`. Accounts for conduction loss through the resistive
// part of the total impedance matrix.
double gain_toward(const CouplingMatrices& cm, const ArrayLayout& layout,
                   const Eigen::VectorXcd& currents, Direction dir, const ModelParams& p);

// Radiated power over accepted power for the given port currents.
double radiation_efficiency(const CouplingMatrices& cm, const Eigen::VectorXcd& currents);

// Aggregate reflection efficiency of a fully driven array whose ports are
// individually matched to the model's reference impedance: each port sees an
// active reflection coefficient produced by the coupled excitation, and the
// reflected powers are summed weighted by the per-port input powers.
double active_reflection_efficiency(const CouplingMatrices& cm, const Eigen::VectorXcd& currents,
                                    const ModelParams& p, ReflectionOptions options = {});

// 1 - |Gamma|^2 for a single port of impedance `z_in` against a real reference
// impedance `z0_ohm`.
double match_efficiency(std::complex<double> z_in, double z0_ohm);

// Evaluate a fully driven array with power-constrained optimal excitation
// toward `dir`.
PerformanceReport evaluate_active(const ArrayLayout& layout, const ModelParams& p,
                                  Direction dir = end_fire_direction,
                                  CouplingOptions coupling = {},
                                  ReflectionOptions reflection = {});

// Evaluate a single-feed array: port `feed` (0-based) is driven, every other
// port is terminated in the matching entry of `loads_ohm` (reactance, ohms;
// one entry per element, the feed entry is ignored).
PerformanceReport evaluate_parasitic(const ArrayLayout& layout, std::size_t feed,
                                     const std::vector<double>& loads_ohm, const ModelParams& p,
                                     Direction dir = end_fire_direction,
                                     CouplingOptions coupling = {});

// Evaluate a fully driven array with uniform-amplitude, progressive-phase
// excitation toward `dir` (the classical baseline).
PerformanceReport evaluate_ula(const ArrayLayout& layout, const ModelParams& p,
                               Direction dir = end_fire_direction, CouplingOptions coupling = {},
                               ReflectionOptions reflection = {});

// Evaluate a fully driven array carrying the given port currents.
PerformanceReport evaluate_driven(const CouplingMatrices& cm, const ArrayLayout& layout,
                                  const Eigen::VectorXcd& currents, const ModelParams& p,
                                  Direction dir = end_fire_direction,
                                  ReflectionOptions reflection = {});

}  // namespace endfire
