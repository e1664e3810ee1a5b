#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endfire/de.hpp"
#include "endfire/layout.hpp"
#include "endfire/model_params.hpp"
#include "endfire/performance.hpp"

namespace endfire {

enum class ArrayMode {
  active,     // every element driven with optimized excitation
  parasitic,  // one driven element, the rest reactively loaded
  ula,        // equally spaced, uniform amplitude, progressive phase
};

std::string to_string(ArrayMode mode);
ArrayMode array_mode_from_string(const std::string& name);

// Record of one optimizer run.
struct OptimizationTrace {
  std::vector<double> best_dbi;  // best realized gain after init + each generation
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;
  int population = 0;
  int iterations = 0;
};

// A fully specified design plus its evaluated performance.
struct DesignResult {
  ArrayMode mode = ArrayMode::active;
  ModelParams params;
  ArrayLayout layout;
  std::size_t feed = 0;               // 0-based; meaningful for parasitic only
  std::vector<double> loads_ohm;      // per element; empty unless parasitic
  PerformanceReport report;
  std::optional<OptimizationTrace> trace;
};

// Feed-port selection rule for single-feed optimization.
struct FeedPolicy {
  bool sweep = true;      // try every port, keep the best (ties: lowest index)
  std::size_t fixed = 0;  // 0-based port used when sweep is false
};

// Box bounds for each inter-element gap, in wavelengths.
struct GapBounds {
  double min_wavelengths = 0.05;
  double max_wavelengths = 0.5;
};

// Optimizer budget scaled to the array size: both population and iteration
// count grow linearly from the 2-element budget to the 7-element budget.
DeConfig default_de_config(std::size_t n, ArrayMode mode);

// Spacing optimization of a fully driven n-element array: differential
// evolution over the n-1 gaps, scoring end-fire realized gain under
// power-constrained optimal excitation.
DesignResult optimize_active(std::size_t n, const ModelParams& p, const DeConfig& cfg,
                             const GapBounds& bounds = {});

// Spacing + load + feed optimization of a single-feed n-element array. For
// each candidate spacing the reactive loads are derived from the fully driven
// optimum (load = negated driving-point reactance at every passive port), and
// the feed port is chosen by `policy`.
DesignResult optimize_parasitic(std::size_t n, const ModelParams& p, const DeConfig& cfg,
                                const FeedPolicy& policy = {}, const GapBounds& bounds = {});

// Equally spaced, uniformly excited baseline at the given spacing.
DesignResult ula_baseline(std::size_t n, double spacing_wavelengths, const ModelParams& p);

// Evaluate an explicit design. `feed` and `loads_ohm` are required for
// parasitic mode and ignored otherwise.
DesignResult evaluate_design(ArrayMode mode, const ArrayLayout& layout, const ModelParams& p,
                             std::size_t feed = 0, const std::vector<double>& loads_ohm = {});

// How the element currents respond while a design parameter is swept.
//  - design_fixed: hold the currents at their design values (first-order
//    tolerance analysis of the as-built excitation).
//  - resolved: re-solve the loaded network at every sample.
enum class SweepExcitation { design_fixed, resolved };

struct SensitivityOptions {
  int samples = 21;                // per row, endpoints included
  double fraction = 0.05;          // half-width of the sweep, relative
  SweepExcitation excitation = SweepExcitation::design_fixed;
};

// One swept parameter: the sweep interval and the realized-gain extremes
// observed across it.
struct SensitivityRow {
  std::string parameter;  // "X<k>" for port-k load, "d<k>" for element-k position (1-based)
  double value_lo = 0.0;
  double value_hi = 0.0;
  double gain_min_dbi = 0.0;
  double gain_max_dbi = 0.0;
};

// Parameter tolerance study of a single-feed design. Each reactive load is
// swept over +/-fraction of its value; each element position is swept over
// +/-fraction of the gap to its left neighbour (the first element moves by
// +/-fraction of the second element's position, with the array re-anchored to
// the origin). Load rows come first, then position rows, both in port order.
std::vector<SensitivityRow> sensitivity(const DesignResult& design,
                                        const SensitivityOptions& options = {});

enum class PatternCut { azimuth, elevation };

struct PatternPoint {
  double angle_rad = 0.0;
  double realized_gain_dbi = 0.0;
};

// Realized-gain cut through the design's far field with the design currents.
// The azimuth cut sweeps phi over [0, 2*pi) in the array plane; the elevation
// cut sweeps theta over [0, pi] at phi = 0.
std::vector<PatternPoint> pattern_cut(const DesignResult& design, PatternCut cut,
                                      int samples = 361);

}  // namespace endfire
