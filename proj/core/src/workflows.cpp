#include "endfire/workflows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "endfire/excitation.hpp"
#include "endfire/far_field.hpp"
#include "endfire/network.hpp"

namespace endfire {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kPatternFloorDbi = -120.0;

double to_dbi(double linear) { return 10.0 * std::log10(std::max(linear, 1e-30)); }

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

// Realized gain of a loaded single-feed network that is already assembled,
// solving for the port currents. Empty when the feed sees a non-positive
// input resistance.
std::optional<double> loaded_network_gre_dbi(const CouplingMatrices& cm,
                                             const ArrayLayout& layout, std::size_t feed,
                                             const ModelParams& p) {
  const Eigen::VectorXcd currents = parasitic_currents(cm, feed);
  const Eigen::VectorXcd voltages = cm.z_total * currents;
  const auto f = static_cast<Eigen::Index>(feed);
  const std::complex<double> z_in = voltages[f] / currents[f];
  if (!positive_finite(z_in.real())) {
    return std::nullopt;
  }
  const double gain = gain_toward(cm, layout, currents, end_fire_direction, p);
  const double e_r = match_efficiency(z_in, p.ref_impedance_ohm);
  return to_dbi(gain * e_r);
}

// Best single-feed conversion of one candidate spacing: derive loads from the
// fully driven optimum, then score each allowed feed port.
struct SingleFeedChoice {
  double gre_dbi = kNan;
  std::size_t feed = 0;
  std::vector<double> loads_ohm;
};

std::optional<SingleFeedChoice> best_single_feed(const ArrayLayout& layout, const ModelParams& p,
                                                 const FeedPolicy& policy) {
  const CouplingMatrices cm = assemble_active(layout, p);
  Eigen::VectorXcd currents;
  try {
    currents = optimal_currents(cm, layout, end_fire_direction, p);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
  const Eigen::VectorXcd z_drive = driving_impedances(cm.z_total, currents);
  for (Eigen::Index port = 0; port < z_drive.size(); ++port) {
    if (!positive_finite(z_drive[port].real())) {
      return std::nullopt;
    }
  }

  const std::size_t n = layout.size();
  std::optional<SingleFeedChoice> best;
  for (std::size_t feed = 0; feed < n; ++feed) {
    if (!policy.sweep && feed != policy.fixed) {
      continue;
    }
    std::vector<double> loads = loads_from_impedances(z_drive, feed);
    CouplingMatrices loaded{cm.z_radiation, cm.z_total};
    for (std::size_t port = 0; port < n; ++port) {
      if (port == feed) {
        continue;
      }
      const auto k = static_cast<Eigen::Index>(port);
      loaded.z_total(k, k) += std::complex<double>(0.0, loads[port]);
    }
    const std::optional<double> gre = loaded_network_gre_dbi(loaded, layout, feed, p);
    if (!gre) {
      continue;
    }
    if (!best || *gre > best->gre_dbi) {
      best = SingleFeedChoice{*gre, feed, std::move(loads)};
    }
  }
  return best;
}

OptimizationTrace make_trace(const DeResult& de, const DeConfig& cfg) {
  OptimizationTrace trace;
  trace.best_dbi = de.best_trace;
  trace.evaluations = de.evaluations;
  trace.seed = cfg.seed;
  trace.population = cfg.population;
  trace.iterations = cfg.iterations;
  return trace;
}

ArrayLayout layout_from_gap_genome(const Eigen::VectorXd& genome, const ModelParams& p) {
  std::vector<double> gaps_m(static_cast<std::size_t>(genome.size()));
  for (Eigen::Index j = 0; j < genome.size(); ++j) {
    gaps_m[static_cast<std::size_t>(j)] = genome[j] * p.wavelength_m();
  }
  return ArrayLayout::from_gaps(gaps_m);
}

void check_optimization_inputs(std::size_t n, const ModelParams& p, const GapBounds& bounds) {
  if (n < 2) {
    throw std::invalid_argument("spacing optimization needs at least 2 elements");
  }
  p.validate();
  if (!(bounds.min_wavelengths > 0.0) || !(bounds.max_wavelengths >= bounds.min_wavelengths)) {
    throw std::invalid_argument("gap bounds must satisfy 0 < min <= max");
  }
}

}  // namespace

std::string to_string(ArrayMode mode) {
  switch (mode) {
    case ArrayMode::active:
      return "active";
    case ArrayMode::parasitic:
      return "parasitic";
    case ArrayMode::ula:
      return "ula";
  }
  throw std::invalid_argument("unknown array mode");
}

ArrayMode array_mode_from_string(const std::string& name) {
  if (name == "active") return ArrayMode::active;
  if (name == "parasitic") return ArrayMode::parasitic;
  if (name == "ula") return ArrayMode::ula;
  throw std::invalid_argument("unknown array mode: " + name);
}

DeConfig default_de_config(std::size_t n, ArrayMode mode) {
  if (n < 2) {
    throw std::invalid_argument("default_de_config: need at least 2 elements");
  }
  if (mode == ArrayMode::ula) {
    throw std::invalid_argument("default_de_config: the uniform baseline is not optimized");
  }
  // Linear budget ramp between the smallest (n = 2) and largest (n = 7)
  // recommended settings; larger arrays extrapolate on the same line.
  const double t = (static_cast<double>(n) - 2.0) / 5.0;
  DeConfig cfg;
  if (mode == ArrayMode::active) {
    cfg.population = static_cast<int>(std::lround((5.0 + 10.0 * t) * static_cast<double>(n)));
    cfg.iterations = static_cast<int>(std::lround(20.0 + 130.0 * t));
  } else {
    cfg.population = static_cast<int>(std::lround((5.0 + 8.0 * t) * static_cast<double>(n)));
    cfg.iterations = static_cast<int>(std::lround(20.0 + 80.0 * t));
  }
  return cfg;
}

DesignResult optimize_active(std::size_t n, const ModelParams& p, const DeConfig& cfg,
                             const GapBounds& bounds) {
  check_optimization_inputs(n, p, bounds);
  const auto dim = static_cast<Eigen::Index>(n - 1);
  const Eigen::VectorXd lower = Eigen::VectorXd::Constant(dim, bounds.min_wavelengths);
  const Eigen::VectorXd upper = Eigen::VectorXd::Constant(dim, bounds.max_wavelengths);

  const auto fitness = [&](const Eigen::VectorXd& genome) {
    const ArrayLayout layout = layout_from_gap_genome(genome, p);
    const PerformanceReport report = evaluate_active(layout, p);
    return report.feasible ? report.realized_gain_dbi : kNan;
  };
  const DeResult de = de_maximize(fitness, lower, upper, cfg);

  DesignResult result;
  result.mode = ArrayMode::active;
  result.params = p;
  result.layout = layout_from_gap_genome(de.best, p);
  result.report = evaluate_active(result.layout, p);
  result.trace = make_trace(de, cfg);
  return result;
}

DesignResult optimize_parasitic(std::size_t n, const ModelParams& p, const DeConfig& cfg,
                                const FeedPolicy& policy, const GapBounds& bounds) {
  check_optimization_inputs(n, p, bounds);
  if (!policy.sweep && policy.fixed >= n) {
    throw std::invalid_argument("optimize_parasitic: fixed feed index out of range");
  }
  const auto dim = static_cast<Eigen::Index>(n - 1);
  const Eigen::VectorXd lower = Eigen::VectorXd::Constant(dim, bounds.min_wavelengths);
  const Eigen::VectorXd upper = Eigen::VectorXd::Constant(dim, bounds.max_wavelengths);

  const auto fitness = [&](const Eigen::VectorXd& genome) {
    const ArrayLayout layout = layout_from_gap_genome(genome, p);
    const std::optional<SingleFeedChoice> choice = best_single_feed(layout, p, policy);
    return choice ? choice->gre_dbi : kNan;
  };
  const DeResult de = de_maximize(fitness, lower, upper, cfg);

  const ArrayLayout layout = layout_from_gap_genome(de.best, p);
  const std::optional<SingleFeedChoice> choice = best_single_feed(layout, p, policy);
  if (!choice) {
    throw std::runtime_error("optimize_parasitic: no feasible single-feed design found");
  }

  DesignResult result;
  result.mode = ArrayMode::parasitic;
  result.params = p;
  result.layout = layout;
  result.feed = choice->feed;
  result.loads_ohm = choice->loads_ohm;
  result.report = evaluate_parasitic(layout, choice->feed, choice->loads_ohm, p);
  result.trace = make_trace(de, cfg);
  return result;
}

DesignResult ula_baseline(std::size_t n, double spacing_wavelengths, const ModelParams& p) {
  if (n < 1) {
    throw std::invalid_argument("ula_baseline: need at least 1 element");
  }
  if (!(spacing_wavelengths > 0.0)) {
    throw std::invalid_argument("ula_baseline: spacing must be positive");
  }
  p.validate();
  DesignResult result;
  result.mode = ArrayMode::ula;
  result.params = p;
  result.layout = ArrayLayout::uniform(n, spacing_wavelengths * p.wavelength_m());
  result.report = evaluate_ula(result.layout, p);
  return result;
}

DesignResult evaluate_design(ArrayMode mode, const ArrayLayout& layout, const ModelParams& p,
                             std::size_t feed, const std::vector<double>& loads_ohm) {
  p.validate();
  DesignResult result;
  result.mode = mode;
  result.params = p;
  result.layout = layout;
  switch (mode) {
    case ArrayMode::active:
      result.report = evaluate_active(layout, p);
      break;
    case ArrayMode::ula:
      result.report = evaluate_ula(layout, p);
      break;
    case ArrayMode::parasitic:
      result.feed = feed;
      result.loads_ohm = loads_ohm;
      result.report = evaluate_parasitic(layout, feed, loads_ohm, p);
      break;
  }
  return result;
}

namespace {

// Realized gain of a perturbed single-feed configuration with the excitation
// held at its design values: the perturbed network sees the frozen currents,
// which shifts the feed impedance and the pattern but skips the re-solve.
double frozen_excitation_gre_dbi(const ArrayLayout& layout, std::size_t feed,
                                 const std::vector<double>& loads_ohm,
                                 const Eigen::VectorXcd& design_currents, const ModelParams& p) {
  const CouplingMatrices cm = assemble_parasitic(layout, feed, loads_ohm, p);
  const Eigen::VectorXcd voltages = cm.z_total * design_currents;
  const auto f = static_cast<Eigen::Index>(feed);
  const std::complex<double> z_in = voltages[f] / design_currents[f];
  const double gain = gain_toward(cm, layout, design_currents, end_fire_direction, p);
  const double e_r = match_efficiency(z_in, p.ref_impedance_ohm);
  return to_dbi(gain * e_r);
}

double swept_sample_gre_dbi(const DesignResult& design, const ArrayLayout& layout,
                            const std::vector<double>& loads_ohm, SweepExcitation excitation) {
  if (excitation == SweepExcitation::design_fixed) {
    return frozen_excitation_gre_dbi(layout, design.feed, loads_ohm, design.report.currents,
                                     design.params);
  }
  const PerformanceReport report =
      evaluate_parasitic(layout, design.feed, loads_ohm, design.params);
  return report.feasible ? report.realized_gain_dbi : kNan;
}

SensitivityRow finish_row(std::string parameter, double value_a, double value_b,
                          const std::vector<double>& gains) {
  double gain_min = kNan;
  double gain_max = kNan;
  for (const double g : gains) {
    if (std::isnan(g)) {
      continue;
    }
    if (std::isnan(gain_min) || g < gain_min) gain_min = g;
    if (std::isnan(gain_max) || g > gain_max) gain_max = g;
  }
  if (std::isnan(gain_min)) {
    throw std::runtime_error("sensitivity: no feasible sample in sweep of " + parameter);
  }
  SensitivityRow row;
  row.parameter = std::move(parameter);
  row.value_lo = std::min(value_a, value_b);
  row.value_hi = std::max(value_a, value_b);
  row.gain_min_dbi = gain_min;
  row.gain_max_dbi = gain_max;
  return row;
}

}  // namespace

std::vector<SensitivityRow> sensitivity(const DesignResult& design,
                                        const SensitivityOptions& options) {
  if (design.mode != ArrayMode::parasitic) {
    throw std::invalid_argument("sensitivity: only single-feed designs are supported");
  }
  if (options.samples < 2) {
    throw std::invalid_argument("sensitivity: need at least 2 samples per sweep");
  }
  if (!(options.fraction > 0.0)) {
    throw std::invalid_argument("sensitivity: fraction must be positive");
  }
  const std::size_t n = design.layout.size();
  if (n < 2) {
    throw std::invalid_argument("sensitivity: need at least 2 elements");
  }
  if (design.loads_ohm.size() != n || !design.report.feasible ||
      design.report.currents.size() != static_cast<Eigen::Index>(n)) {
    throw std::invalid_argument("sensitivity: design is incomplete");
  }

  const std::vector<double>& positions0 = design.layout.positions_m();
  const double lambda = design.params.wavelength_m();
  const int samples = options.samples;
  std::vector<SensitivityRow> rows;

  // Reactive loads, in port order.
  for (std::size_t port = 0; port < n; ++port) {
    if (port == design.feed) {
      continue;
    }
    const std::string name = "X" + std::to_string(port + 1);
    const double nominal = design.loads_ohm[port];
    if (nominal == 0.0) {
      // A relative sweep of a zero load has no width.
      const double g = swept_sample_gre_dbi(design, design.layout, design.loads_ohm,
                                            options.excitation);
      rows.push_back(finish_row(name, 0.0, 0.0, {g}));
      continue;
    }
    const double lo = nominal * (1.0 - options.fraction);
    const double hi = nominal * (1.0 + options.fraction);
    std::vector<double> gains;
    gains.reserve(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) {
      const double value = lo + (hi - lo) * static_cast<double>(s) /
                                    static_cast<double>(samples - 1);
      std::vector<double> loads = design.loads_ohm;
      loads[port] = value;
      gains.push_back(swept_sample_gre_dbi(design, design.layout, loads, options.excitation));
    }
    rows.push_back(finish_row(name, lo, hi, gains));
  }

  // Element positions, in element order. Each element moves alone over
  // +/-fraction of the gap to its left neighbour; the first element (which
  // anchors the array) moves over +/-fraction of its neighbour's position and
  // the array is shifted back to the origin.
  for (std::size_t elem = 0; elem < n; ++elem) {
    const std::string name = "d" + std::to_string(elem + 1);
    const double gap = elem == 0 ? positions0[1] : positions0[elem] - positions0[elem - 1];
    const double half_width = options.fraction * gap;
    std::vector<double> gains;
    gains.reserve(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) {
      const double offset = -half_width + 2.0 * half_width * static_cast<double>(s) /
                                              static_cast<double>(samples - 1);
      std::vector<double> positions = positions0;
      positions[elem] += offset;
      const ArrayLayout layout = ArrayLayout::translated(positions);
      gains.push_back(swept_sample_gre_dbi(design, layout, design.loads_ohm,
                                           options.excitation));
    }
    const double center = elem == 0 ? 0.0 : positions0[elem];
    rows.push_back(finish_row(name, (center - half_width) / lambda,
                              (center + half_width) / lambda, gains));
  }
  return rows;
}

std::vector<PatternPoint> pattern_cut(const DesignResult& design, PatternCut cut, int samples) {
  if (samples < 2) {
    throw std::invalid_argument("pattern_cut: need at least 2 samples");
  }
  if (!design.report.feasible ||
      design.report.currents.size() != static_cast<Eigen::Index>(design.layout.size())) {
    throw std::invalid_argument("pattern_cut: design is incomplete");
  }
  const CouplingMatrices cm =
      design.mode == ArrayMode::parasitic
          ? assemble_parasitic(design.layout, design.feed, design.loads_ohm, design.params)
          : assemble_active(design.layout, design.params);
  const Eigen::VectorXcd& currents = design.report.currents;
  const double e_r = design.report.reflection_efficiency;

  std::vector<PatternPoint> points;
  points.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    double angle = 0.0;
    Direction dir{0.0, 0.0};
    if (cut == PatternCut::azimuth) {
      angle = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(samples);
      dir = Direction{std::numbers::pi / 2.0, angle};
    } else {
      angle = std::numbers::pi * static_cast<double>(s) / static_cast<double>(samples - 1);
      dir = Direction{angle, 0.0};
    }
    const double gain = gain_toward(cm, design.layout, currents, dir, design.params);
    const double dbi = std::max(to_dbi(gain * e_r), kPatternFloorDbi);
    points.push_back(PatternPoint{angle, dbi});
  }
  return points;
}

}  // namespace endfire
