// Command-line front end for the end-fire dipole array model: spacing/load
// optimization, baseline evaluation, tolerance sweeps, pattern cuts and
// reproduction of the bundled reference tables.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "endfire/reference_data.hpp"
#include "endfire/result_io.hpp"
#include "endfire/workflows.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct OutputOptions {
  std::string path;            // empty = stdout
  std::string format = "json"; // json | csv
};

void add_output_flags(CLI::App* cmd, OutputOptions* out) {
  cmd->add_option("--out", out->path, "Write the result to this file instead of stdout");
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void write_output(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + out.path);
  }
  file << text;
  if (!file) {
    throw std::runtime_error("failed writing output file: " + out.path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

// Wall-clock duration is environment noise, so the library serializer leaves
// it out; the CLI attaches it on top for JSON consumers that want it.
std::string render_design(const endfire::DesignResult& design, const OutputOptions& out,
                          double runtime_ms) {
  if (out.format == "csv") {
    return endfire::design_csv(design) + "\n" + endfire::summary_csv(design);
  }
  nlohmann::json doc = nlohmann::json::parse(endfire::design_json(design));
  doc["timing"]["runtime_ms"] = runtime_ms;
  return doc.dump(2) + "\n";
}

struct DeFlags {
  std::uint64_t seed = 1;
  int np = 0;      // 0 = size-dependent default
  int iters = 0;   // 0 = size-dependent default
  double cr = 0.8;
  double f = 0.7;
  endfire::GapBounds bounds;
};

void add_de_flags(CLI::App* cmd, DeFlags* flags) {
  cmd->add_option("--seed", flags->seed, "Optimizer random seed")->capture_default_str();
  cmd->add_option("--np", flags->np, "Population size (default scales with the array size)");
  cmd->add_option("--iters", flags->iters,
                  "Number of generations (default scales with the array size)");
  cmd->add_option("--cr", flags->cr, "Crossover probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--f-factor", flags->f, "Differential weight")
      ->check(CLI::Range(0.0, 2.0))
      ->capture_default_str();
  cmd->add_option("--gap-min-lambda", flags->bounds.min_wavelengths,
                  "Smallest allowed inter-element gap, wavelengths")
      ->capture_default_str();
  cmd->add_option("--gap-max-lambda", flags->bounds.max_wavelengths,
                  "Largest allowed inter-element gap, wavelengths")
      ->capture_default_str();
}

endfire::DeConfig make_de_config(const DeFlags& flags, std::size_t n, endfire::ArrayMode mode) {
  endfire::DeConfig cfg = endfire::default_de_config(n, mode);
  if (flags.np > 0) cfg.population = flags.np;
  if (flags.iters > 0) cfg.iterations = flags.iters;
  cfg.crossover = flags.cr;
  cfg.weight = flags.f;
  cfg.seed = flags.seed;
  return cfg;
}

int run_app(int argc, char** argv) {
  CLI::App app{"Analytic design tool for end-fire linear arrays of thin-wire dipoles"};
  app.require_subcommand(1);

  // --- optimize-active ------------------------------------------------------
  auto* opt_active = app.add_subcommand(
      "optimize-active", "Optimize element spacing of a fully driven array");
  std::size_t oa_n = 2;
  double oa_freq = 3.5e9;
  DeFlags oa_de;
  OutputOptions oa_out;
  opt_active->add_option("--n", oa_n, "Number of elements")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{32}));
  opt_active->add_option("--freq-hz", oa_freq, "Carrier frequency, Hz")->capture_default_str();
  add_de_flags(opt_active, &oa_de);
  add_output_flags(opt_active, &oa_out);

  // --- optimize-parasitic ---------------------------------------------------
  auto* opt_par = app.add_subcommand(
      "optimize-parasitic", "Optimize spacing, loads and feed of a single-feed array");
  std::size_t op_n = 2;
  double op_freq = 3.5e9;
  std::string op_feed = "sweep";
  DeFlags op_de;
  OutputOptions op_out;
  opt_par->add_option("--n", op_n, "Number of elements")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{32}));
  opt_par->add_option("--freq-hz", op_freq, "Carrier frequency, Hz")->capture_default_str();
  opt_par->add_option("--feed", op_feed,
                      "Feed port: 'sweep' to try every port, or a 1-based port number")
      ->capture_default_str();
  add_de_flags(opt_par, &op_de);
  add_output_flags(opt_par, &op_out);

  // --- ula ------------------------------------------------------------------
  auto* ula = app.add_subcommand(
      "ula", "Evaluate the equally spaced, uniformly excited baseline");
  std::size_t ula_n = 2;
  double ula_freq = 3.5e9;
  double ula_spacing = 0.5;
  OutputOptions ula_out;
  ula->add_option("--n", ula_n, "Number of elements")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  ula->add_option("--freq-hz", ula_freq, "Carrier frequency, Hz")->capture_default_str();
  ula->add_option("--spacing-lambda", ula_spacing, "Element spacing, wavelengths")
      ->capture_default_str();
  add_output_flags(ula, &ula_out);

  // --- evaluate -------------------------------------------------------------
  auto* evaluate = app.add_subcommand("evaluate", "Re-evaluate a saved design document");
  std::string ev_in;
  OutputOptions ev_out;
  evaluate->add_option("--in", ev_in, "Design JSON produced by this tool")
      ->required()
      ->check(CLI::ExistingFile);
  add_output_flags(evaluate, &ev_out);

  // --- sensitivity ----------------------------------------------------------
  auto* sens = app.add_subcommand(
      "sensitivity", "Sweep loads and positions of a single-feed design");
  std::string se_in;
  int se_samples = 21;
  double se_fraction = 0.05;
  bool se_resolve = false;
  OutputOptions se_out;
  sens->add_option("--in", se_in, "Design JSON produced by this tool")
      ->required()
      ->check(CLI::ExistingFile);
  sens->add_option("--samples", se_samples, "Samples per sweep")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  sens->add_option("--fraction", se_fraction, "Relative half-width of each sweep")
      ->check(CLI::Range(1e-9, 0.5))
      ->capture_default_str();
  sens->add_flag("--resolve-currents", se_resolve,
                 "Re-solve the network at every sample instead of holding the "
                 "currents at their design values");
  add_output_flags(sens, &se_out);

  // --- pattern --------------------------------------------------------------
  auto* pattern = app.add_subcommand("pattern", "Realized-gain cut of a saved design");
  std::string pa_in;
  std::string pa_cut = "azimuth";
  int pa_samples = 361;
  OutputOptions pa_out;
  pattern->add_option("--in", pa_in, "Design JSON produced by this tool")
      ->required()
      ->check(CLI::ExistingFile);
  pattern->add_option("--cut", pa_cut, "Cut plane")
      ->check(CLI::IsMember({"azimuth", "elevation"}))
      ->capture_default_str();
  pattern->add_option("--samples", pa_samples, "Number of angular samples")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  add_output_flags(pattern, &pa_out);

  // --- reproduce-tables -----------------------------------------------------
  auto* tables = app.add_subcommand(
      "reproduce-tables", "Evaluate the bundled reference designs and compare");
  OutputOptions ta_out;
  tables->add_option("--out", ta_out.path, "Write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage problems (bad flags, failed checks) exit with 2; --help with 0.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto timed = [](auto&& fn) {
    const auto start = Clock::now();
    auto result = fn();
    const double ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() -
                                                                              start)
            .count();
    return std::pair{std::move(result), ms};
  };

  if (opt_active->parsed()) {
    const endfire::ModelParams params = endfire::ModelParams::at_frequency(oa_freq);
    const endfire::DeConfig cfg = make_de_config(oa_de, oa_n, endfire::ArrayMode::active);
    auto [design, ms] = timed([&] {
      return endfire::optimize_active(oa_n, params, cfg, oa_de.bounds);
    });
    write_output(oa_out, render_design(design, oa_out, ms));
    return 0;
  }

  if (opt_par->parsed()) {
    const endfire::ModelParams params = endfire::ModelParams::at_frequency(op_freq);
    const endfire::DeConfig cfg = make_de_config(op_de, op_n, endfire::ArrayMode::parasitic);
    endfire::FeedPolicy policy;
    if (op_feed != "sweep") {
      std::size_t pos = 0;
      int port = 0;
      try {
        port = std::stoi(op_feed, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != op_feed.size() || port < 1 || static_cast<std::size_t>(port) > op_n) {
        throw std::invalid_argument("--feed must be 'sweep' or a port number in [1, n]");
      }
      policy.sweep = false;
      policy.fixed = static_cast<std::size_t>(port - 1);
    }
    auto [design, ms] = timed([&] {
      return endfire::optimize_parasitic(op_n, params, cfg, policy, op_de.bounds);
    });
    write_output(op_out, render_design(design, op_out, ms));
    return 0;
  }

  if (ula->parsed()) {
    const endfire::ModelParams params = endfire::ModelParams::at_frequency(ula_freq);
    auto [design, ms] = timed([&] {
      return endfire::ula_baseline(ula_n, ula_spacing, params);
    });
    write_output(ula_out, render_design(design, ula_out, ms));
    return 0;
  }

  if (evaluate->parsed()) {
    auto [design, ms] = timed([&] {
      return endfire::design_from_json(read_file(ev_in));
    });
    write_output(ev_out, render_design(design, ev_out, ms));
    return 0;
  }

  if (sens->parsed()) {
    const endfire::DesignResult design = endfire::design_from_json(read_file(se_in));
    endfire::SensitivityOptions options;
    options.samples = se_samples;
    options.fraction = se_fraction;
    options.excitation = se_resolve ? endfire::SweepExcitation::resolved
                                    : endfire::SweepExcitation::design_fixed;
    const std::vector<endfire::SensitivityRow> rows = endfire::sensitivity(design, options);
    write_output(se_out, se_out.format == "csv" ? endfire::sensitivity_csv(rows)
                                                : endfire::sensitivity_json(rows));
    return 0;
  }

  if (pattern->parsed()) {
    const endfire::DesignResult design = endfire::design_from_json(read_file(pa_in));
    const endfire::PatternCut cut = pa_cut == "azimuth" ? endfire::PatternCut::azimuth
                                                        : endfire::PatternCut::elevation;
    const std::vector<endfire::PatternPoint> points =
        endfire::pattern_cut(design, cut, pa_samples);
    write_output(pa_out, pa_out.format == "csv" ? endfire::pattern_csv(points)
                                                : endfire::pattern_json(points));
    return 0;
  }

  if (tables->parsed()) {
    const endfire::ReferenceTables& ref = endfire::reference_tables();
    const endfire::ModelParams params = endfire::ModelParams::at_frequency(ref.frequency_hz);
    char line[256];
    std::string report;

    std::snprintf(line, sizeof(line),
                  "End-fire realized gain (dBi), %.2f GHz half-wave dipole arrays\n"
                  "reference vs this model\n\n",
                  ref.frequency_hz * 1e-9);
    report += line;
    report += "  n   ula(ref)  ula(model)  active(ref)  active(model)  "
              "single-feed(ref)  single-feed(model)\n";
    for (const endfire::ReferenceGainRow& row : ref.gain_comparison) {
      const endfire::DesignResult u =
          endfire::ula_baseline(static_cast<std::size_t>(row.n),
                                ref.ula_spacing_wavelengths, params);

      const endfire::ReferenceActiveDesign* act = ref.active_design(row.n);
      double active_model = 0.0;
      if (act != nullptr) {
        std::vector<double> pos_m(act->positions_wavelengths.size());
        for (std::size_t k = 0; k < pos_m.size(); ++k) {
          pos_m[k] = act->positions_wavelengths[k] * params.wavelength_m();
        }
        active_model = endfire::evaluate_design(endfire::ArrayMode::active,
                                                endfire::ArrayLayout::from_positions(pos_m),
                                                params)
                           .report.realized_gain_dbi;
      }

      const endfire::ReferenceParasiticDesign* par = ref.parasitic_design(row.n);
      double parasitic_model = 0.0;
      if (par != nullptr) {
        std::vector<double> pos_m(par->positions_wavelengths.size());
        for (std::size_t k = 0; k < pos_m.size(); ++k) {
          pos_m[k] = par->positions_wavelengths[k] * params.wavelength_m();
        }
        parasitic_model =
            endfire::evaluate_design(endfire::ArrayMode::parasitic,
                                     endfire::ArrayLayout::from_positions(pos_m), params,
                                     static_cast<std::size_t>(par->feed_port - 1),
                                     par->loads_ohm)
                .report.realized_gain_dbi;
      }

      std::snprintf(line, sizeof(line),
                    "  %d   %6.2f    %6.2f      %6.2f       %6.2f         %6.2f "
                    "           %6.2f\n",
                    row.n, row.ula_dbi, u.report.realized_gain_dbi, row.active_dbi,
                    active_model, row.parasitic_dbi, parasitic_model);
      report += line;
    }

    report += "\nConduction efficiency e_cd, reference full-wave vs this model\n\n";
    report += "  n   active(ref)  active(model)  single-feed(ref)  single-feed(model)\n";
    for (const endfire::ReferenceFullWaveRow& row : ref.full_wave_active) {
      const endfire::ReferenceActiveDesign* act = ref.active_design(row.n);
      const endfire::ReferenceParasiticDesign* par = ref.parasitic_design(row.n);
      const endfire::ReferenceFullWaveRow* par_row = nullptr;
      for (const auto& candidate : ref.full_wave_parasitic) {
        if (candidate.n == row.n) par_row = &candidate;
      }
      if (act == nullptr || par == nullptr || par_row == nullptr) continue;

      std::vector<double> act_pos(act->positions_wavelengths.size());
      for (std::size_t k = 0; k < act_pos.size(); ++k) {
        act_pos[k] = act->positions_wavelengths[k] * params.wavelength_m();
      }
      std::vector<double> par_pos(par->positions_wavelengths.size());
      for (std::size_t k = 0; k < par_pos.size(); ++k) {
        par_pos[k] = par->positions_wavelengths[k] * params.wavelength_m();
      }
      const double act_ecd =
          endfire::evaluate_design(endfire::ArrayMode::active,
                                   endfire::ArrayLayout::from_positions(act_pos), params)
              .report.radiation_efficiency;
      const double par_ecd =
          endfire::evaluate_design(endfire::ArrayMode::parasitic,
                                   endfire::ArrayLayout::from_positions(par_pos), params,
                                   static_cast<std::size_t>(par->feed_port - 1),
                                   par->loads_ohm)
              .report.radiation_efficiency;
      std::snprintf(line, sizeof(line), "  %d   %.4f       %.4f         %.4f            %.4f\n",
                    row.n, row.radiation_efficiency, act_ecd, par_row->radiation_efficiency,
                    par_ecd);
      report += line;
    }

    write_output(ta_out, report);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
