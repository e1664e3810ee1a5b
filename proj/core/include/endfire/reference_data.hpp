#pragma once

#include <string>
#include <vector>

namespace endfire {

// Bundled reference designs and performance figures for the validated
// 3.5 GHz half-wavelength-dipole configuration. They back the regression and
// acceptance tests and the table-reproduction command of the CLI.

struct ReferenceActiveDesign {
  int n = 0;
  std::vector<double> positions_wavelengths;
  std::vector<double> current_magnitude;   // normalized to the largest port
  std::vector<double> current_phase_deg;
};

struct ReferenceParasiticDesign {
  int n = 0;
  std::vector<double> positions_wavelengths;
  int feed_port = 0;                // 1-based
  std::vector<double> loads_ohm;    // one per element, 0 at the feed
};

struct ReferenceGainRow {
  int n = 0;
  double ula_dbi = 0.0;
  double active_dbi = 0.0;
  double parasitic_dbi = 0.0;
};

struct ReferenceFullWaveRow {
  int n = 0;
  double directivity_dbi = 0.0;
  double realized_gain_dbi = 0.0;
  double radiation_efficiency = 0.0;
  double total_efficiency = 0.0;
};

struct ReferenceSensitivityRow {
  std::string parameter;
  double value_lo = 0.0;
  double value_hi = 0.0;
  double gain_lo_dbi = 0.0;
  double gain_hi_dbi = 0.0;
};

struct ReferenceTables {
  double frequency_hz = 0.0;
  double ula_spacing_wavelengths = 0.0;
  std::vector<ReferenceActiveDesign> active_designs;
  std::vector<ReferenceParasiticDesign> parasitic_designs;
  std::vector<ReferenceGainRow> gain_comparison;
  std::vector<ReferenceFullWaveRow> full_wave_active;
  std::vector<ReferenceFullWaveRow> full_wave_parasitic;
  std::vector<ReferenceSensitivityRow> sensitivity_five_element;

  // nullptr when no row exists for that element count.
  const ReferenceActiveDesign* active_design(int n) const;
  const ReferenceParasiticDesign* parasitic_design(int n) const;
  const ReferenceGainRow* gain_row(int n) const;
};

// Parsed once, cached for the lifetime of the process.
const ReferenceTables& reference_tables();

}  // namespace endfire
