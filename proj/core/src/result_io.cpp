#include "endfire/result_io.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace endfire {
namespace {

using nlohmann::json;

constexpr const char* kDesignSchema = "endfire-design/1";
constexpr const char* kSensitivitySchema = "endfire-sensitivity/1";
constexpr const char* kPatternSchema = "endfire-pattern/1";

// Compact human-readable number for CSV cells. `force_decimal` keeps a ".0"
// on integral values so amplitude columns read as reals.
std::string format_number(double value, bool force_decimal = false) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  std::string out(buffer);
  if (force_decimal && out.find_first_of(".eE") == std::string::npos &&
      out.find_first_of("0123456789") != std::string::npos) {
    out += ".0";
  }
  return out;
}

double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

json number_or_null(double value) {
  if (std::isfinite(value)) {
    return value;
  }
  return nullptr;
}

double number_or_infinity(const json& value) {
  if (value.is_null()) {
    return std::numeric_limits<double>::infinity();
  }
  return value.get<double>();
}

json model_to_json(const ModelParams& p) {
  json model;
  model["frequency_hz"] = p.frequency_hz;
  model["length_m"] = p.length_m;
  model["radius_m"] = p.radius_m;
  // null encodes a perfect conductor (infinite conductivity).
  model["conductivity_s_per_m"] = number_or_null(p.conductivity_s_per_m);
  model["ref_impedance_ohm"] = p.ref_impedance_ohm;
  model["element_power_w"] = p.element_power_w;
  return model;
}

ModelParams model_from_json(const json& model) {
  ModelParams p;
  p.frequency_hz = model.at("frequency_hz").get<double>();
  p.length_m = model.at("length_m").get<double>();
  p.radius_m = model.at("radius_m").get<double>();
  p.conductivity_s_per_m = number_or_infinity(model.at("conductivity_s_per_m"));
  p.ref_impedance_ohm = model.at("ref_impedance_ohm").get<double>();
  p.element_power_w = model.at("element_power_w").get<double>();
  return p;
}

}  // namespace

std::string design_json(const DesignResult& result, int indent) {
  json doc;
  doc["schema"] = kDesignSchema;
  doc["mode"] = to_string(result.mode);
  doc["model"] = model_to_json(result.params);
  doc["positions_wavelengths"] = result.layout.positions_wavelengths(result.params);
  if (result.mode == ArrayMode::parasitic) {
    doc["feed_port"] = result.feed + 1;
    doc["loads_ohm"] = result.loads_ohm;
  }

  json currents = json::array();
  for (Eigen::Index port = 0; port < result.report.currents.size(); ++port) {
    const std::complex<double> i = result.report.currents[port];
    json entry;
    entry["port"] = static_cast<int>(port) + 1;
    entry["magnitude"] = std::abs(i);
    entry["phase_deg"] = rad_to_deg(std::arg(i));
    currents.push_back(std::move(entry));
  }
  doc["currents"] = std::move(currents);

  json perf;
  perf["feasible"] = result.report.feasible;
  perf["directivity_dbi"] = result.report.directivity_dbi;
  perf["gain_dbi"] = result.report.gain_dbi;
  perf["realized_gain_dbi"] = result.report.realized_gain_dbi;
  perf["radiation_efficiency"] = result.report.radiation_efficiency;
  perf["reflection_efficiency"] = result.report.reflection_efficiency;
  perf["input_power_w"] = result.report.input_power_w;
  if (result.report.input_impedance_ohm) {
    json z;
    z["re"] = result.report.input_impedance_ohm->real();
    z["im"] = result.report.input_impedance_ohm->imag();
    perf["input_impedance_ohm"] = std::move(z);
  }
  doc["performance"] = std::move(perf);

  if (result.trace) {
    json opt;
    opt["seed"] = result.trace->seed;
    opt["population"] = result.trace->population;
    opt["iterations"] = result.trace->iterations;
    opt["evaluations"] = result.trace->evaluations;
    opt["best_trace_dbi"] = result.trace->best_dbi;
    doc["optimization"] = std::move(opt);
  }
  return doc.dump(indent) + "\n";
}

DesignResult design_from_json(const std::string& text) {
  const json doc = json::parse(text);
  const std::string schema = doc.at("schema").get<std::string>();
  if (schema != kDesignSchema) {
    throw std::invalid_argument("unsupported design schema: " + schema);
  }
  const ArrayMode mode = array_mode_from_string(doc.at("mode").get<std::string>());
  const ModelParams params = model_from_json(doc.at("model"));
  params.validate();

  const auto positions_wl = doc.at("positions_wavelengths").get<std::vector<double>>();
  std::vector<double> positions_m(positions_wl.size());
  for (std::size_t k = 0; k < positions_wl.size(); ++k) {
    positions_m[k] = positions_wl[k] * params.wavelength_m();
  }
  const ArrayLayout layout = ArrayLayout::from_positions(std::move(positions_m));

  std::size_t feed = 0;
  std::vector<double> loads_ohm;
  if (mode == ArrayMode::parasitic) {
    const int feed_port = doc.at("feed_port").get<int>();
    if (feed_port < 1 || static_cast<std::size_t>(feed_port) > layout.size()) {
      throw std::invalid_argument("feed_port out of range");
    }
    feed = static_cast<std::size_t>(feed_port - 1);
    loads_ohm = doc.at("loads_ohm").get<std::vector<double>>();
  }

  DesignResult result = evaluate_design(mode, layout, params, feed, loads_ohm);

  if (doc.contains("optimization")) {
    const json& opt = doc.at("optimization");
    OptimizationTrace trace;
    trace.seed = opt.at("seed").get<std::uint64_t>();
    trace.population = opt.at("population").get<int>();
    trace.iterations = opt.at("iterations").get<int>();
    trace.evaluations = opt.at("evaluations").get<std::uint64_t>();
    trace.best_dbi = opt.at("best_trace_dbi").get<std::vector<double>>();
    result.trace = std::move(trace);
  }
  return result;
}

std::string design_csv(const DesignResult& result) {
  std::string out = "n,d_lambda,i_mag,i_phase_deg,load_ohm\n";
  const std::vector<double> positions_wl = result.layout.positions_wavelengths(result.params);
  const bool single_feed = result.mode == ArrayMode::parasitic;
  for (std::size_t port = 0; port < positions_wl.size(); ++port) {
    out += std::to_string(port + 1);
    out += ',';
    out += format_number(positions_wl[port]);
    out += ',';
    const bool has_current =
        static_cast<Eigen::Index>(port) < result.report.currents.size() &&
        (!single_feed || port == result.feed);
    if (has_current) {
      const std::complex<double> i = result.report.currents[static_cast<Eigen::Index>(port)];
      out += format_number(std::abs(i), /*force_decimal=*/true);
      out += ',';
      out += format_number(rad_to_deg(std::arg(i)));
    } else {
      out += ',';
    }
    out += ',';
    if (single_feed && port != result.feed && port < result.loads_ohm.size() &&
        result.loads_ohm[port] != 0.0) {
      out += format_number(result.loads_ohm[port]);
    }
    out += '\n';
  }
  return out;
}

std::string summary_csv(const DesignResult& result) {
  std::string out = "metric,value\n";
  const auto row = [&out](const char* metric, const std::string& value) {
    out += metric;
    out += ',';
    out += value;
    out += '\n';
  };
  row("mode", to_string(result.mode));
  row("elements", std::to_string(result.layout.size()));
  row("frequency_hz", format_number(result.params.frequency_hz));
  if (result.mode == ArrayMode::parasitic) {
    row("feed_port", std::to_string(result.feed + 1));
  }
  row("feasible", result.report.feasible ? "true" : "false");
  row("realized_gain_dbi", format_number(result.report.realized_gain_dbi));
  row("gain_dbi", format_number(result.report.gain_dbi));
  row("directivity_dbi", format_number(result.report.directivity_dbi));
  row("radiation_efficiency", format_number(result.report.radiation_efficiency));
  row("reflection_efficiency", format_number(result.report.reflection_efficiency));
  row("input_power_w", format_number(result.report.input_power_w));
  if (result.report.input_impedance_ohm) {
    row("input_resistance_ohm", format_number(result.report.input_impedance_ohm->real()));
    row("input_reactance_ohm", format_number(result.report.input_impedance_ohm->imag()));
  }
  return out;
}

std::string sensitivity_csv(const std::vector<SensitivityRow>& rows) {
  std::string out = "parameter,value_lo,value_hi,gain_min_dbi,gain_max_dbi\n";
  for (const SensitivityRow& row : rows) {
    out += row.parameter;
    out += ',';
    out += format_number(row.value_lo);
    out += ',';
    out += format_number(row.value_hi);
    out += ',';
    out += format_number(row.gain_min_dbi);
    out += ',';
    out += format_number(row.gain_max_dbi);
    out += '\n';
  }
  return out;
}

std::string sensitivity_json(const std::vector<SensitivityRow>& rows, int indent) {
  json doc;
  doc["schema"] = kSensitivitySchema;
  json out_rows = json::array();
  for (const SensitivityRow& row : rows) {
    json entry;
    entry["parameter"] = row.parameter;
    entry["value_lo"] = row.value_lo;
    entry["value_hi"] = row.value_hi;
    entry["gain_min_dbi"] = row.gain_min_dbi;
    entry["gain_max_dbi"] = row.gain_max_dbi;
    out_rows.push_back(std::move(entry));
  }
  doc["rows"] = std::move(out_rows);
  return doc.dump(indent) + "\n";
}

std::string pattern_csv(const std::vector<PatternPoint>& points) {
  std::string out = "angle_deg,realized_gain_dbi\n";
  for (const PatternPoint& point : points) {
    out += format_number(rad_to_deg(point.angle_rad));
    out += ',';
    out += format_number(point.realized_gain_dbi);
    out += '\n';
  }
  return out;
}

std::string pattern_json(const std::vector<PatternPoint>& points, int indent) {
  json doc;
  doc["schema"] = kPatternSchema;
  json out_points = json::array();
  for (const PatternPoint& point : points) {
    json entry;
    entry["angle_rad"] = point.angle_rad;
    entry["realized_gain_dbi"] = point.realized_gain_dbi;
    out_points.push_back(std::move(entry));
  }
  doc["points"] = std::move(out_points);
  return doc.dump(indent) + "\n";
}

}  // namespace endfire
