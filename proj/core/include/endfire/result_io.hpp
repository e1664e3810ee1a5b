#pragma once

#include <string>
#include <vector>

#include "endfire/workflows.hpp"

namespace endfire {

// Serializations are deterministic: the same design always produces the same
// bytes (no timestamps, no environment-dependent fields).

// Complete design document (schema "endfire-design/1"): model parameters,
// geometry, feed/loads, solved currents, performance figures and, when
// present, the optimizer trace.
std::string design_json(const DesignResult& result, int indent = 2);

// Inverse of design_json for the design definition: model, mode, geometry,
// feed and loads are restored and the performance report is re-evaluated.
DesignResult design_from_json(const std::string& text);

// Per-element table:
//   n,d_lambda,i_mag,i_phase_deg,load_ohm
// Ports are numbered from 1. Single-feed designs list the drive current only
// on the feed row and a load only on loaded rows; fully driven designs list
// every port current and no loads.
std::string design_csv(const DesignResult& result);

// Scalar figures of merit as "metric,value" rows.
std::string summary_csv(const DesignResult& result);

std::string sensitivity_csv(const std::vector<SensitivityRow>& rows);
std::string sensitivity_json(const std::vector<SensitivityRow>& rows, int indent = 2);

std::string pattern_csv(const std::vector<PatternPoint>& points);
std::string pattern_json(const std::vector<PatternPoint>& points, int indent = 2);

}  // namespace endfire
