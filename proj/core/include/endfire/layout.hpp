#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "endfire/model_params.hpp"

namespace endfire {

// Far-field direction in standard spherical angles (radians). The array axis
// runs along x; the dipole axes run along z.
struct Direction {
  double theta;
  double phi;
};

// Boresight of an end-fire design: in the array plane, along the array axis.
inline constexpr Direction end_fire_direction{std::numbers::pi / 2.0, 0.0};

// Element positions along the array axis, in meters. Invariant: at least one
// element, the first at the origin, positions strictly increasing.
class ArrayLayout {
 public:
  // Single element at the origin.
  ArrayLayout() : positions_{0.0} {}

  // `positions_m` must start at 0 and increase strictly.
  static ArrayLayout from_positions(std::vector<double> positions_m);

  // Builds positions from the n-1 inter-element gaps (all positive).
  static ArrayLayout from_gaps(const std::vector<double>& gaps_m);

  // Equally spaced elements.
  static ArrayLayout uniform(std::size_t n, double spacing_m);

  // Accepts any strictly increasing positions and shifts them so the first
  // lands at the origin. Far-field magnitudes are translation-invariant, so
  // this loses nothing.
  static ArrayLayout translated(std::vector<double> positions_m);

  std::size_t size() const { return positions_.size(); }
  const std::vector<double>& positions_m() const { return positions_; }
  std::vector<double> gaps_m() const;
  double aperture_m() const { return positions_.back(); }
  std::vector<double> positions_wavelengths(const ModelParams& p) const;

 private:
  explicit ArrayLayout(std::vector<double> positions) : positions_(std::move(positions)) {}
  std::vector<double> positions_;
};

}  // namespace endfire
