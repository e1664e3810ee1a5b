#include "endfire/layout.hpp"

#include <cmath>
#include <stdexcept>

namespace endfire {
namespace {

void check_increasing(const std::vector<double>& positions) {
  if (positions.empty()) {
    throw std::invalid_argument("ArrayLayout: need at least one element");
  }
  for (double d : positions) {
    if (!std::isfinite(d)) {
      throw std::invalid_argument("ArrayLayout: positions must be finite");
    }
  }
  for (std::size_t i = 1; i < positions.size(); ++i) {
    if (!(positions[i] > positions[i - 1])) {
      throw std::invalid_argument("ArrayLayout: positions must increase strictly");
    }
  }
}

}  // namespace

ArrayLayout ArrayLayout::from_positions(std::vector<double> positions_m) {
  check_increasing(positions_m);
  if (std::abs(positions_m.front()) > 1e-12) {
    throw std::invalid_argument("ArrayLayout: first element must sit at the origin");
  }
  positions_m.front() = 0.0;
  return ArrayLayout(std::move(positions_m));
}

ArrayLayout ArrayLayout::from_gaps(const std::vector<double>& gaps_m) {
  std::vector<double> positions(gaps_m.size() + 1);
  positions[0] = 0.0;
  for (std::size_t i = 0; i < gaps_m.size(); ++i) {
    if (!(gaps_m[i] > 0.0) || !std::isfinite(gaps_m[i])) {
      throw std::invalid_argument("ArrayLayout: gaps must be positive and finite");
    }
    positions[i + 1] = positions[i] + gaps_m[i];
  }
  return ArrayLayout(std::move(positions));
}

ArrayLayout ArrayLayout::uniform(std::size_t n, double spacing_m) {
  if (n == 0) {
    throw std::invalid_argument("ArrayLayout: need at least one element");
  }
  if (n > 1 && !(spacing_m > 0.0)) {
    throw std::invalid_argument("ArrayLayout: spacing must be positive");
  }
  std::vector<double> positions(n);
  for (std::size_t i = 0; i < n; ++i) {
    positions[i] = static_cast<double>(i) * spacing_m;
  }
  return ArrayLayout(std::move(positions));
}

ArrayLayout ArrayLayout::translated(std::vector<double> positions_m) {
  check_increasing(positions_m);
  const double front = positions_m.front();
  for (double& d : positions_m) {
    d -= front;
  }
  positions_m.front() = 0.0;
  return ArrayLayout(std::move(positions_m));
}

std::vector<double> ArrayLayout::gaps_m() const {
  std::vector<double> gaps(positions_.size() - 1);
  for (std::size_t i = 1; i < positions_.size(); ++i) {
    gaps[i - 1] = positions_[i] - positions_[i - 1];
  }
  return gaps;
}

std::vector<double> ArrayLayout::positions_wavelengths(const ModelParams& p) const {
  std::vector<double> out(positions_.size());
  const double lambda = p.wavelength_m();
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    out[i] = positions_[i] / lambda;
  }
  return out;
}

}  // namespace endfire
