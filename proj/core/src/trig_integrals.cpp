#include "endfire/trig_integrals.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace endfire {
namespace {

constexpr double series_cutoff = 4.0;
constexpr double half_pi = std::numbers::pi / 2.0;

// Maclaurin series for Si and Cin; Ci(x) = gamma + ln(x) - Cin(x).
// Converges fast below the cutoff: at x = 4 the largest term is ~1.6, so
// cancellation costs at most one digit.
TrigIntegrals by_series(double x) {
  const double x2 = x * x;
  double si_term = x;  // (-1)^k x^(2k+1) / (2k+1)!
  double si = x;
  double cos_term = 1.0;  // (-1)^k x^(2k) / (2k)!
  double cin = 0.0;
  for (int k = 1; k < 64; ++k) {
    cos_term *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
    cin -= cos_term / (2.0 * k);
    si_term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
    si += si_term / (2.0 * k + 1.0);
    if (std::abs(si_term) + std::abs(cos_term) < 1e-18) {
      break;
    }
  }
  return {si, std::numbers::egamma + std::log(x) - cin};
}

// Modified Lentz evaluation of the continued fraction for E1(z), z = j x:
//   E1(z) = exp(-z) / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...)))).
// Reliable on the imaginary axis for x above ~2; used beyond the series cutoff.
std::complex<double> e1_continued_fraction(double x) {
  const std::complex<double> z{0.0, x};
  std::complex<double> b = z + 1.0;
  std::complex<double> c = 1.0 / std::numeric_limits<double>::min();
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 1; i <= 400; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) {
      return h * std::exp(-z);
    }
  }
  throw std::runtime_error("exp_integral_e1_imag: continued fraction failed to converge");
}

}  // namespace

TrigIntegrals sin_cos_integrals(double x) {
  if (x < 0.0 || std::isnan(x)) {
    throw std::domain_error("sin_cos_integrals: argument must be non-negative");
  }
  if (x == 0.0) {
    return {0.0, -std::numeric_limits<double>::infinity()};
  }
  if (x <= series_cutoff) {
    return by_series(x);
  }
  const std::complex<double> e1 = e1_continued_fraction(x);
  return {half_pi + e1.imag(), -e1.real()};
}

std::complex<double> exp_integral_e1_imag(double y) {
  if (y <= 0.0 || std::isnan(y)) {
    throw std::domain_error("exp_integral_e1_imag: argument must be positive");
  }
  if (y <= series_cutoff) {
    const TrigIntegrals t = by_series(y);
    return {-t.ci, t.si - half_pi};
  }
  return e1_continued_fraction(y);
}

}  // namespace endfire
