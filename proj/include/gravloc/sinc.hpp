#pragma once

#include <cmath>

namespace gravloc {

/// sin(x)/x with sinc(0) = 1.
inline double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(x) / x;
}

/// d/dx sinc(x) = (x cos x - sin x) / x^2; series below |x| = 0.1 where the
/// direct form cancels.
inline double sinc_prime(double x) {
  const double ax = std::abs(x);
  if (ax < 0.1) {
    const double x2 = x * x;
    return x * (-1.0 / 3.0 + x2 * (1.0 / 30.0 + x2 * (-1.0 / 840.0 + x2 / 45360.0)));
  }
  return (x * std::cos(x) - std::sin(x)) / (x * x);
}

}  // namespace gravloc
