#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

namespace gravloc {

/// Least-squares slope of ln|y| against ln x. x and y must be nonzero and of
/// matching length >= 2. Used for the power-law exponent checks (force ~ d^-2,
/// localization ~ mu^-3 / mu^-1/2).
inline double fit_loglog_slope(std::span<const double> x,
                               std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::domain_error("fit_loglog_slope needs matching arrays of >= 2 points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(std::abs(x[i]));
    const double ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace gravloc
