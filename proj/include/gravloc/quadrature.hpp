#pragma once

#include <functional>

namespace gravloc {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // absolute error estimate
  int evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod 15(7) integration of f over [a, b].
///
/// The interval is first split into initial_panels equal panels (use the
/// integrand's oscillation count as a hint), then the panel with the largest
/// error estimate is bisected until the summed estimate meets
/// max(abs_tol, rel_tol * |integral|) or max_panels is reached; the latter
/// throws NumericError carrying the achieved estimate.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol = 1e-10,
                                    double abs_tol = 0.0,
                                    int initial_panels = 1,
                                    int max_panels = 20000);

}  // namespace gravloc
