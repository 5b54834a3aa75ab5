// Test-side reference computations, kept independent of the library paths
// they check: a plain adaptive Simpson integrator, real-space (shell-theorem)
// self-energy, closed-form two-source energy/force, asymptotic roots of the
// stationarity condition, and a finite-difference kinetic-energy oracle.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "gravloc/constants.hpp"

namespace oracles {

inline constexpr double kPi = std::numbers::pi;

// --- adaptive Simpson -------------------------------------------------------

inline double simpson_step(const std::function<double(double)>& f, double a,
                           double fa, double b, double fb, double m, double fm,
                           double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double abs_tol,
                               int depth = 40) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, abs_tol, depth);
}

// --- real-space Newtonian self-energy ---------------------------------------

// int int rho(x) rho(y) / |x-y| d3x d3y for a spherically symmetric density,
// via the shell theorem: the potential factor at radius r is
// M(<r)/r + 4 pi int_r^rmax s rho(s) ds. Tolerances are tuned for O(1)
// masses and radii, which is all the tests use.
inline double density_pair_integral(const std::function<double(double)>& rho,
                                    double r_max) {
  auto inner_mass = [&](double r) {
    return 4.0 * kPi *
           adaptive_simpson([&](double s) { return s * s * rho(s); }, 0.0, r,
                            1e-11);
  };
  auto outer = [&](double r) {
    return 4.0 * kPi *
           adaptive_simpson([&](double s) { return s * rho(s); }, r, r_max,
                            1e-11);
  };
  auto integrand = [&](double r) {
    if (r == 0.0) return 0.0;
    return 4.0 * kPi * r * r * rho(r) * (inner_mass(r) / r + outer(r));
  };
  return adaptive_simpson(integrand, 0.0, r_max, 1e-9, 24);
}

// --- two-source closed forms -------------------------------------------------

// Cross-term energy of two Gaussian-regularized points, from the closed-form
// evaluation of the momentum integral: -2 G m1 m2 erf(d / 2 sigma) / d.
inline double two_source_energy(double m1, double m2, double sigma, double d) {
  const double g = gravloc::constants().G;
  if (d == 0.0) return -2.0 * g * m1 * m2 / (std::sqrt(kPi) * sigma);
  return -2.0 * g * m1 * m2 * std::erf(d / (2.0 * sigma)) / d;
}

inline double two_source_force(double m1, double m2, double sigma, double d) {
  const double g = gravloc::constants().G;
  const double z = d / (2.0 * sigma);
  return 2.0 * g * m1 * m2 *
         (std::exp(-z * z) / (std::sqrt(kPi) * sigma * d) -
          std::erf(z) / (d * d));
}

// --- asymptotic roots of (1+x^2)^3 = K x^8 -----------------------------------

inline double x_root_small_k(double k) {
  double x = 1.0 / std::sqrt(k);
  for (int i = 0; i < 3; ++i) {
    x = std::pow(1.0 + 1.0 / (x * x), 1.5) / std::sqrt(k);
  }
  return x;
}

inline double x_root_large_k(double k) {
  double x = std::pow(k, -0.125);
  for (int i = 0; i < 3; ++i) {
    x = std::pow(1.0 + x * x, 0.375) * std::pow(k, -0.125);
  }
  return x;
}

// --- kinetic-energy expectation ----------------------------------------------

// -(hbar^2 / 2M) * int 4 pi r^2 Psi (Psi'' + 2 Psi'/r) dr with the Laplacian
// taken by central finite differences of the Gaussian wave function.
inline double kinetic_expectation_fd(double mass, double lambda) {
  const double norm =
      1.0 / (std::pow(2.0 * kPi, 0.75) * std::pow(lambda, 1.5));
  auto psi = [=](double r) {
    return norm * std::exp(-r * r / (4.0 * lambda * lambda));
  };
  const double h = 1e-4 * lambda;
  auto laplacian = [=](double r) {
    const double second = (psi(r + h) - 2.0 * psi(r) + psi(r - h)) / (h * h);
    const double first = (psi(r + h) - psi(r - h)) / (2.0 * h);
    return second + 2.0 * first / r;
  };
  auto integrand = [=](double r) {
    return 4.0 * kPi * r * r * psi(r) * laplacian(r);
  };
  const double scale = 1.0 / lambda;  // integral magnitude ~ 3/(2 lambda^2)
  const double integral = adaptive_simpson(integrand, 1e-3 * lambda,
                                           12.0 * lambda, scale * scale * 1e-8);
  const double hbar = gravloc::constants().hbar;
  return -hbar * hbar / (2.0 * mass) * integral;
}

// --- log-uniform draws for property tests ------------------------------------

class LogUniform {
 public:
  LogUniform(double lo, double hi, unsigned seed)
      : rng_(seed), dist_(std::log(lo), std::log(hi)) {}
  double operator()() { return std::exp(dist_(rng_)); }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> dist_;
};

}  // namespace oracles
