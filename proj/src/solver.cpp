#include "gravloc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gravloc/errors.hpp"
#include "gravloc/profiles.hpp"

namespace gravloc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn10 = 2.302585092994046;

// Log-form stationarity residual f(u) = 3 ln(1 + e^{2u}) - 8u - ln K,
// strictly decreasing and convex in u; evaluated without overflow on
// either side.
double residual_ln(double u, double ln_k) {
  if (u > 0.0) {
    return -2.0 * u + 3.0 * std::log1p(std::exp(-2.0 * u)) - ln_k;
  }
  return 3.0 * std::log1p(std::exp(2.0 * u)) - 8.0 * u - ln_k;
}

double residual_ln_prime(double u) {
  if (u > 0.0) return 6.0 / (1.0 + std::exp(-2.0 * u)) - 8.0;
  const double e = std::exp(2.0 * u);
  return 6.0 * e / (1.0 + e) - 8.0;
}

// ln sqrt(lambda0^2 + lambda^2) without overflow at extreme ratios.
double ln_effective_dispersion(double lambda0, double lambda) {
  const double hi = std::max(lambda0, lambda);
  const double lo = std::min(lambda0, lambda);
  const double q = lo / hi;
  return std::log(hi) + 0.5 * std::log1p(q * q);
}

// ln(e^a + e^b)
double ln_add_exp(double a, double b) {
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

const char* to_string(Mode mode) {
  return mode == Mode::Paper ? "paper" : "derived";
}

LumpSpec LumpSpec::at_density(double mu, double rho_ref, Mode mode) {
  return LumpSpec{mu, lambda0_from_mu(mu, rho_ref), mode};
}

double kinetic_energy(double mass_g, double lambda_prime_cm) {
  require_positive(mass_g, "mass");
  require_positive(lambda_prime_cm, "lambda_prime");
  const double hbar = constants().hbar;
  return 3.0 * hbar * hbar /
         (8.0 * mass_g * lambda_prime_cm * lambda_prime_cm);
}

EnergyBreakdown total_energy(const LumpSpec& spec, double lambda_prime_cm) {
  require_positive(spec.mu, "mu");
  require_positive(spec.lambda0_cm, "lambda0");
  require_positive(lambda_prime_cm, "lambda_prime");
  const double mass = mass_from_mu(spec.mu);
  const double lambda_eff =
      effective_dispersion(spec.lambda0_cm, lambda_prime_cm);
  const double e0 = -4.0 * kPi * constants().G * mass * mass / lambda_eff;
  const double ekin = kinetic_energy(mass, lambda_prime_cm);
  return EnergyBreakdown{e0, ekin, e0 + ekin};
}

double dimensionless_ln_k(const LumpSpec& spec) {
  require_positive(spec.mu, "mu");
  require_positive(spec.lambda0_cm, "lambda0");
  const Constants& k = constants();
  const double coeff = (spec.mode == Mode::Paper ? 64.0 : 256.0) / 9.0;
  return std::log(coeff * kPi * kPi) + 2.0 * std::log(k.G) +
         6.0 * (std::log(spec.mu) + std::log(k.m_p)) +
         2.0 * std::log(spec.lambda0_cm) - 4.0 * std::log(k.hbar);
}

double dimensionless_k(const LumpSpec& spec) {
  return std::exp(dimensionless_ln_k(spec));
}

SolveX solve_x_ln(double ln_k) {
  if (!std::isfinite(ln_k)) {
    throw std::domain_error("ln K must be finite");
  }
  const double guess_small = -0.5 * ln_k;  // x = K^{-1/2}
  const double guess_large = -0.125 * ln_k;  // x = K^{-1/8}
  double lo = std::min(guess_small, guess_large) - 0.75;
  double hi = std::max(guess_small, guess_large) + 0.75;

  // f decreases, so a valid bracket has f(lo) > 0 > f(hi).
  double step = 1.0;
  int expansions = 0;
  while (residual_ln(lo, ln_k) <= 0.0) {
    lo -= step;
    step *= 2.0;
    if (++expansions > 200) {
      throw NumericError("stationarity bracket expansion failed (low side)",
                         lo, ln_k);
    }
  }
  step = 1.0;
  while (residual_ln(hi, ln_k) >= 0.0) {
    hi += step;
    step *= 2.0;
    if (++expansions > 200) {
      throw NumericError("stationarity bracket expansion failed (high side)",
                         hi, ln_k);
    }
  }

  const double tol = std::max(1e-13, 1e-15 * (3.0 + std::abs(ln_k)));
  double u = 0.5 * (lo + hi);
  double f = residual_ln(u, ln_k);
  int iterations = 0;
  while (std::abs(f) > tol && iterations < 200) {
    if (f > 0.0) {
      lo = u;
    } else {
      hi = u;
    }
    double next = u - f / residual_ln_prime(u);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == u) break;
    u = next;
    f = residual_ln(u, ln_k);
    ++iterations;
  }
  return SolveX{std::exp(u), u, std::abs(f), iterations};
}

double solve_x(double k) {
  require_positive(k, "K");
  return solve_x_ln(std::log(k)).x;
}

int compare_total_energy(const LumpSpec& spec, double lambda_a_cm,
                         double lambda_b_cm) {
  require_positive(spec.mu, "mu");
  require_positive(spec.lambda0_cm, "lambda0");
  require_positive(lambda_a_cm, "lambda_a");
  require_positive(lambda_b_cm, "lambda_b");
  if (lambda_a_cm == lambda_b_cm) return 0;

  // E(b) - E(a) = (b^2 - a^2) * (A - B) with
  //   A = 4 pi G M^2 / ((la_eff + lb_eff) la_eff lb_eff)   (gravity)
  //   B = (3 hbar^2 / 8M) / (a b)^2                        (kinetic),
  // an exact rearrangement; comparing ln A with ln B keeps the sign correct
  // even where the raw energies agree to hundreds of digits.
  const Constants& k = constants();
  const double ln_mass = std::log(spec.mu) + std::log(k.m_p);
  const double ln_eff_a = ln_effective_dispersion(spec.lambda0_cm, lambda_a_cm);
  const double ln_eff_b = ln_effective_dispersion(spec.lambda0_cm, lambda_b_cm);
  const double ln_grav = std::log(4.0 * kPi * k.G) + 2.0 * ln_mass -
                         ln_add_exp(ln_eff_a, ln_eff_b) - ln_eff_a - ln_eff_b;
  const double ln_kin = std::log(3.0 / 8.0) + 2.0 * std::log(k.hbar) -
                        ln_mass -
                        2.0 * (std::log(lambda_a_cm) + std::log(lambda_b_cm));
  const int sign_factor = lambda_b_cm > lambda_a_cm ? 1 : -1;
  if (ln_grav == ln_kin) return 0;
  return (ln_grav > ln_kin ? 1 : -1) * sign_factor;
}

StationaryResult solve_localization(const LumpSpec& spec) {
  const double ln_k = dimensionless_ln_k(spec);
  const SolveX sx = solve_x_ln(ln_k);
  const double lambda_prime = spec.lambda0_cm * sx.x;

  bool curvature = false;
  if (spec.mode == Mode::Derived) {
    curvature =
        compare_total_energy(spec, lambda_prime, lambda_prime * 0.999) > 0 &&
        compare_total_energy(spec, lambda_prime, lambda_prime * 1.001) > 0;
  } else {
    // The Paper-mode root is not an extremum of the energy functional; the
    // stability statement is the sign change of its own stationarity
    // function across the root.
    curvature = residual_ln(sx.ln_x - 1e-3, ln_k) > 0.0 &&
                residual_ln(sx.ln_x + 1e-3, ln_k) < 0.0;
  }

  return StationaryResult{lambda_prime, sx.x,       ln_k / kLn10,
                          sx.residual,  curvature,  sx.iterations,
                          spec.mode};
}

double minimize_energy(const LumpSpec& spec) {
  require_positive(spec.mu, "mu");
  require_positive(spec.lambda0_cm, "lambda0");

  // Window from the Derived-mode asymptotes (the minimizer provably lies
  // between them); golden-section contraction with exact energy orderings.
  LumpSpec derived = spec;
  derived.mode = Mode::Derived;
  const double ln_k = dimensionless_ln_k(derived);
  const double u0 = std::log(spec.lambda0_cm);
  const double g1 = u0 - 0.5 * ln_k;
  const double g2 = u0 - 0.125 * ln_k;
  double lo = std::min(g1, g2) - 5.0;
  double hi = std::max(g1, g2) + 5.0;

  constexpr double kGolden = 0.6180339887498949;
  double c = hi - kGolden * (hi - lo);
  double d = lo + kGolden * (hi - lo);
  int iterations = 0;
  while (hi - lo > 1e-11 && iterations < 500) {
    if (compare_total_energy(spec, std::exp(c), std::exp(d)) > 0) {
      hi = d;  // E(c) < E(d): minimum on [lo, d]
    } else {
      lo = c;
    }
    c = hi - kGolden * (hi - lo);
    d = lo + kGolden * (hi - lo);
    ++iterations;
  }
  if (hi - lo > 1e-11) {
    throw NumericError("energy minimization did not contract", hi - lo, 1e-11);
  }
  return std::exp(0.5 * (lo + hi));
}

}  // namespace gravloc
