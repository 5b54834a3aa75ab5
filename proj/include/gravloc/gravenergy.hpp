#pragma once

#include "gravloc/profiles.hpp"

namespace gravloc {

/// Ground-state energy of the massless scalar cloud dressing a Gaussian mass
/// density: -4 pi G M^2 / lambda, in erg. This closed form is canonical for
/// the total-energy functional downstream.
double e0_closed_gaussian(double mass_g, double lambda_cm);

/// Momentum-space route to the same energy for an arbitrary profile:
/// -4 pi G * 4 pi * int_0^inf |rho~(k)|^2 dk (the spherical reduction of the
/// d3k/k^2 integral, with the mass-weighted amplitude absorbing the squared
/// particle mass). For a Gaussian this evaluates to -G M^2 / (sqrt(pi)
/// lambda), a factor 1/(4 pi^{3/2}) ~ 0.0449 of the closed form; both routes
/// are kept so the mismatch stays visible (see e0-check in the CLI).
double e0_quadrature(const DensityProfile& profile);

/// Ratio e0_quadrature / e0_closed_gaussian expected for Gaussian profiles.
constexpr double kQuadratureClosedRatio = 0.044896780531291640;

/// Magnitude of the coherent mode displacement that shifts the cloud
/// annihilation operator: sqrt(4 pi G / (c hbar)) * rho~(k) / k^{3/2}.
/// Pointwise only; k = 0 is infrared-divergent and rejected.
double displacement_amplitude(const DensityProfile& profile, double k_cm_inv);

/// Two point masses regularized as Gaussian clouds of width sigma, separated
/// by d. The raw point-source self-energy diverges; the regularized cross
/// term and its gradient are finite for every d >= 0.
struct TwoSourceSpec {
  double m1_g;
  double m2_g;
  double sigma_cm;
  double d_cm;
};

/// Interaction (cross) energy of the two regularized sources:
/// -8 pi G * 4 pi * int_0^inf rho~1(k) rho~2(k) sinc(k d) dk, in erg.
double two_source_interaction(const TwoSourceSpec& spec);

/// -dE_int/dd by central finite difference with step 1e-4 * d, in dyn.
/// Negative values pull the sources together.
double two_source_force(const TwoSourceSpec& spec);

/// Same force with the derivative taken under the integral sign; agrees with
/// the finite-difference route to parts in 1e6 and serves as its cross-check.
double two_source_force_analytic(const TwoSourceSpec& spec);

}  // namespace gravloc
