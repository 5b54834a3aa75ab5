#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace gravloc {

// Spherically symmetric mass-density shapes. Lengths in cm, densities in
// g/cm^3, masses in g.
struct GaussianShape {
  double dispersion_cm;
};
struct UniformBallShape {
  double radius_cm;
};
struct ExponentialShape {
  double scale_cm;
};
struct TabulatedShape {
  std::vector<double> r_cm;        // strictly increasing, >= 4 samples
  std::vector<double> rho_g_cm3;   // non-negative; zero outside last sample
};

using ProfileShape = std::variant<GaussianShape, UniformBallShape,
                                  ExponentialShape, TabulatedShape>;

/// A spherically symmetric mass distribution with a fixed total mass.
///
/// Immutable after construction. The tabulated constructor takes the total
/// mass from the samples themselves (4*pi * integral of r^2 rho with linear
/// interpolation between samples).
class DensityProfile {
 public:
  static DensityProfile gaussian(double total_mass_g, double dispersion_cm);
  static DensityProfile uniform_ball(double total_mass_g, double radius_cm);
  static DensityProfile exponential(double total_mass_g, double scale_cm);
  static DensityProfile tabulated(std::vector<double> r_cm,
                                  std::vector<double> rho_g_cm3);

  /// Copy with the total mass rescaled to new_mass_g (densities scale along).
  DensityProfile with_mass(double new_mass_g) const;

  double total_mass_g() const { return mass_g_; }
  const ProfileShape& shape() const { return shape_; }

  /// Length scale of the shape (dispersion, radius, scale, or last sample
  /// radius). Sets quadrature cutoffs and oscillation hints downstream.
  double characteristic_length_cm() const;

 private:
  DensityProfile(ProfileShape shape, double mass_g);
  ProfileShape shape_;
  double mass_g_;
};

/// Mass-weighted Fourier amplitude rho~(k) of a profile, in grams, with the
/// (2 pi)^{-3/2} integral convention: rho~(0) = M / (2 pi)^{3/2}.
struct FourierAmplitude {
  double k_cm_inv;
  double value_g;
};

/// rho~(k) = (2 pi)^{-3/2} * 4 pi * int_0^inf r^2 rho(r) sinc(k r) dr.
/// Gaussian, uniform-ball and exponential shapes use closed forms; tabulated
/// shapes use adaptive radial quadrature (abs+rel tolerance 1e-10).
/// k must be >= 0.
FourierAmplitude fourier_amplitude(const DensityProfile& profile,
                                   double k_cm_inv);

/// sqrt(lambda0^2 + lambda_prime^2), safe across extreme magnitude ratios.
double effective_dispersion(double lambda0_cm, double lambda_prime_cm);

}  // namespace gravloc
