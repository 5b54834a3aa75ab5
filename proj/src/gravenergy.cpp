#include "gravloc/gravenergy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gravloc/constants.hpp"
#include "gravloc/errors.hpp"
#include "gravloc/quadrature.hpp"
#include "gravloc/sinc.hpp"

namespace gravloc {
namespace {

constexpr double kPi = std::numbers::pi;

// Smallest k beyond which |f| stays below threshold, found by octave
// doubling from k_start; several samples per octave so an oscillatory f
// cannot slip through near its zeros.
template <typename F>
double find_tail_cutoff(F&& f, double k_start, double threshold) {
  double k = k_start;
  for (int octave = 0; octave < 200; ++octave) {
    double peak = 0.0;
    for (int i = 1; i <= 32; ++i) {
      peak = std::max(peak, std::abs(f(k + (k / 32.0) * i)));
    }
    if (peak < threshold) return 2.0 * k;
    k *= 2.0;
  }
  throw NumericError("integrand tail cutoff search did not terminate", k,
                     threshold);
}

void validate(const TwoSourceSpec& spec) {
  require_positive(spec.m1_g, "m1");
  require_positive(spec.m2_g, "m2");
  require_positive(spec.sigma_cm, "sigma");
  if (!(spec.d_cm >= 0.0) || !std::isfinite(spec.d_cm)) {
    throw std::domain_error("d must be non-negative and finite");
  }
}

// int_0^inf exp(-sigma^2 k^2) * weight(k) dk for the two-source cross term;
// weight carries the sinc factor (or its derivative under the integral).
template <typename W>
double two_source_integral(const TwoSourceSpec& spec, W&& weight) {
  const double sigma2 = spec.sigma_cm * spec.sigma_cm;
  auto integrand = [&](double k) {
    return std::exp(-sigma2 * k * k) * weight(k);
  };
  // exp(-sigma^2 k^2) < 1e-14 beyond k sigma ~ 5.68
  const double k_max = 6.0 / spec.sigma_cm;
  const int panels = std::clamp(
      static_cast<int>(k_max * spec.d_cm / kPi) + 1, 16, 8192);
  return integrate_adaptive(integrand, 0.0, k_max, 1e-13, 0.0, panels, 40000)
      .value;
}

}  // namespace

double e0_closed_gaussian(double mass_g, double lambda_cm) {
  require_positive(mass_g, "mass");
  require_positive(lambda_cm, "lambda");
  return -4.0 * kPi * constants().G * mass_g * mass_g / lambda_cm;
}

double e0_quadrature(const DensityProfile& profile) {
  auto amplitude_sq = [&](double k) {
    const double a = fourier_amplitude(profile, k).value_g;
    return a * a;
  };
  const double peak = amplitude_sq(0.0);
  const double k_char = 1.0 / profile.characteristic_length_cm();
  const double k_max = find_tail_cutoff(amplitude_sq, k_char, 1e-14 * peak);
  const int panels = std::clamp(
      static_cast<int>(k_max / (kPi * k_char)) + 1, 32, 8192);
  const double integral =
      integrate_adaptive(amplitude_sq, 0.0, k_max, 1e-11, 0.0, panels, 40000)
          .value;
  return -16.0 * kPi * kPi * constants().G * integral;
}

double displacement_amplitude(const DensityProfile& profile, double k_cm_inv) {
  if (!(k_cm_inv > 0.0) || !std::isfinite(k_cm_inv)) {
    throw std::domain_error(
        "k must be strictly positive (k = 0 mode is infrared-divergent)");
  }
  const Constants& k = constants();
  const double coupling = std::sqrt(4.0 * kPi * k.G / (k.c * k.hbar));
  return coupling * fourier_amplitude(profile, k_cm_inv).value_g /
         (k_cm_inv * std::sqrt(k_cm_inv));
}

double two_source_interaction(const TwoSourceSpec& spec) {
  validate(spec);
  // product of the two regularized amplitudes: m1 m2 exp(-sigma^2 k^2)/(2pi)^3
  const double prefactor = -32.0 * kPi * kPi * constants().G * spec.m1_g *
                           spec.m2_g /
                           std::pow(2.0 * kPi, 3);
  const double d = spec.d_cm;
  return prefactor *
         two_source_integral(spec, [d](double k) { return sinc(k * d); });
}

double two_source_force(const TwoSourceSpec& spec) {
  validate(spec);
  require_positive(spec.d_cm, "d");
  const double h = 1e-4 * spec.d_cm;
  TwoSourceSpec lo = spec, hi = spec;
  lo.d_cm -= h;
  hi.d_cm += h;
  return -(two_source_interaction(hi) - two_source_interaction(lo)) /
         (2.0 * h);
}

double two_source_force_analytic(const TwoSourceSpec& spec) {
  validate(spec);
  require_positive(spec.d_cm, "d");
  const double prefactor = 32.0 * kPi * kPi * constants().G * spec.m1_g *
                           spec.m2_g /
                           std::pow(2.0 * kPi, 3);
  const double d = spec.d_cm;
  return prefactor * two_source_integral(spec, [d](double k) {
           return k * sinc_prime(k * d);
         });
}

}  // namespace gravloc
