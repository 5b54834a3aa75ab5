#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gravloc {

/// Physical constants in CGS units.
///
/// Every computation in the library runs in this one unit system; the only
/// user-facing quantities in other units are masses in proton masses (mu)
/// and lengths in cm. Values are CODATA 2018, rounded to the five
/// significant digits used throughout.
struct Constants {
  double G = 6.674e-8;        // gravitational constant [cm^3 g^-1 s^-2]
  double hbar = 1.0546e-27;   // reduced Planck constant [erg s]
  double c = 2.9979e10;       // speed of light [cm/s]
  double m_p = 1.6726e-24;    // proton mass [g]
  double rho_ref = 1e24;      // reference number-mass density [m_p / cm^3]
};

/// Canonical constant set; rho_ref defaults to condensed matter, 1e24 m_p/cm^3.
inline const Constants& constants() {
  static const Constants k{};
  return k;
}

inline void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(name) + " must be positive and finite");
  }
}

/// Lump mass in grams for a mass of mu proton masses.
inline double mass_from_mu(double mu, const Constants& k = constants()) {
  require_positive(mu, "mu");
  return mu * k.m_p;
}

/// Inner-state dispersion lambda0 [cm] of a lump of mu proton masses at
/// number-mass density rho_ref [m_p/cm^3]: lambda0 = (mu/rho_ref)^(1/3).
/// For the default density this is 1e-8 * mu^(1/3) cm.
inline double lambda0_from_mu(double mu, double rho_ref) {
  require_positive(mu, "mu");
  require_positive(rho_ref, "rho_ref");
  return std::cbrt(mu / rho_ref);
}

}  // namespace gravloc
