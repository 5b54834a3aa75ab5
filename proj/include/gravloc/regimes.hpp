#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "gravloc/solver.hpp"

namespace gravloc {

enum class Regime { Quantum, Transition, Classical };

const char* to_string(Regime regime);

/// Classification thresholds on x = lambda'/lambda0. Quantum above 10,
/// Classical below 0.5, Transition between (boundaries inclusive). Tunable;
/// the defaults bracket the sharp drop of x across three orders of magnitude
/// between mu ~ 1e9 (x ~ 42) and mu ~ 1e10 (x ~ 0.4).
struct RegimeThresholds {
  double quantum_x = 10.0;
  double classical_x = 0.5;
};

struct RegimeClass {
  Regime label;
  double x_ratio;
};

RegimeClass classify(const StationaryResult& result,
                     const RegimeThresholds& thresholds = {});

/// Small-mass localization length, K-free closed form
/// lambda' = 3 hbar^2 / (8 pi G M^3) (Paper mode; Derived is half). For the
/// default density this is 4.251e23 * mu^-3 cm. Independent of lambda0.
double asymptote_small(double mu, Mode mode);

/// Large-mass localization length lambda' = lambda0 * K^{-1/8}; for the
/// default density and Paper mode, 0.8075 * mu^{-1/2} cm.
double asymptote_large(double mu, Mode mode, double rho_ref);

/// Mass (in proton masses) where the two asymptotes cross, in closed form
/// from the mu^-3 and mu^-1/2 power laws. Scales as rho_ref^{1/10}.
double crossover_mu(Mode mode, double rho_ref);

/// Boundary masses where the full solution crosses x = quantum_x and
/// x = classical_x, found by monotone bisection over solve_localization,
/// and the resulting transition width in decades of mu.
struct TransitionWindow {
  double mu_quantum;
  double mu_classical;
  double width_decades;
};

TransitionWindow transition_window(Mode mode, double rho_ref,
                                   const RegimeThresholds& thresholds = {});

/// log10(mu_classical / mu_quantum).
double transition_width(Mode mode, double rho_ref);

struct SweepRow {
  double mu;
  double lambda0_cm;
  double lambda_prime_cm;
  double x;
  double k_log10;
  Regime regime;
  double e0_erg;
  double ekin_erg;
  double etotal_erg;
  Mode mode;
};

struct SweepTable {
  std::vector<SweepRow> rows;
};

/// Solve on a log-spaced mu grid, endpoints included, at least
/// points_per_decade rows per decade. lambda0 comes from the density unless
/// overridden. Rows are ordered by increasing mu; solver failures are
/// annotated with the failing mu.
SweepTable sweep(double mu_min, double mu_max, int points_per_decade,
                 Mode mode, double rho_ref,
                 std::optional<double> lambda0_override = std::nullopt);

/// CSV with the fixed header
/// mu,lambda0_cm,lambda_prime_cm,x,K_log10,regime,e0_erg,ekin_erg,etotal_erg,mode
void write_csv(const SweepTable& table, std::ostream& out, int precision = 6);

/// JSON array of row objects with the same field names as the CSV columns.
void write_json(const SweepTable& table, std::ostream& out, int precision = 6);

}  // namespace gravloc
