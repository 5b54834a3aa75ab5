#include "gravloc/regimes.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gravloc/errors.hpp"

namespace gravloc {
namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double v, int precision) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*e", precision - 1, v);
  return buf;
}

// x(mu) for the density-derived lump, strictly decreasing in mu.
double x_of_mu(double mu, Mode mode, double rho_ref) {
  return solve_localization(LumpSpec::at_density(mu, rho_ref, mode)).x;
}

// mu where x(mu) = target, by bisection in log10(mu).
double bisect_mu_for_x(double target_x, Mode mode, double rho_ref) {
  double lo = 6.0, hi = 14.0;  // log10(mu)
  int guard = 0;
  while (x_of_mu(std::pow(10.0, lo), mode, rho_ref) < target_x) {
    lo -= 4.0;
    if (++guard > 80) {
      throw NumericError("transition bisection bracket failed (low)", lo,
                         target_x);
    }
  }
  while (x_of_mu(std::pow(10.0, hi), mode, rho_ref) > target_x) {
    hi += 4.0;
    if (++guard > 80) {
      throw NumericError("transition bisection bracket failed (high)", hi,
                         target_x);
    }
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (x_of_mu(std::pow(10.0, mid), mode, rho_ref) > target_x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::pow(10.0, 0.5 * (lo + hi));
}

}  // namespace

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::Quantum: return "Quantum";
    case Regime::Transition: return "Transition";
    default: return "Classical";
  }
}

RegimeClass classify(const StationaryResult& result,
                     const RegimeThresholds& thresholds) {
  const double x = result.x;
  if (x > thresholds.quantum_x) return {Regime::Quantum, x};
  if (x < thresholds.classical_x) return {Regime::Classical, x};
  return {Regime::Transition, x};
}

double asymptote_small(double mu, Mode mode) {
  require_positive(mu, "mu");
  const Constants& k = constants();
  const double mass = mu * k.m_p;
  const double paper =
      3.0 * k.hbar * k.hbar / (8.0 * kPi * k.G) / (mass * mass * mass);
  return mode == Mode::Paper ? paper : 0.5 * paper;
}

double asymptote_large(double mu, Mode mode, double rho_ref) {
  require_positive(mu, "mu");
  const LumpSpec spec = LumpSpec::at_density(mu, rho_ref, mode);
  return std::exp(std::log(spec.lambda0_cm) -
                  0.125 * dimensionless_ln_k(spec));
}

double crossover_mu(Mode mode, double rho_ref) {
  require_positive(rho_ref, "rho_ref");
  // S mu^-3 = L mu^-1/2  =>  mu* = (S/L)^{2/5}
  const double ln_s = std::log(asymptote_small(1.0, mode));
  const double ln_l = std::log(asymptote_large(1.0, mode, rho_ref));
  return std::exp(0.4 * (ln_s - ln_l));
}

TransitionWindow transition_window(Mode mode, double rho_ref,
                                   const RegimeThresholds& thresholds) {
  require_positive(rho_ref, "rho_ref");
  const double mu_q = bisect_mu_for_x(thresholds.quantum_x, mode, rho_ref);
  const double mu_c = bisect_mu_for_x(thresholds.classical_x, mode, rho_ref);
  return TransitionWindow{mu_q, mu_c, std::log10(mu_c / mu_q)};
}

double transition_width(Mode mode, double rho_ref) {
  return transition_window(mode, rho_ref).width_decades;
}

SweepTable sweep(double mu_min, double mu_max, int points_per_decade,
                 Mode mode, double rho_ref,
                 std::optional<double> lambda0_override) {
  require_positive(mu_min, "mu_min");
  require_positive(mu_max, "mu_max");
  if (!(mu_min < mu_max)) {
    throw std::domain_error("mu_min must be less than mu_max");
  }
  if (points_per_decade < 1) {
    throw std::domain_error("points_per_decade must be at least 1");
  }

  const double span = std::log10(mu_max / mu_min);
  const int n = static_cast<int>(std::ceil(span * points_per_decade - 1e-9)) + 1;

  SweepTable table;
  table.rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    double mu;
    if (i == 0) {
      mu = mu_min;
    } else if (i == n - 1) {
      mu = mu_max;
    } else {
      mu = mu_min * std::pow(10.0, span * i / (n - 1));
    }
    try {
      const double lambda0 =
          lambda0_override ? *lambda0_override : lambda0_from_mu(mu, rho_ref);
      const LumpSpec spec{mu, lambda0, mode};
      const StationaryResult r = solve_localization(spec);
      const EnergyBreakdown e = total_energy(spec, r.lambda_prime_cm);
      table.rows.push_back(SweepRow{mu, lambda0, r.lambda_prime_cm, r.x,
                                    r.k_log10, classify(r).label, e.e0_erg,
                                    e.ekin_erg, e.etotal_erg, mode});
    } catch (const NumericError& err) {
      throw NumericError("sweep failed at mu=" + sci(mu, 6) + ": " +
                             err.what(),
                         err.achieved(), err.required());
    }
  }
  return table;
}

void write_csv(const SweepTable& table, std::ostream& out, int precision) {
  out << "mu,lambda0_cm,lambda_prime_cm,x,K_log10,regime,e0_erg,ekin_erg,"
         "etotal_erg,mode\n";
  for (const SweepRow& r : table.rows) {
    out << sci(r.mu, precision) << ',' << sci(r.lambda0_cm, precision) << ','
        << sci(r.lambda_prime_cm, precision) << ',' << sci(r.x, precision)
        << ',' << sci(r.k_log10, precision) << ',' << to_string(r.regime)
        << ',' << sci(r.e0_erg, precision) << ',' << sci(r.ekin_erg, precision)
        << ',' << sci(r.etotal_erg, precision) << ',' << to_string(r.mode)
        << '\n';
  }
}

void write_json(const SweepTable& table, std::ostream& out, int precision) {
  out << "[\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const SweepRow& r = table.rows[i];
    out << "  {\"mu\": " << sci(r.mu, precision)
        << ", \"lambda0_cm\": " << sci(r.lambda0_cm, precision)
        << ", \"lambda_prime_cm\": " << sci(r.lambda_prime_cm, precision)
        << ", \"x\": " << sci(r.x, precision)
        << ", \"K_log10\": " << sci(r.k_log10, precision)
        << ", \"regime\": \"" << to_string(r.regime) << '"'
        << ", \"e0_erg\": " << sci(r.e0_erg, precision)
        << ", \"ekin_erg\": " << sci(r.ekin_erg, precision)
        << ", \"etotal_erg\": " << sci(r.etotal_erg, precision)
        << ", \"mode\": \"" << to_string(r.mode) << "\"}"
        << (i + 1 < table.rows.size() ? ",\n" : "\n");
  }
  out << "]\n";
}

}  // namespace gravloc
