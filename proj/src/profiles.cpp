#include "gravloc/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "gravloc/constants.hpp"
#include "gravloc/quadrature.hpp"
#include "gravloc/sinc.hpp"

namespace gravloc {
namespace {

constexpr double kTwoPiPow32 = 15.749609945722419;  // (2 pi)^{3/2}

// 3 (sin u - u cos u) / u^3, the uniform-ball form factor; equals 1 at u = 0
// and is bounded by 1 in magnitude. Series below u = 0.5 where the direct
// expression loses digits to cancellation.
double ball_form_factor(double u) {
  const double au = std::abs(u);
  if (au < 0.5) {
    const double u2 = u * u;
    double term = 1.0;  // n = 0
    double sum = term;
    for (int n = 0; n < 12; ++n) {
      term *= -u2 / ((2.0 * n + 2.0) * (2.0 * n + 5.0));
      sum += term;
      if (std::abs(term) < 1e-18) break;
    }
    return sum;
  }
  return 3.0 * (std::sin(u) - u * std::cos(u)) / (u * u * u);
}

// 4 pi * int_0^{r_last} r^2 rho(r) dr for the piecewise-linear density,
// segment by segment in closed form (plus the constant inner disk r < r_0).
double tabulated_mass(const TabulatedShape& tab) {
  const auto& r = tab.r_cm;
  const auto& rho = tab.rho_g_cm3;
  double integral = rho.front() * r.front() * r.front() * r.front() / 3.0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const double r0 = r[i], r1 = r[i + 1];
    const double slope = (rho[i + 1] - rho[i]) / (r1 - r0);
    const double a = rho[i] - slope * r0;  // rho(r) = a + slope * r
    integral += a * (r1 * r1 * r1 - r0 * r0 * r0) / 3.0 +
                slope * (r1 * r1 * r1 * r1 - r0 * r0 * r0 * r0) / 4.0;
  }
  return 4.0 * std::numbers::pi * integral;
}

// Radial transform of the tabulated density: 4 pi int r^2 rho(r) sinc(kr) dr,
// integrated sample interval by sample interval so the piecewise-linear
// density is smooth within every quadrature panel. Each segment gets an
// absolute error budget proportional to its width so sinc zero crossings
// (segment integral near zero) cannot stall a relative-only tolerance.
double tabulated_radial_transform(const TabulatedShape& tab, double k,
                                  double mass_scale) {
  const auto& r = tab.r_cm;
  const auto& rho = tab.rho_g_cm3;
  const double abs_budget =
      1e-10 * mass_scale / (4.0 * std::numbers::pi * r.back());

  auto segment = [&](double r0, double r1, double a, double slope) {
    auto integrand = [=](double x) {
      return x * x * (a + slope * x) * sinc(k * x);
    };
    const int panels =
        std::clamp(static_cast<int>(k * (r1 - r0) / 2.0), 1, 256);
    return integrate_adaptive(integrand, r0, r1, 1e-12,
                              abs_budget * (r1 - r0), panels, 4000)
        .value;
  };

  double total = segment(0.0, r.front(), rho.front(), 0.0);
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const double slope = (rho[i + 1] - rho[i]) / (r[i + 1] - r[i]);
    total += segment(r[i], r[i + 1], rho[i] - slope * r[i], slope);
  }
  return 4.0 * std::numbers::pi * total;
}

}  // namespace

DensityProfile::DensityProfile(ProfileShape shape, double mass_g)
    : shape_(std::move(shape)), mass_g_(mass_g) {}

DensityProfile DensityProfile::gaussian(double total_mass_g,
                                        double dispersion_cm) {
  require_positive(total_mass_g, "total_mass");
  require_positive(dispersion_cm, "dispersion");
  return DensityProfile(GaussianShape{dispersion_cm}, total_mass_g);
}

DensityProfile DensityProfile::uniform_ball(double total_mass_g,
                                            double radius_cm) {
  require_positive(total_mass_g, "total_mass");
  require_positive(radius_cm, "radius");
  return DensityProfile(UniformBallShape{radius_cm}, total_mass_g);
}

DensityProfile DensityProfile::exponential(double total_mass_g,
                                           double scale_cm) {
  require_positive(total_mass_g, "total_mass");
  require_positive(scale_cm, "scale");
  return DensityProfile(ExponentialShape{scale_cm}, total_mass_g);
}

DensityProfile DensityProfile::tabulated(std::vector<double> r_cm,
                                         std::vector<double> rho_g_cm3) {
  if (r_cm.size() != rho_g_cm3.size()) {
    throw std::domain_error("tabulated profile: r and rho sample counts differ");
  }
  if (r_cm.size() < 4) {
    throw std::domain_error("tabulated profile: at least 4 samples required");
  }
  for (std::size_t i = 0; i < r_cm.size(); ++i) {
    if (!(r_cm[i] > 0.0) || !std::isfinite(r_cm[i])) {
      throw std::domain_error("tabulated profile: radii must be positive and finite");
    }
    if (i > 0 && !(r_cm[i] > r_cm[i - 1])) {
      throw std::domain_error("tabulated profile: radii must be strictly increasing");
    }
    if (!(rho_g_cm3[i] >= 0.0) || !std::isfinite(rho_g_cm3[i])) {
      throw std::domain_error("tabulated profile: densities must be non-negative and finite");
    }
  }
  TabulatedShape shape{std::move(r_cm), std::move(rho_g_cm3)};
  const double mass = tabulated_mass(shape);
  if (!(mass > 0.0)) {
    throw std::domain_error("tabulated profile: total mass must be positive");
  }
  return DensityProfile(std::move(shape), mass);
}

DensityProfile DensityProfile::with_mass(double new_mass_g) const {
  require_positive(new_mass_g, "total_mass");
  DensityProfile copy = *this;
  if (auto* tab = std::get_if<TabulatedShape>(&copy.shape_)) {
    const double factor = new_mass_g / copy.mass_g_;
    for (double& rho : tab->rho_g_cm3) rho *= factor;
  }
  copy.mass_g_ = new_mass_g;
  return copy;
}

double DensityProfile::characteristic_length_cm() const {
  return std::visit(
      [](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianShape>) return s.dispersion_cm;
        else if constexpr (std::is_same_v<T, UniformBallShape>) return s.radius_cm;
        else if constexpr (std::is_same_v<T, ExponentialShape>) return s.scale_cm;
        else return s.r_cm.back();
      },
      shape_);
}

FourierAmplitude fourier_amplitude(const DensityProfile& profile,
                                   double k_cm_inv) {
  if (!(k_cm_inv >= 0.0) || !std::isfinite(k_cm_inv)) {
    throw std::domain_error("k must be non-negative and finite");
  }
  const double mass = profile.total_mass_g();
  const double value = std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianShape>) {
          const double lk = s.dispersion_cm * k_cm_inv;
          return mass * std::exp(-0.5 * lk * lk) / kTwoPiPow32;
        } else if constexpr (std::is_same_v<T, UniformBallShape>) {
          return mass * ball_form_factor(k_cm_inv * s.radius_cm) / kTwoPiPow32;
        } else if constexpr (std::is_same_v<T, ExponentialShape>) {
          const double ka = k_cm_inv * s.scale_cm;
          const double denom = 1.0 + ka * ka;
          return mass / (kTwoPiPow32 * denom * denom);
        } else {
          return tabulated_radial_transform(s, k_cm_inv, mass) / kTwoPiPow32;
        }
      },
      profile.shape());
  return FourierAmplitude{k_cm_inv, value};
}

double effective_dispersion(double lambda0_cm, double lambda_prime_cm) {
  require_positive(lambda0_cm, "lambda0");
  require_positive(lambda_prime_cm, "lambda_prime");
  return std::hypot(lambda0_cm, lambda_prime_cm);
}

}  // namespace gravloc
