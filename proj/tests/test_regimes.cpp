#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "gravloc/fit.hpp"
#include "gravloc/regimes.hpp"
#include "oracles.hpp"

using namespace gravloc;

TEST_SUITE_BEGIN("regimes");

TEST_CASE("small-mass asymptote") {
  CHECK(asymptote_small(1.0, Mode::Paper) ==
        doctest::Approx(4.2510327360048372e23).epsilon(1e-10).scale(0.0));
  CHECK(asymptote_small(1.0, Mode::Paper) ==
        doctest::Approx(4.23e23).epsilon(0.01).scale(0.0));
  // mu^-3 law
  CHECK(asymptote_small(10.0, Mode::Paper) ==
        doctest::Approx(1e-3 * asymptote_small(1.0, Mode::Paper)).epsilon(1e-12).scale(0.0));
  // derived mode is exactly half
  CHECK(asymptote_small(25.0, Mode::Derived) ==
        doctest::Approx(0.5 * asymptote_small(25.0, Mode::Paper)).epsilon(1e-15).scale(0.0));
}

TEST_CASE("large-mass asymptote") {
  CHECK(asymptote_large(1e12, Mode::Paper, 1e24) ==
        doctest::Approx(8.0746482458675453e-7).epsilon(1e-10).scale(0.0));
  CHECK(asymptote_large(1e12, Mode::Paper, 1e24) ==
        doctest::Approx(0.81e-6).epsilon(0.01).scale(0.0));
  // mu^-1/2 law
  CHECK(asymptote_large(1e14, Mode::Paper, 1e24) ==
        doctest::Approx(0.1 * asymptote_large(1e12, Mode::Paper, 1e24))
            .epsilon(1e-12).scale(0.0));
  // derived/paper ratio 4^{-1/8}
  CHECK(asymptote_large(1e12, Mode::Derived, 1e24) /
            asymptote_large(1e12, Mode::Paper, 1e24) ==
        doctest::Approx(std::pow(4.0, -0.125)).epsilon(1e-12).scale(0.0));
}

TEST_CASE("full solution approaches the asymptotes") {
  auto solve = [](double mu) {
    return solve_localization(LumpSpec::at_density(mu, 1e24, Mode::Paper))
        .lambda_prime_cm;
  };
  CHECK(std::abs(solve(1e8) / asymptote_small(1e8, Mode::Paper) - 1.0) < 1e-2);
  CHECK(std::abs(solve(1e9) / asymptote_small(1e9, Mode::Paper) - 1.0) < 1e-2);
  CHECK(std::abs(solve(1e12) / asymptote_large(1e12, Mode::Paper, 1e24) - 1.0) <
        1e-3);
  const double dev10 = solve(1e10) / asymptote_large(1e10, Mode::Paper, 1e24) - 1.0;
  CHECK(dev10 < 6e-2);
  CHECK(dev10 == doctest::Approx(0.056096624830533).epsilon(1e-6).scale(0.0));
}

TEST_CASE("crossover mass") {
  const double star = crossover_mu(Mode::Paper, 1e24);
  CHECK(star == doctest::Approx(3.0799831091724969e9).epsilon(1e-9).scale(0.0));
  CHECK(star >= 1e9);
  CHECK(star <= 1e10);
  // rho^(1/10) density dependence from the two power laws
  CHECK(crossover_mu(Mode::Paper, 1e27) / star ==
        doctest::Approx(std::pow(10.0, 0.3)).epsilon(1e-9).scale(0.0));
}

TEST_CASE("transition window and width") {
  const TransitionWindow w = transition_window(Mode::Paper, 1e24);
  CHECK(w.mu_quantum == doctest::Approx(1.5505756264939591e9).epsilon(1e-9).scale(0.0));
  CHECK(w.mu_classical == doctest::Approx(7.8233693716330108e9).epsilon(1e-9).scale(0.0));
  CHECK(w.width_decades == doctest::Approx(0.70290088244821366).epsilon(1e-9).scale(0.0));
  CHECK(w.width_decades < 1.0);
  CHECK(transition_width(Mode::Paper, 1e24) ==
        doctest::Approx(w.width_decades).epsilon(1e-12).scale(0.0));

  // the factor-4 coefficient shift cancels in the ratio of boundary masses
  CHECK(transition_width(Mode::Derived, 1e24) ==
        doctest::Approx(w.width_decades).epsilon(1e-6).scale(0.0));
  // and so does the density (dimensionless sanity)
  CHECK(transition_width(Mode::Paper, 1e27) ==
        doctest::Approx(w.width_decades).epsilon(1e-6).scale(0.0));
}

TEST_CASE("classification thresholds and tie-breaks") {
  auto with_x = [](double x) {
    return StationaryResult{x, x, 0.0, 0.0, true, 0, Mode::Paper};
  };
  CHECK(classify(with_x(4e31)).label == Regime::Quantum);
  CHECK(classify(with_x(10.0)).label == Regime::Transition);
  CHECK(classify(with_x(10.0 + 1e-9)).label == Regime::Quantum);
  CHECK(classify(with_x(0.5)).label == Regime::Transition);
  CHECK(classify(with_x(0.5 - 1e-9)).label == Regime::Classical);

  CHECK(classify(solve_localization(LumpSpec::at_density(1.0, 1e24))).label ==
        Regime::Quantum);
  CHECK(classify(solve_localization(LumpSpec::at_density(1e12, 1e24))).label ==
        Regime::Classical);
}

TEST_CASE("sweep grid construction") {
  const SweepTable t = sweep(1.0, 100.0, 1, Mode::Paper, 1e24);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].mu == 1.0);
  CHECK(t.rows[1].mu == doctest::Approx(10.0).epsilon(1e-12).scale(0.0));
  CHECK(t.rows[2].mu == 100.0);

  CHECK_THROWS_AS(sweep(10.0, 1.0, 1, Mode::Paper, 1e24), std::domain_error);
  CHECK_THROWS_AS(sweep(1.0, 10.0, 0, Mode::Paper, 1e24), std::domain_error);
  CHECK_THROWS_AS(sweep(-1.0, 10.0, 1, Mode::Paper, 1e24), std::domain_error);
}

TEST_CASE("sweep monotonicity and regime ordering") {
  const SweepTable t = sweep(1e8, 1e11, 8, Mode::Paper, 1e24);
  int q_to_t = 0, t_to_c = 0;
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.rows[i].mu > t.rows[i - 1].mu);
    CHECK(t.rows[i].lambda_prime_cm < t.rows[i - 1].lambda_prime_cm);
    const Regime a = t.rows[i - 1].regime;
    const Regime b = t.rows[i].regime;
    // never backwards along Quantum -> Transition -> Classical
    CHECK(static_cast<int>(b) >= static_cast<int>(a));
    if (a == Regime::Quantum && b == Regime::Transition) ++q_to_t;
    if (a == Regime::Transition && b == Regime::Classical) ++t_to_c;
  }
  CHECK(q_to_t == 1);
  CHECK(t_to_c == 1);
}

TEST_CASE("power-law slopes of the full solution") {
  auto slope_over = [](double lo, double hi, int n) {
    std::vector<double> mus, lps;
    for (int i = 0; i < n; ++i) {
      const double mu = lo * std::pow(hi / lo, double(i) / (n - 1));
      mus.push_back(mu);
      lps.push_back(solve_localization(LumpSpec::at_density(mu, 1e24))
                        .lambda_prime_cm);
    }
    return fit_loglog_slope(mus, lps);
  };
  CHECK(slope_over(1e2, 1e8, 13) == doctest::Approx(-3.0).epsilon(1e-3 / 3.0).scale(0.0));
  CHECK(slope_over(1e12, 1e16, 9) == doctest::Approx(-0.5).epsilon(1e-3 / 0.5).scale(0.0));
}

TEST_CASE("sweep with a fixed lambda0 override") {
  const SweepTable t = sweep(1.0, 1e4, 1, Mode::Paper, 1e24, 1e-7);
  for (const SweepRow& r : t.rows) {
    CHECK(r.lambda0_cm == 1e-7);
  }
  CHECK(t.rows[0].lambda_prime_cm ==
        doctest::Approx(solve_localization({1.0, 1e-7, Mode::Paper})
                            .lambda_prime_cm)
            .epsilon(1e-12).scale(0.0));
}

TEST_CASE("CSV serialization schema") {
  const SweepTable t = sweep(1.0, 100.0, 1, Mode::Paper, 1e24);
  std::ostringstream out;
  write_csv(t, out, 6);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "mu,lambda0_cm,lambda_prime_cm,x,K_log10,regime,e0_erg,ekin_erg,"
        "etotal_erg,mode");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 3);
  CHECK(out.str().find("Quantum") != std::string::npos);
  CHECK(out.str().find("paper") != std::string::npos);
}

TEST_CASE("JSON serialization parses with the documented fields") {
  const SweepTable t = sweep(1e8, 1e11, 2, Mode::Derived, 1e24);
  std::ostringstream out;
  write_json(t, out, 8);
  const auto parsed = nlohmann::json::parse(out.str());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == t.rows.size());
  for (const char* key : {"mu", "lambda0_cm", "lambda_prime_cm", "x",
                          "K_log10", "regime", "e0_erg", "ekin_erg",
                          "etotal_erg", "mode"}) {
    CHECK(parsed[0].contains(key));
  }
  CHECK(parsed[0]["mode"] == "derived");
  CHECK(parsed[0]["mu"].get<double>() == doctest::Approx(1e8).epsilon(1e-7).scale(0.0));
}

TEST_SUITE_END();
