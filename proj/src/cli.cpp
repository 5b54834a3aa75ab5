#include "gravloc/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gravloc/constants.hpp"
#include "gravloc/errors.hpp"
#include "gravloc/fit.hpp"
#include "gravloc/gravenergy.hpp"
#include "gravloc/regimes.hpp"
#include "gravloc/solver.hpp"

namespace gravloc {
namespace {

enum class OutputFormat { Table, Json, Csv };

struct CliConfig {
  std::string mode = "paper";  // paper | derived | both
  double density = 1e24;       // m_p / cm^3
  OutputFormat output = OutputFormat::Table;
  int precision = 6;

  std::vector<Mode> modes() const {
    if (mode == "paper") return {Mode::Paper};
    if (mode == "derived") return {Mode::Derived};
    return {Mode::Paper, Mode::Derived};
  }
};

std::string sci(double v, int precision) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*e", precision - 1, v);
  return buf;
}

// One output record: ordered key/value pairs, each value already formatted.
// Quoted values are strings in JSON; the rest pass through as numbers or
// booleans.
struct Field {
  std::string key;
  std::string value;
  bool quoted = false;
};

struct Doc {
  std::vector<Field> fields;
  void num(const std::string& key, double v, int precision) {
    fields.push_back({key, sci(v, precision), false});
  }
  void integer(const std::string& key, long v) {
    fields.push_back({key, std::to_string(v), false});
  }
  void boolean(const std::string& key, bool v) {
    fields.push_back({key, v ? "true" : "false", false});
  }
  void text(const std::string& key, const std::string& v) {
    fields.push_back({key, v, true});
  }
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

void emit_json_doc(const Doc& doc, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  out << pad << "{";
  for (std::size_t i = 0; i < doc.fields.size(); ++i) {
    const Field& f = doc.fields[i];
    out << "\"" << f.key << "\": ";
    if (f.quoted) {
      out << '"' << json_escape(f.value) << '"';
    } else {
      out << f.value;
    }
    if (i + 1 < doc.fields.size()) out << ", ";
  }
  out << "}";
}

void emit_docs(const std::vector<Doc>& docs, OutputFormat format,
               std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      if (docs.size() == 1) {
        emit_json_doc(docs[0], out, 0);
        out << "\n";
      } else {
        out << "[\n";
        for (std::size_t i = 0; i < docs.size(); ++i) {
          emit_json_doc(docs[i], out, 2);
          out << (i + 1 < docs.size() ? ",\n" : "\n");
        }
        out << "]\n";
      }
      break;
    case OutputFormat::Csv: {
      for (std::size_t i = 0; i < docs[0].fields.size(); ++i) {
        out << docs[0].fields[i].key
            << (i + 1 < docs[0].fields.size() ? "," : "\n");
      }
      for (const Doc& doc : docs) {
        for (std::size_t i = 0; i < doc.fields.size(); ++i) {
          out << doc.fields[i].value
              << (i + 1 < doc.fields.size() ? "," : "\n");
        }
      }
      break;
    }
    case OutputFormat::Table:
      for (std::size_t d = 0; d < docs.size(); ++d) {
        std::size_t width = 0;
        for (const Field& f : docs[d].fields) width = std::max(width, f.key.size());
        for (const Field& f : docs[d].fields) {
          out << f.key << std::string(width - f.key.size() + 2, ' ') << f.value
              << "\n";
        }
        if (d + 1 < docs.size()) out << "\n";
      }
      break;
  }
}

// Row-table emission (sweep, energy-profile, force-law): fixed column names,
// one value row per entry, with optional trailing summary fields.
struct RowTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // formatted values
  std::vector<Field> summary;                  // slope fits etc.
  std::vector<Field> context;                  // inputs echoed in JSON
};

void emit_rows(const RowTable& t, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json: {
      out << "{";
      for (const Field& f : t.context) {
        out << "\"" << f.key << "\": ";
        if (f.quoted) out << '"' << json_escape(f.value) << '"';
        else out << f.value;
        out << ", ";
      }
      out << "\"rows\": [\n";
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out << "  {";
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
          out << "\"" << t.columns[c] << "\": " << t.rows[r][c];
          if (c + 1 < t.columns.size()) out << ", ";
        }
        out << "}" << (r + 1 < t.rows.size() ? ",\n" : "\n");
      }
      out << "]";
      for (const Field& f : t.summary) {
        out << ", \"" << f.key << "\": ";
        if (f.quoted) out << '"' << json_escape(f.value) << '"';
        else out << f.value;
      }
      out << "}\n";
      break;
    }
    case OutputFormat::Csv: {
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        out << t.columns[c] << (c + 1 < t.columns.size() ? "," : "\n");
      }
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          out << row[c] << (c + 1 < row.size() ? "," : "\n");
        }
      }
      for (const Field& f : t.summary) {
        out << "# " << f.key << "," << f.value << "\n";
      }
      break;
    }
    case OutputFormat::Table: {
      std::vector<std::size_t> widths;
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        std::size_t w = t.columns[c].size();
        for (const auto& row : t.rows) w = std::max(w, row[c].size());
        widths.push_back(w);
      }
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        out << t.columns[c]
            << std::string(widths[c] - t.columns[c].size() + 2, ' ');
      }
      out << "\n";
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          out << row[c] << std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
      }
      for (const Field& f : t.summary) {
        out << f.key << "  " << f.value << "\n";
      }
      break;
    }
  }
}

// Writes to --out FILE when given, stdout otherwise.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback)
      : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::domain_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

Doc solve_doc(double mu, double lambda0, Mode mode, const CliConfig& cfg) {
  const LumpSpec spec{mu, lambda0, mode};
  const StationaryResult r = solve_localization(spec);
  const EnergyBreakdown e = total_energy(spec, r.lambda_prime_cm);
  Doc doc;
  doc.num("mu", mu, cfg.precision);
  doc.num("lambda0_cm", lambda0, cfg.precision);
  doc.text("mode", to_string(mode));
  doc.num("lambda_prime_cm", r.lambda_prime_cm, cfg.precision);
  doc.num("x", r.x, cfg.precision);
  doc.num("K_log10", r.k_log10, cfg.precision);
  doc.num("residual", r.residual, cfg.precision);
  doc.boolean("curvature_positive", r.curvature_positive);
  doc.integer("iterations", r.iterations);
  doc.text("regime", to_string(classify(r).label));
  doc.num("e0_erg", e.e0_erg, cfg.precision);
  doc.num("ekin_erg", e.ekin_erg, cfg.precision);
  doc.num("etotal_erg", e.etotal_erg, cfg.precision);
  return doc;
}

}  // namespace

DensityProfile load_tabulated_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open profile CSV: " + path);
  std::vector<double> r, rho;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    std::string cleaned = line;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream fields(cleaned);
    double rv = 0.0, dv = 0.0;
    if (!(fields >> rv >> dv)) {
      const bool looks_like_header =
          lineno == 1 && std::any_of(line.begin(), line.end(), [](char ch) {
            return std::isalpha(static_cast<unsigned char>(ch));
          });
      if (looks_like_header) continue;
      throw std::domain_error("profile CSV " + path + ": cannot parse line " +
                              std::to_string(lineno) + ": " + line);
    }
    r.push_back(rv);
    rho.push_back(dv);
  }
  return DensityProfile::tabulated(std::move(r), std::move(rho));
}

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"gravloc: gravitationally induced localization lengths for "
               "matter lumps (CGS units)"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--mode", cfg.mode, "Stationarity coefficient: paper, derived, or both")
      ->check(CLI::IsMember({"paper", "derived", "both"}))
      ->capture_default_str();
  app.add_option("--density", cfg.density,
                 "Reference number-mass density [m_p/cm^3]")
      ->envname("GRAVLOC_DENSITY")
      ->capture_default_str();
  std::string output_name = "table";
  app.add_option("--output", output_name, "Output format: table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--precision", cfg.precision,
                 "Significant digits for printed numbers")
      ->check(CLI::Range(3, 17))
      ->capture_default_str();
  app.set_config("--config", "", "Config file of key = value lines (flags win)");

  std::function<void(std::ostream&)> action;

  // constants
  app.add_subcommand("constants", "Print the physical constant set")
      ->callback([&] {
        action = [&cfg](std::ostream& o) {
          const Constants& k = constants();
          Doc doc;
          doc.num("G_cm3_g_s2", k.G, cfg.precision);
          doc.num("hbar_erg_s", k.hbar, cfg.precision);
          doc.num("c_cm_s", k.c, cfg.precision);
          doc.num("m_p_g", k.m_p, cfg.precision);
          doc.num("rho_ref_mp_cm3", cfg.density, cfg.precision);
          emit_docs({doc}, cfg.output, o);
        };
      });

  // solve
  {
    auto* cmd = app.add_subcommand("solve", "Maximum localization length for one mass");
    auto mu = std::make_shared<double>(0.0);
    auto lambda0 = std::make_shared<std::optional<double>>();
    cmd->add_option("--mu", *mu, "Mass in proton masses")->required();
    cmd->add_option("--lambda0", *lambda0,
                    "Inner dispersion [cm]; defaults to density-derived");
    cmd->callback([&, mu, lambda0] {
      action = [&cfg, mu, lambda0](std::ostream& o) {
        std::vector<Doc> docs;
        for (Mode mode : cfg.modes()) {
          const double l0 =
              lambda0->has_value() ? **lambda0 : lambda0_from_mu(*mu, cfg.density);
          docs.push_back(solve_doc(*mu, l0, mode, cfg));
        }
        emit_docs(docs, cfg.output, o);
      };
    });
  }

  // sweep
  {
    auto* cmd = app.add_subcommand("sweep", "Solve over a log-spaced mass grid");
    auto mu_min = std::make_shared<double>(0.0);
    auto mu_max = std::make_shared<double>(0.0);
    auto per_decade = std::make_shared<int>(1);
    auto out_path = std::make_shared<std::string>();
    auto lambda0 = std::make_shared<std::optional<double>>();
    cmd->add_option("--mu-min", *mu_min, "Lowest mass [m_p]")->required();
    cmd->add_option("--mu-max", *mu_max, "Highest mass [m_p]")->required();
    cmd->add_option("--per-decade", *per_decade, "Grid points per decade")
        ->required();
    cmd->add_option("--out", *out_path, "Write the table to a file");
    cmd->add_option("--lambda0", *lambda0,
                    "Fixed inner dispersion [cm] instead of density-derived");
    cmd->callback([&, mu_min, mu_max, per_decade, out_path, lambda0] {
      action = [&cfg, mu_min, mu_max, per_decade, out_path,
                lambda0](std::ostream& o) {
        std::optional<double> override_l0 =
            lambda0->has_value() ? std::optional<double>(**lambda0)
                                 : std::nullopt;
        const auto modes = cfg.modes();
        SweepTable merged;
        std::vector<SweepTable> tables;
        for (Mode mode : modes) {
          tables.push_back(sweep(*mu_min, *mu_max, *per_decade, mode,
                                 cfg.density, override_l0));
        }
        for (std::size_t i = 0; i < tables[0].rows.size(); ++i) {
          for (const SweepTable& t : tables) merged.rows.push_back(t.rows[i]);
        }
        OutputTarget target(*out_path, o);
        if (cfg.output == OutputFormat::Json) {
          write_json(merged, target.stream(), cfg.precision);
        } else if (cfg.output == OutputFormat::Csv) {
          write_csv(merged, target.stream(), cfg.precision);
        } else {
          RowTable t;
          t.columns = {"mu", "lambda0_cm", "lambda_prime_cm", "x", "K_log10",
                       "regime", "e0_erg", "ekin_erg", "etotal_erg", "mode"};
          for (const SweepRow& r : merged.rows) {
            t.rows.push_back({sci(r.mu, cfg.precision),
                              sci(r.lambda0_cm, cfg.precision),
                              sci(r.lambda_prime_cm, cfg.precision),
                              sci(r.x, cfg.precision),
                              sci(r.k_log10, cfg.precision),
                              to_string(r.regime),
                              sci(r.e0_erg, cfg.precision),
                              sci(r.ekin_erg, cfg.precision),
                              sci(r.etotal_erg, cfg.precision),
                              to_string(r.mode)});
          }
          emit_rows(t, OutputFormat::Table, target.stream());
        }
      };
    });
  }

  // asymptotics
  {
    auto* cmd = app.add_subcommand(
        "asymptotics", "Asymptotic laws vs the full solution for one mass");
    auto mu = std::make_shared<double>(0.0);
    cmd->add_option("--mu", *mu, "Mass in proton masses")->required();
    cmd->callback([&, mu] {
      action = [&cfg, mu](std::ostream& o) {
        std::vector<Doc> docs;
        for (Mode mode : cfg.modes()) {
          const LumpSpec spec = LumpSpec::at_density(*mu, cfg.density, mode);
          const StationaryResult r = solve_localization(spec);
          const double small = asymptote_small(*mu, mode);
          const double large = asymptote_large(*mu, mode, cfg.density);
          Doc doc;
          doc.num("mu", *mu, cfg.precision);
          doc.text("mode", to_string(mode));
          doc.num("lambda0_cm", spec.lambda0_cm, cfg.precision);
          doc.num("lambda_prime_cm", r.lambda_prime_cm, cfg.precision);
          doc.num("asymptote_small_cm", small, cfg.precision);
          doc.num("asymptote_large_cm", large, cfg.precision);
          doc.num("dev_small", r.lambda_prime_cm / small - 1.0, cfg.precision);
          doc.num("dev_large", r.lambda_prime_cm / large - 1.0, cfg.precision);
          docs.push_back(doc);
        }
        emit_docs(docs, cfg.output, o);
      };
    });
  }

  // crossover
  app.add_subcommand("crossover",
                     "Quantum/classical transition location and width")
      ->callback([&] {
        action = [&cfg](std::ostream& o) {
          std::vector<Doc> docs;
          for (Mode mode : cfg.modes()) {
            const TransitionWindow w = transition_window(mode, cfg.density);
            Doc doc;
            doc.text("mode", to_string(mode));
            doc.num("rho_ref_mp_cm3", cfg.density, cfg.precision);
            doc.num("crossover_mu", crossover_mu(mode, cfg.density),
                    cfg.precision);
            doc.num("mu_quantum_boundary", w.mu_quantum, cfg.precision);
            doc.num("mu_classical_boundary", w.mu_classical, cfg.precision);
            doc.num("transition_width_decades", w.width_decades, cfg.precision);
            docs.push_back(doc);
          }
          emit_docs(docs, cfg.output, o);
        };
      });

  // energy-profile
  {
    auto* cmd = app.add_subcommand(
        "energy-profile", "Total-energy breakdown along a lambda' grid");
    auto mu = std::make_shared<double>(0.0);
    auto lp_min = std::make_shared<double>(0.0);
    auto lp_max = std::make_shared<double>(0.0);
    auto points = std::make_shared<int>(0);
    auto lambda0 = std::make_shared<std::optional<double>>();
    cmd->add_option("--mu", *mu, "Mass in proton masses")->required();
    cmd->add_option("--lp-min", *lp_min, "Lowest lambda' [cm]")->required();
    cmd->add_option("--lp-max", *lp_max, "Highest lambda' [cm]")->required();
    cmd->add_option("--points", *points, "Grid points")->required();
    cmd->add_option("--lambda0", *lambda0,
                    "Inner dispersion [cm]; defaults to density-derived");
    cmd->callback([&, mu, lp_min, lp_max, points, lambda0] {
      action = [&cfg, mu, lp_min, lp_max, points, lambda0](std::ostream& o) {
        require_positive(*lp_min, "lp-min");
        require_positive(*lp_max, "lp-max");
        if (!(*lp_min < *lp_max)) {
          throw std::domain_error("lp-min must be less than lp-max");
        }
        if (*points < 2) throw std::domain_error("points must be at least 2");
        const double l0 =
            lambda0->has_value() ? **lambda0 : lambda0_from_mu(*mu, cfg.density);
        const LumpSpec spec{*mu, l0, Mode::Paper};
        RowTable t;
        t.context.push_back({"mu", sci(*mu, cfg.precision), false});
        t.context.push_back({"lambda0_cm", sci(l0, cfg.precision), false});
        t.columns = {"lambda_prime_cm", "e0_erg", "ekin_erg", "etotal_erg"};
        const double span = std::log10(*lp_max / *lp_min);
        for (int i = 0; i < *points; ++i) {
          const double lp =
              i == 0 ? *lp_min
                     : (i == *points - 1
                            ? *lp_max
                            : *lp_min * std::pow(10.0, span * i / (*points - 1)));
          const EnergyBreakdown e = total_energy(spec, lp);
          t.rows.push_back({sci(lp, cfg.precision), sci(e.e0_erg, cfg.precision),
                            sci(e.ekin_erg, cfg.precision),
                            sci(e.etotal_erg, cfg.precision)});
        }
        emit_rows(t, cfg.output, o);
      };
    });
  }

  // force-law
  {
    auto* cmd = app.add_subcommand(
        "force-law", "Two regularized sources: energy, force, power-law fit");
    auto sigma = std::make_shared<double>(0.0);
    auto d_min = std::make_shared<double>(0.0);
    auto d_max = std::make_shared<double>(0.0);
    auto points = std::make_shared<int>(25);
    auto m1 = std::make_shared<double>(1.0);
    auto m2 = std::make_shared<double>(1.0);
    cmd->add_option("--sigma", *sigma, "Regularization width [cm]")->required();
    cmd->add_option("--d-min", *d_min, "Lowest separation [cm]")->required();
    cmd->add_option("--d-max", *d_max, "Highest separation [cm]")->required();
    cmd->add_option("--points", *points, "Grid points")->capture_default_str();
    cmd->add_option("--m1", *m1, "First source mass [g]")->capture_default_str();
    cmd->add_option("--m2", *m2, "Second source mass [g]")->capture_default_str();
    cmd->callback([&, sigma, d_min, d_max, points, m1, m2] {
      action = [&cfg, sigma, d_min, d_max, points, m1, m2](std::ostream& o) {
        require_positive(*d_min, "d-min");
        require_positive(*d_max, "d-max");
        if (!(*d_min < *d_max)) {
          throw std::domain_error("d-min must be less than d-max");
        }
        if (*points < 2) throw std::domain_error("points must be at least 2");
        RowTable t;
        t.context.push_back({"sigma_cm", sci(*sigma, cfg.precision), false});
        t.context.push_back({"m1_g", sci(*m1, cfg.precision), false});
        t.context.push_back({"m2_g", sci(*m2, cfg.precision), false});
        t.columns = {"d_cm", "e_int_erg", "force_fd_dyn", "force_analytic_dyn"};
        std::vector<double> ds, forces;
        double max_mismatch = 0.0;
        const double span = std::log10(*d_max / *d_min);
        for (int i = 0; i < *points; ++i) {
          const double d =
              i == 0 ? *d_min
                     : (i == *points - 1
                            ? *d_max
                            : *d_min * std::pow(10.0, span * i / (*points - 1)));
          const TwoSourceSpec two{*m1, *m2, *sigma, d};
          const double e = two_source_interaction(two);
          const double f_fd = two_source_force(two);
          const double f_an = two_source_force_analytic(two);
          max_mismatch = std::max(max_mismatch, std::abs(f_fd / f_an - 1.0));
          ds.push_back(d);
          forces.push_back(f_fd);
          t.rows.push_back({sci(d, cfg.precision), sci(e, cfg.precision),
                            sci(f_fd, cfg.precision), sci(f_an, cfg.precision)});
        }
        t.summary.push_back(
            {"fitted_slope", sci(fit_loglog_slope(ds, forces), cfg.precision),
             false});
        t.summary.push_back(
            {"max_route_mismatch", sci(max_mismatch, cfg.precision), false});
        emit_rows(t, cfg.output, o);
      };
    });
  }

  // e0-check
  {
    auto* cmd = app.add_subcommand(
        "e0-check", "Closed-form vs momentum-integral ground-state energy");
    auto lambda = std::make_shared<double>(1.0);
    auto mass = std::make_shared<double>(1.0);
    auto csv_path = std::make_shared<std::string>();
    auto* mass_opt =
        cmd->add_option("--mass", *mass, "Total mass [g]")->capture_default_str();
    cmd->add_option("--lambda", *lambda, "Gaussian dispersion [cm]")
        ->capture_default_str();
    cmd->add_option("--profile-csv", *csv_path,
                    "Tabulated profile CSV (r_cm, rho_g_per_cm3) instead of a "
                    "Gaussian");
    cmd->callback([&, lambda, mass, csv_path, mass_opt] {
      action = [&cfg, lambda, mass, csv_path, mass_opt](std::ostream& o) {
        Doc doc;
        if (!csv_path->empty()) {
          DensityProfile profile = load_tabulated_csv(*csv_path);
          if (mass_opt->count() > 0) profile = profile.with_mass(*mass);
          doc.text("profile_csv", *csv_path);
          doc.num("mass_g", profile.total_mass_g(), cfg.precision);
          doc.num("e0_quadrature_erg", e0_quadrature(profile), cfg.precision);
        } else {
          const double closed = e0_closed_gaussian(*mass, *lambda);
          const double quad =
              e0_quadrature(DensityProfile::gaussian(*mass, *lambda));
          doc.num("mass_g", *mass, cfg.precision);
          doc.num("lambda_cm", *lambda, cfg.precision);
          doc.num("e0_closed_erg", closed, cfg.precision);
          doc.num("e0_quadrature_erg", quad, cfg.precision);
          doc.num("ratio", quad / closed, cfg.precision);
          doc.text("note", "closed-form/integral mismatch: quadrature/closed "
                           "= 1/(4 pi^{3/2}) for Gaussian profiles");
        }
        emit_docs({doc}, cfg.output, o);
      };
    });
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (output_name == "json") cfg.output = OutputFormat::Json;
  else if (output_name == "csv") cfg.output = OutputFormat::Csv;
  else cfg.output = OutputFormat::Table;

  try {
    require_positive(cfg.density, "density");
    action(out);
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(std::move(args), out, err);
}

}  // namespace gravloc
