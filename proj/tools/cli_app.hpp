#pragma once

// Command-line front end. run() parses argv, writes results to out and
// diagnostics to err, and returns the process exit code:
// 0 success, 1 verification failure, 2 usage or domain error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "antilap.hpp"

namespace antilap::cli {

enum class Format { Default, Csv, Json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Settings shared by all subcommands. Config values are applied first and
/// explicit flags override them.
struct Settings {
  QuadratureSpec quad;
  StencilSpec fd{1e-2, 2};
  PairingSpec pair;
  int fit_samples = 32;
};

inline const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {"quad.abs_tol", "quad.rel_tol", "quad.max_depth",
                                                "fd.h",         "fd.order",     "pair.rho0",
                                                "pair.eps_ratio", "pair.steps", "fit.samples"};
  return keys;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_number(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw UsageError("config: '" + key + "' needs a number, got '" + v + "'");
  return d;
}

inline int parse_integer(const std::string& key, const std::string& v) {
  const double d = parse_number(key, v);
  if (d != static_cast<int>(d)) throw UsageError("config: '" + key + "' needs an integer, got '" + v + "'");
  return static_cast<int>(d);
}

inline void apply_setting(Settings& s, const std::string& key, const std::string& v) {
  if (key == "quad.abs_tol") s.quad.abs_tol = parse_number(key, v);
  else if (key == "quad.rel_tol") s.quad.rel_tol = parse_number(key, v);
  else if (key == "quad.max_depth") s.quad.max_depth = parse_integer(key, v);
  else if (key == "fd.h") s.fd.h = parse_number(key, v);
  else if (key == "fd.order") s.fd.order = parse_integer(key, v);
  else if (key == "pair.rho0") s.pair.rho0 = parse_number(key, v);
  else if (key == "pair.eps_ratio") s.pair.eps_ratio = parse_number(key, v);
  else if (key == "pair.steps") s.pair.steps = parse_integer(key, v);
  else if (key == "fit.samples") s.fit_samples = parse_integer(key, v);
  else throw UsageError("config: unknown key '" + key + "'");
}

/// key = value lines; '#' starts a comment.
inline void read_config(Settings& s, std::istream& in, const std::string& origin) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    apply_setting(s, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

inline void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline int exit_for(bool pass) { return pass ? 0 : 1; }

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numerical toolkit for n-dimensional anti-Laplacian solution families", "antilap"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string format_name;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> overrides;
  app.add_option("--config", config_path, "key = value settings file")->check(CLI::ExistingFile);
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", seed, "Seed for randomized draws");
  const auto add_override = [&](const std::string& flag, const std::string& key, const std::string& help) {
    app.add_option_function<std::string>(flag, [&overrides, key](const std::string& v) { overrides[key] = v; }, help);
  };
  add_override("--abs-tol", "quad.abs_tol", "Quadrature absolute tolerance");
  add_override("--rel-tol", "quad.rel_tol", "Quadrature relative tolerance");
  add_override("--max-depth", "quad.max_depth", "Quadrature subdivision depth");
  add_override("--fd-h", "fd.h", "Finite-difference step");
  add_override("--fd-order", "fd.order", "Finite-difference stencil order (2 or 4)");
  add_override("--rho0", "pair.rho0", "Trial-function radius");
  add_override("--eps-ratio", "pair.eps_ratio", "Box shrink factor per step");
  add_override("--steps", "pair.steps", "Number of boxes per limit path");
  add_override("--samples", "fit.samples", "Samples per asymptotic fit");

  std::string family_name;
  int n = 0;
  const auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", family_name, "Solution family")->required();
    sub->add_option("--n", n, "Dimension")->required();
  };

  auto* coeffs = app.add_subcommand("coeffs", "Coefficient row for one n");
  std::string coeff_family = "a";
  coeffs->add_option("--family", coeff_family, "a, b or a-even")->check(CLI::IsMember({"a", "b", "a-even"}));
  coeffs->add_option("--n", n, "Dimension")->required();

  auto* tri = app.add_subcommand("triangle", "Coefficient triangle");
  int max_n = 15;
  std::string tri_family = "a";
  tri->add_option("--family", tri_family, "a, b or a-even")->check(CLI::IsMember({"a", "b", "a-even"}));
  tri->add_option("--max-n", max_n, "Last row");

  auto* build_cmd = app.add_subcommand("build", "Term sum or ring integrand of a family");
  add_family(build_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a family at one point");
  add_family(eval_cmd);
  double a = 1.0, r = 1.0, z = 0.0;
  eval_cmd->add_option("--a", a, "Ring radius");
  eval_cmd->add_option("--r", r, "r coordinate (x for the x frame)")->required();
  eval_cmd->add_option("--z", z, "z coordinate");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::string scope = "all";
  std::vector<std::string> suites;
  int verify_max_n = 0;
  verify_cmd->add_option("scope", scope, "symbolic, numeric or all")
      ->check(CLI::IsMember({"symbolic", "numeric", "all"}));
  verify_cmd->add_option("--suite", suites, "Run only the named suite(s)");
  verify_cmd->add_option("--max-n", verify_max_n, "Largest n for symbolic suites");

  auto* pair_cmd = app.add_subcommand("pair", "Pairing of a point solution with a bump trial function");
  add_family(pair_cmd);
  std::string extrapolation = "richardson";
  pair_cmd->add_option("--extrapolation", extrapolation, "richardson or last")
      ->check(CLI::IsMember({"richardson", "last"}));

  auto* asympt_cmd = app.add_subcommand("asympt", "Fit far- or near-zone behaviour");
  add_family(asympt_cmd);
  std::string direction = "r-large", mode;
  double fixed = 1.0, lo = 1e2, hi = 1e4;
  asympt_cmd->add_option("--a", a, "Ring radius");
  asympt_cmd->add_option("--direction", direction, "r-large, z-large, r-small or z-axis");
  asympt_cmd->add_option("--fixed", fixed, "Value of the other coordinate");
  asympt_cmd->add_option("--lo", lo, "Start of the fit range");
  asympt_cmd->add_option("--hi", hi, "End of the fit range");
  asympt_cmd->add_option("--mode", mode, "power or log (default by family)")->check(CLI::IsMember({"power", "log"}));

  auto* plot_cmd = app.add_subcommand("plotdata", "Field values on a rectangular grid");
  add_family(plot_cmd);
  double r_min = 0.5, r_max = 2.0, z_min = 0.5, z_max = 2.0;
  int nr = 10, nz = 10;
  plot_cmd->add_option("--a", a, "Ring radius");
  plot_cmd->add_option("--r-min", r_min, "First r");
  plot_cmd->add_option("--r-max", r_max, "Last r");
  plot_cmd->add_option("--nr", nr, "Number of r values")->check(CLI::PositiveNumber);
  plot_cmd->add_option("--z-min", z_min, "First z");
  plot_cmd->add_option("--z-max", z_max, "Last z");
  plot_cmd->add_option("--nz", nz, "Number of z values")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "antilap: " << e.what() << "\n";
    return 2;
  }

  const auto format_for = [&](Format fallback) {
    if (format_name == "csv") return Format::Csv;
    if (format_name == "json") return Format::Json;
    return fallback;
  };

  try {
    Settings settings;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot open config file '" + config_path + "'");
      read_config(settings, in, config_path);
    }
    for (const auto& [key, value] : overrides) apply_setting(settings, key, value);
    settings.quad.validate();
    settings.fd.validate();
    settings.pair.validate();
    if (settings.fit_samples < 3) throw UsageError("fit.samples must be at least 3");

    const auto family = [&] {
      SolutionFamily fam{parse_family(family_name), n};
      validate(fam);
      return fam;
    };

    if (*coeffs) {
      const Format f = format_for(Format::Csv);
      TriangleRow row;
      const CoeffFamily cf = coeff_family == "a" ? CoeffFamily::AOdd
                             : coeff_family == "b" ? CoeffFamily::BOdd
                                                   : CoeffFamily::AEven;
      if (cf == CoeffFamily::AEven) {
        row = {n, 4, {}};
        for (int l = 4; l <= n; l += 2) row.values.push_back(a_coeff_even(l, n));
      } else {
        row = {n, 3, {}};
        for (int k = 3; k <= n; k += 2) row.values.push_back(cf == CoeffFamily::AOdd ? a_coeff(k, n) : b_coeff(k, n));
      }
      if (row.values.empty()) throw DomainError("coeffs: empty row for n=" + std::to_string(n));
      Rational sum = 0;
      for (const auto& v : row.values) sum += v;
      if (f == Format::Json) {
        Json vals = Json::array();
        for (std::size_t i = 0; i < row.values.size(); ++i) {
          vals.push_back({{"k", row.first_k + 2 * static_cast<int>(i)}, {"value", to_string(row.values[i])}});
        }
        write_json(out, {{"family", coeff_family}, {"n", n}, {"coeffs", vals}, {"sum", to_string(sum)}});
      } else {
        out << "k,value\n";
        for (std::size_t i = 0; i < row.values.size(); ++i) {
          out << row.first_k + 2 * static_cast<int>(i) << "," << to_string(row.values[i]) << "\n";
        }
      }
      return 0;
    }

    if (*tri) {
      const Format f = format_for(Format::Csv);
      const CoeffFamily cf = tri_family == "a" ? CoeffFamily::AOdd
                             : tri_family == "b" ? CoeffFamily::BOdd
                                                 : CoeffFamily::AEven;
      const auto rows = triangle(cf, max_n);
      if (f == Format::Json) {
        Json jr = Json::array();
        for (const auto& row : rows) {
          Json vals = Json::array();
          for (const auto& v : row.values) vals.push_back(to_string(v));
          jr.push_back({{"n", row.n}, {"first_k", row.first_k}, {"values", vals}});
        }
        write_json(out, {{"family", tri_family}, {"rows", jr}});
      } else {
        out << "n,k,value\n";
        for (const auto& row : rows) {
          for (std::size_t i = 0; i < row.values.size(); ++i) {
            out << row.n << "," << row.first_k + 2 * static_cast<int>(i) << "," << to_string(row.values[i]) << "\n";
          }
        }
      }
      return 0;
    }

    if (*build_cmd) {
      const auto fam = family();
      const Built b = build(fam);
      if (format_for(Format::Json) == Format::Json) {
        Json j = to_json(b);
        j["family"] = to_string(fam.tag);
        j["n"] = fam.n;
        write_json(out, j);
      } else if (const auto* ts = std::get_if<TermSum2D>(&b)) {
        out << "c,r,z,Rbar,log\n";
        for (const auto& m : ts->terms()) {
          out << to_string(m.coeff) << "," << m.r_pow << "," << m.z_pow << "," << m.rbar_pow << ","
              << static_cast<int>(m.log) << "\n";
        }
      } else if (const auto* ts1 = std::get_if<TermSum1D>(&b)) {
        out << "c,x,log\n";
        for (const auto& m : ts1->terms()) out << to_string(m.coeff) << "," << m.x_pow << "," << m.log << "\n";
      } else {
        const auto& ri = std::get<RingIntegrand>(b);
        out << "c,z,R,log\n";
        for (const auto& t : ri.terms) out << to_string(t.coeff) << "," << t.z_pow << "," << t.R_pow << "," << t.log << "\n";
      }
      return 0;
    }

    if (*eval_cmd) {
      const auto fam = family();
      const RingValue v = eval_built(build(fam), r, z, a, settings.quad);
      if (format_for(Format::Csv) == Format::Json) {
        write_json(out, {{"family", to_string(fam.tag)}, {"n", fam.n}, {"a", a}, {"r", r}, {"z", z},
                         {"value", v.value}, {"err", v.error}});
      } else {
        out << "r,z,value,err\n"
            << format_double(r) << "," << format_double(z) << "," << format_double(v.value) << ","
            << format_double(v.error) << "\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      VerifyOptions opt;
      opt.max_n = verify_max_n;
      opt.seed = seed;
      opt.quad = settings.quad;
      opt.fd = settings.fd;
      opt.pair = settings.pair;
      opt.fit_samples = settings.fit_samples;
      std::vector<std::string> names = suites;
      if (names.empty()) {
        if (scope != "numeric") names.insert(names.end(), symbolic_suites().begin(), symbolic_suites().end());
        if (scope != "symbolic") names.insert(names.end(), numeric_suites().begin(), numeric_suites().end());
      }
      bool pass = true;
      Json results = Json::array();
      for (const auto& name : names) {
        Json res = run_suite(name, opt);
        pass = pass && res.at("pass").get<bool>();
        results.push_back(std::move(res));
      }
      Json report = {{"scope", scope}, {"seed", seed}, {"pass", pass}, {"suites", results}};
      if (format_for(Format::Json) == Format::Csv) {
        out << "suite,check,pass\n";
        for (const auto& s : results) {
          for (const auto& c : s.at("checks")) {
            out << s.at("suite").get<std::string>() << "," << c.at("name").get<std::string>() << ","
                << (c.at("pass").get<bool>() ? 1 : 0) << "\n";
          }
        }
      } else {
        write_json(out, report);
      }
      if (!pass) err << "antilap: verification failed\n";
      return exit_for(pass);
    }

    if (*pair_cmd) {
      const auto fam = family();
      PairingSpec spec = settings.pair;
      spec.extrapolation = extrapolation == "last" ? Extrapolation::LastValue : Extrapolation::Richardson;
      Json report;
      bool pass = false;
      try {
        const auto rep = pairing(fam, spec, settings.quad);
        report = to_json(rep);
        pass = rep.pass;
      } catch (const ConvergenceError& e) {
        report = {{"op", "pair"},        {"family", to_string(fam.tag)}, {"n", fam.n},
                  {"error", e.what()},   {"partial", e.partial()},        {"error_estimate", e.error()},
                  {"pass", false}};
      }
      if (format_for(Format::Json) == Format::Csv) {
        out << "path,eps,eta,value\n";
        for (const auto& p : report.value("paths", Json::array())) {
          for (std::size_t i = 0; i < p.at("values").size(); ++i) {
            out << p.at("path").get<std::string>() << "," << format_double(p.at("points")[i][0].get<double>())
                << "," << format_double(p.at("points")[i][1].get<double>()) << ","
                << format_double(p.at("values")[i].get<double>()) << "\n";
          }
        }
      } else {
        write_json(out, report);
      }
      if (!pass) err << "antilap: pairing check failed\n";
      return exit_for(pass);
    }

    if (*asympt_cmd) {
      const auto fam = family();
      SlopeSpec spec;
      spec.direction = parse_direction(direction);
      spec.fixed = fixed;
      spec.lo = lo;
      spec.hi = hi;
      spec.a = a;
      spec.samples = settings.fit_samples;
      spec.mode = mode.empty() ? default_fit_mode(fam) : (mode == "log" ? FitMode::Log : FitMode::Power);
      const auto rep = slope_fit(fam, spec, settings.quad);
      if (format_for(Format::Json) == Format::Csv) {
        out << "t,value\n";
        for (std::size_t i = 0; i < rep.t.size(); ++i) {
          out << format_double(rep.t[i]) << "," << format_double(rep.values[i]) << "\n";
        }
      } else {
        write_json(out, to_json(rep));
      }
      return 0;
    }

    if (*plot_cmd) {
      const auto fam = family();
      if (format_for(Format::Csv) != Format::Csv) throw UsageError("plotdata emits CSV only");
      const Built b = build(fam);
      const auto axis = [](double lo_v, double hi_v, int count, int i) {
        return count == 1 ? lo_v : lo_v + (hi_v - lo_v) * i / (count - 1);
      };
      std::ostringstream body;
      int singular = 0;
      for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nz; ++j) {
          const double rr = axis(r_min, r_max, nr, i), zz = axis(z_min, z_max, nz, j);
          body << format_double(rr) << "," << format_double(zz) << ",";
          try {
            const double v = eval_built(b, rr, zz, a, settings.quad).value;
            if (!std::isfinite(v)) throw SingularityError("non-finite value");
            body << format_double(v);
          } catch (const SingularityError&) {
            ++singular;
          }
          body << "\n";
        }
      }
      if (singular == nr * nz) throw DomainError("plotdata: every grid point is singular");
      out << "r,z,value\n" << body.str();
      if (singular > 0) err << "antilap: warning: " << singular << " singular grid point(s) left empty\n";
      return 0;
    }
  } catch (const UsageError& e) {
    err << "antilap: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "antilap: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "antilap: " << e.what() << "\n";
    return 2;
  } catch (const SingularityError& e) {
    err << "antilap: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "antilap: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace antilap::cli
