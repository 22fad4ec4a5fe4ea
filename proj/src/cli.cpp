#include "qubound/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qubound/optimizer.hpp"
#include "qubound/scenario.hpp"
#include "qubound/verify.hpp"

namespace qubound {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string cnum(const Complex& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type begin = 0;
  while (true) {
    const auto end = text.find(sep, begin);
    parts.push_back(text.substr(begin, end - begin));
    if (end == std::string::npos) break;
    begin = end + 1;
  }
  return parts;
}

double parse_double(const std::string& text, const char* what) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": '" + text + "' is not a number");
  }
  if (pos != text.size() || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + ": '" + text + "' is not a finite number");
  }
  return value;
}

long long parse_integer(const std::string& text, const char* what) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": '" + text + "' is not an integer");
  }
  if (pos != text.size()) {
    throw std::invalid_argument(std::string(what) + ": '" + text + "' is not an integer");
  }
  return value;
}

std::vector<int> parse_dim_list(const std::string& csv) {
  std::vector<int> dims;
  for (const std::string& part : split(csv, ',')) {
    const long long d = parse_integer(part, "dims");
    if (d < 2 || d > 512) {
      throw std::invalid_argument("dims: dimension " + part + " out of range [2, 512]");
    }
    dims.push_back(static_cast<int>(d));
  }
  return dims;
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read scenario file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// One table row; label is the *requested* family, which differs from
// report.family when a missing perp fell back to the plain HRS form.
void print_report_row(std::ostream& out, std::string_view label, const BoundReport& report) {
  out << pad(std::string(label), 16) << pad(num(report.lhs), 20) << pad(num(report.rhs), 20)
      << pad(num(report.slack), 20) << (report.satisfied ? "yes" : "NO ");
  if (report.alpha) {
    out << "  alpha*=" << num(*report.alpha);
  }
  if (report.context) {
    out << "  z=" << cnum(report.context->z) << "  w=" << cnum(report.context->w);
  }
  if (report.degenerate) {
    out << "  degenerate";
  }
  if (!report.context && label != family_name(report.family)) {
    out << "  (hrs fallback)";
  }
  out << "\n";
}

void print_table_header(std::ostream& out) {
  out << pad("family", 16) << pad("lhs", 20) << pad("rhs", 20) << pad("slack", 20)
      << "satisfied\n";
}

int cmd_bounds(const Scenario& scenario, std::ostream& out, std::ostream& err) {
  if (scenario.perp_mode == PerpMode::Optimize) {
    err << "error: this scenario sets perp to \"optimize\"; use the optimize command\n";
    return 2;
  }
  const StateVector* perp = scenario.perp ? &*scenario.perp : nullptr;
  std::vector<BoundReport> reports;
  reports.reserve(scenario.families.size());
  for (BoundFamily family : scenario.families) {
    reports.push_back(evaluate(family, scenario.operator_a, scenario.operator_b, scenario.state,
                               perp));
  }

  out << "# dimension " << scenario.dimension << ", hbar " << num(scenario.hbar) << ", perp "
      << (perp ? "explicit" : "none") << "\n";
  print_table_header(out);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    print_report_row(out, family_name(scenario.families[i]), reports[i]);
  }
  return bounds_exit_code(reports);
}

int cmd_sweep(SweepPreset preset, const std::vector<BoundFamily>& families,
              const std::vector<double>& grid, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  const SweepTable table = sweep_theta(preset, families, grid);

  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  file << "theta,var_a,var_b,family,lhs,rhs,slack,satisfied\n";
  int violations = 0;
  for (const SweepRow& row : table.rows) {
    file << num(row.theta) << ',' << num(row.var_a) << ',' << num(row.var_b) << ','
         << family_name(row.family) << ',' << num(row.lhs) << ',' << num(row.rhs) << ','
         << num(row.slack) << ',' << (row.satisfied ? "true" : "false") << '\n';
    if (!row.satisfied) ++violations;
  }
  file.flush();
  if (!file.good()) {
    err << "error: write failure on '" << out_path << "'\n";
    return 2;
  }
  out << "wrote " << table.rows.size() << " rows to " << out_path << "\n";
  return violations == 0 ? 0 : 1;
}

int cmd_verify(const SuiteConfig& config, std::ostream& out) {
  const SuiteReport report = run_suite(config);

  out << "instances run: " << report.instances_run << "\n";
  out << "worst slack:   " << num(report.worst_slack) << "\n";
  if (report.failures.empty()) {
    out << "failures:      none\n";
  } else {
    out << "failures:      " << report.failures.size() << "\n";
    const std::size_t shown = std::min<std::size_t>(report.failures.size(), 25);
    for (std::size_t i = 0; i < shown; ++i) {
      const SuiteFailure& f = report.failures[i];
      out << "  " << pad(f.invariant, 32) << " dim=" << f.dim << " seed=" << f.seed
          << " slack=" << num(f.slack) << "\n";
    }
    if (shown < report.failures.size()) {
      out << "  ... " << report.failures.size() - shown << " more\n";
    }
  }
  out << "claims:\n";
  for (const ClaimResult& claim : report.claims) {
    out << "  " << pad(std::string(claim_verdict_name(claim.verdict)), 10)
        << pad(claim.name, 44) << " " << claim.detail << "\n";
  }
  out << (report.passed() ? "suite passed\n" : "suite FAILED\n");
  return report.passed() ? 0 : 1;
}

int cmd_optimize(const Scenario& scenario, std::ostream& out, std::ostream& err) {
  if (scenario.perp_mode != PerpMode::Optimize) {
    err << "error: the optimize command needs a scenario with perp set to \"optimize\"\n";
    return 2;
  }
  const OptimizeResult result =
      optimize_perp(scenario.operator_a, scenario.operator_b, scenario.state, scenario.optimize);

  out << "objective:   " << family_name(scenario.optimize.objective) << "\n";
  out << "best_rhs:    " << num(result.best_rhs) << "\n";
  out << "evaluations: " << result.evaluations << "\n";
  out << "converged:   " << (result.converged ? "yes" : "no") << "\n";
  out << "best_perp:\n";
  const Vector& amps = result.best_perp.amplitudes();
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    out << "  [" << num(amps(i).real()) << ", " << num(amps(i).imag()) << "]\n";
  }
  out << "report at the optimum:\n";
  print_table_header(out);
  print_report_row(out, family_name(scenario.optimize.objective), result.report);
  return result.report.satisfied ? 0 : 1;
}

}  // namespace

int bounds_exit_code(const std::vector<BoundReport>& reports) {
  for (const BoundReport& report : reports) {
    if (!report.satisfied) return 1;
  }
  return 0;
}

std::vector<double> parse_grid_spec(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ':');
  if (parts.size() != 3) {
    throw std::invalid_argument("grid: expected start:stop:count, got '" + spec + "'");
  }
  const double start = parse_double(parts[0], "grid start");
  const double stop = parse_double(parts[1], "grid stop");
  const long long count = parse_integer(parts[2], "grid count");
  if (count < 1 || count > 10'000'000) {
    throw std::invalid_argument("grid: count must be in [1, 10000000]");
  }
  std::vector<double> grid(static_cast<std::size_t>(count));
  grid.front() = start;
  for (long long k = 1; k + 1 < count; ++k) {
    grid[static_cast<std::size_t>(k)] =
        start + (stop - start) * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  if (count > 1) {
    grid.back() = stop;
  }
  return grid;
}

std::vector<BoundFamily> parse_family_list(const std::string& csv) {
  if (csv == "all") {
    return {kAllFamilies.begin(), kAllFamilies.end()};
  }
  std::vector<BoundFamily> families;
  for (const std::string& part : split(csv, ',')) {
    const auto family = family_from_name(part);
    if (!family) {
      throw std::invalid_argument("families: unknown bound family '" + part + "'");
    }
    families.push_back(*family);
  }
  if (families.empty()) {
    throw std::invalid_argument("families: list is empty");
  }
  return families;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uncertainty-relation bound toolkit for finite-dimensional Hermitian pairs"};
  app.require_subcommand(1);

  std::string bounds_path;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "evaluate the requested bound families for a scenario file");
  bounds_cmd->add_option("scenario", bounds_path, "scenario JSON file")->required();

  std::string preset_name;
  std::string sweep_families = "all";
  std::string grid_spec;
  std::string out_path;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "sweep a spin-1 preset over theta and write a CSV table");
  sweep_cmd->add_option("--preset", preset_name, "example-1 or example-2")->required();
  sweep_cmd->add_option("--families", sweep_families,
                        "comma-separated family names (default: all)");
  sweep_cmd->add_option("--grid", grid_spec, "theta grid as start:stop:count (radians)")
      ->required();
  sweep_cmd->add_option("--out", out_path, "output CSV path")->required();

  std::string dims_csv = "2,3,4,6,8";
  int count = 1000;
  std::uint64_t seed = 1;
  std::string verify_families = "all";
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the random-ensemble invariant suite and claim checks");
  verify_cmd->add_option("--dims", dims_csv, "comma-separated dimensions (default 2,3,4,6,8)");
  verify_cmd->add_option("--count", count, "instances per dimension (default 1000)");
  verify_cmd->add_option("--seed", seed, "base seed (default 1)");
  verify_cmd->add_option("--families", verify_families,
                         "comma-separated family names (default: all)");

  std::string optimize_path;
  CLI::App* optimize_cmd = app.add_subcommand(
      "optimize", "search for the perp vector maximizing the scenario's objective bound");
  optimize_cmd->add_option("scenario", optimize_path, "scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bounds_cmd->parsed()) {
      return cmd_bounds(parse_scenario(slurp_file(bounds_path)), out, err);
    }
    if (sweep_cmd->parsed()) {
      const auto preset = sweep_preset_from_name(preset_name);
      if (!preset) {
        err << "error: preset must be example-1 or example-2, got '" << preset_name << "'\n";
        return 2;
      }
      return cmd_sweep(*preset, parse_family_list(sweep_families), parse_grid_spec(grid_spec),
                       out_path, out, err);
    }
    if (verify_cmd->parsed()) {
      SuiteConfig config;
      config.dims = parse_dim_list(dims_csv);
      config.count = count;
      config.seed = seed;
      config.families = parse_family_list(verify_families);
      return cmd_verify(config, out);
    }
    if (optimize_cmd->parsed()) {
      return cmd_optimize(parse_scenario(slurp_file(optimize_path)), out, err);
    }
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command selected\n";
  return 2;
}

}  // namespace qubound
