#include "lsarc/cli.hpp"

#include "lsarc/export.hpp"
#include "lsarc/harness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace lsarc {

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

// "fallback_l2 -> scaled x12" style summary of the mode sequence.
std::string mode_summary(const RunRecord& r) {
  std::string out;
  std::size_t i = 0;
  while (i < r.trace.size()) {
    std::size_t j = i;
    while (j < r.trace.size() && r.trace[j].mode == r.trace[i].mode) ++j;
    if (!out.empty()) out += " -> ";
    out += std::string(to_string(r.trace[i].mode)) + " x" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "(no iterations)" : out;
}

void print_summary(const std::vector<RunRecord>& records, bool trace, std::ostream& out) {
  out << std::left << std::setw(22) << "problem" << std::setw(10) << "solver" << std::right
      << std::setw(7) << "n" << "  " << std::left << std::setw(16) << "status" << std::right
      << std::setw(8) << "iters" << std::setw(9) << "f_evals" << std::setw(9) << "g_evals"
      << std::setw(14) << "final_gnorm" << '\n';
  for (const auto& r : records) {
    out << std::left << std::setw(22) << r.problem << std::setw(10) << r.solver << std::right
        << std::setw(7) << r.n << "  " << std::left << std::setw(16) << to_string(r.status)
        << std::right << std::setw(8) << r.outer_iters << std::setw(9) << r.f_evals
        << std::setw(9) << r.g_evals << std::setw(14) << std::setprecision(4) << r.final_gnorm
        << '\n';
    if (trace) out << "    modes: " << mode_summary(r) << '\n';
    if (r.status == RunStatus::error) out << "    error: " << r.message << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  SolverConfig cfg;
  std::string problems_arg = "rosenbrock:100,powell_singular:100,tridiag_quad:100,quad_spd:50,trig:100";
  std::string solvers_arg = join(solver_names());
  std::string metric_arg = "all";
  std::string out_dir;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool trace = false;
  bool profile = false;

  CLI::App app{"Benchmark line-search cubic regularization and trust-region solvers.", "lsarc_bench"};
  app.option_defaults()->always_capture_default();
  app.add_option("--problems", problems_arg, "Comma-separated name:n[:seed] list");
  app.add_option("--solvers", solvers_arg, "Comma-separated solver list");
  app.add_option("--gtol", cfg.gtol, "Stop when ||g|| <= gtol")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", cfg.max_iter, "Outer iteration limit")->check(CLI::NonNegativeNumber);
  app.add_option("--eps-d", cfg.eps_d, "Descent-gate tolerance")->check(CLI::Range(0.0, 1.0));
  app.add_option("--inner-rtol", cfg.inner_rtol, "Relative tolerance of the inner linear solve")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--zeta", cfg.zeta, "Second-order inner stopping tolerance (ls-arc-s)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized problem families (name:n:seed overrides)");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--trace", trace, "Record per-iteration traces (kept in the JSON export)");
  app.add_option("--metric", metric_arg, "Profile metric: f_evals, g_evals, wall_time_ms or all");
  app.add_option("--out", out_dir, "Directory for records.csv, records.json and profile CSVs");
  app.add_flag("--profile", profile, "Emit performance-profile CSVs (stdout without --out)");
  app.footer(
      "Fixed parameters: eta=0.1; nu1=0.5, nu2=2, sigma0=1, sigma_min=1e-16; tau1=0.5, tau2=2,\n"
      "delta0=1, delta_max=1e16; Armijo contraction 0.5; beta = 1e-4 sigma^(-2/3) (LS-ARC,\n"
      "descent direction), 2 (LS-ARC otherwise), 1 (LS-TR).\n"
      "Solvers: " + join(solver_names()) + "\n"
      "Exit status: 0 ok, 1 some run ended with status error, 2 usage error.");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::vector<ProblemSpec> problems;
  std::vector<std::string> solvers = split(solvers_arg);
  std::vector<ProfileMetric> metrics;
  try {
    for (const auto& text : split(problems_arg)) {
      ProblemSpec spec = parse_problem_spec(text);
      if (!spec.seed && seed != 1) spec.seed = seed;
      make_problem(spec.name, spec.n, spec.seed.value_or(1));
      problems.push_back(spec);
    }
    for (const auto& s : solvers) find_solver(s);
    if (problems.empty() || solvers.empty()) throw ConfigError("need at least one problem and one solver");
    if (metric_arg == "all") {
      metrics = {ProfileMetric::f_evals, ProfileMetric::g_evals, ProfileMetric::wall_time_ms};
    } else if (auto m = parse_profile_metric(metric_arg)) {
      metrics = {*m};
    } else {
      throw ConfigError("unknown metric '" + metric_arg + "'");
    }
    cfg.record_trace = trace;
    cfg.validate();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const std::vector<RunRecord> records = run_matrix(problems, solvers, cfg, jobs);
  print_summary(records, trace, out);

  try {
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      const std::filesystem::path dir(out_dir);
      write_records_csv(records, (dir / "records.csv").string());
      write_records_json(records, (dir / "records.json").string());
    }
    if (profile) {
      for (ProfileMetric m : metrics) {
        const auto curves = performance_profile(records, m);
        if (out_dir.empty()) {
          write_profile_csv(curves, out);
        } else {
          write_profile_csv(curves, (std::filesystem::path(out_dir) /
                                     ("profile_" + std::string(to_string(m)) + ".csv")).string());
        }
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const bool any_error = std::any_of(records.begin(), records.end(),
                                     [](const RunRecord& r) { return r.status == RunStatus::error; });
  return any_error ? 1 : 0;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace lsarc
