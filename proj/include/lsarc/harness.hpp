#pragma once

#include "lsarc/solver.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lsarc {

/// One benchmark problem instance. Records are labelled `name`, or
/// `name/s<seed>` when a seed is given explicitly.
struct ProblemSpec {
  std::string name;
  int n = 0;
  std::optional<std::uint64_t> seed;

  std::string label() const;
};

/// Parses "name:n" or "name:n:seed". Throws ConfigError on malformed input.
ProblemSpec parse_problem_spec(const std::string& text);

using SolverFn = std::function<RunRecord(const ProblemPtr&, const SolverConfig&)>;

/// ls-arc, ls-arc-s, ls-tr, armijo, arc-l2, tr-l2.
const std::vector<std::string>& solver_names();

/// Throws ConfigError for an unknown name.
SolverFn find_solver(const std::string& name);

/// Builds the problem and runs one solver on it. Never throws: failures to
/// build the problem or unexpected exceptions become status error.
RunRecord run_one(const ProblemSpec& problem, const std::string& solver, const SolverConfig& config);

/// One record per (problem, solver) pair, in problem-major order regardless
/// of `jobs` (worker thread count, 0 or 1 runs serially).
std::vector<RunRecord> run_matrix(const std::vector<ProblemSpec>& problems,
                                  const std::vector<std::string>& solvers,
                                  const SolverConfig& config, int jobs = 1);

enum class ProfileMetric { f_evals, g_evals, wall_time_ms };

const char* to_string(ProfileMetric m);
std::optional<ProfileMetric> parse_profile_metric(const std::string& s);

/// Dolan-More staircase for one solver: rho(tau) = fraction of problems with
/// ratio <= tau. `tau` holds the distinct finite ratios in increasing order
/// and rho the value from each breakpoint onwards; rho is 0 below tau[0].
struct ProfileCurve {
  std::string solver;
  ProfileMetric metric = ProfileMetric::f_evals;
  std::vector<double> tau;
  std::vector<double> log2_tau;
  std::vector<double> rho;
  std::vector<std::string> problems;  ///< problem keys, shared order across curves
  std::vector<double> ratios;         ///< +inf for runs that did not converge

  double value_at(double t) const;
};

/// Non-converged runs cost +inf. A problem no solver converged on keeps every
/// ratio infinite but still counts in the denominator. Tied minima all get
/// ratio 1. Throws ConfigError unless every (problem, solver) pair occurs
/// exactly once. Wall times are floored at 1e-6 ms.
std::vector<ProfileCurve> performance_profile(const std::vector<RunRecord>& records,
                                              ProfileMetric metric);

}  // namespace lsarc
