#pragma once

#include "lsarc/problem.hpp"
#include "lsarc/scaled_norm.hpp"
#include "lsarc/subproblem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lsarc {

/// Parameters shared by all solvers. Defaults follow the experimental
/// protocol used for the benchmarks.
struct SolverConfig {
  double eta = 0.1;
  // cubic regularization
  double nu1 = 0.5;
  double nu2 = 2.0;
  double sigma0 = 1.0;
  double sigma_min = 1e-16;
  // trust region
  double tau1 = 0.5;
  double tau2 = 2.0;
  double delta0 = 1.0;
  double delta_max = 1e16;
  // Armijo contraction
  double armijo_tau = 0.5;

  double eps_d = 1e-3;
  double inner_rtol = 1e-4;
  int max_inner = 0;  ///< 0 selects 2n
  int max_iter = 10000;
  double gtol = 1e-5;
  /// Tolerance of the second-order inner stopping test used by LS-ARC(s).
  double zeta = 0.01;
  BetaBounds beta_bounds;
  int max_backtracks = 100;
  /// f(x_k) at or below this value counts as unbounded below, for problems
  /// without a known lower bound.
  double f_unbounded = -1e30;

  CubicMode arc_subproblem = CubicMode::lanczos;
  TrMode tr_subproblem = TrMode::lanczos;

  bool record_trace = false;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
};

enum class RunStatus { converged, iteration_limit, diverged, error };
enum class StepMode { scaled, fallback_l2 };

const char* to_string(RunStatus s);
const char* to_string(StepMode m);
std::optional<RunStatus> parse_run_status(const std::string& s);
std::optional<StepMode> parse_step_mode(const std::string& s);

/// One outer iteration. `control` is sigma (cubic methods) or the radius
/// (trust-region methods) in force when the iteration started; `length` is
/// delta / alpha of the accepted trial (1 for l2 baselines).
struct IterationRecord {
  int k = 0;
  StepMode mode = StepMode::scaled;
  double f = 0.0;
  double gnorm = 0.0;
  double control = 0.0;
  double new_control = 0.0;
  double beta = 0.0;
  double slope = 0.0;
  double length = 0.0;
  double length_c = 0.0;
  double rho = 0.0;
  int backtracks = 0;
  bool accepted = false;
  bool cauchy_oracle_used = false;  ///< LS-TR: printed Cauchy length replaced
  double lambda_n = 0.0;            ///< LS-TR boundary multiplier diagnostic
  /// inner_matvecs at iteration start, after the direction solve, and at the end.
  std::int64_t inner_start = 0;
  std::int64_t inner_after_direction = 0;
  std::int64_t inner_end = 0;
  EvalCounters counters;  ///< snapshot at the end of the iteration
};

struct RunRecord {
  std::string problem;
  std::string solver;
  int n = 0;
  RunStatus status = RunStatus::error;
  int outer_iters = 0;
  std::int64_t f_evals = 0;
  std::int64_t g_evals = 0;
  std::int64_t hvp_evals = 0;
  std::int64_t inner_matvecs = 0;
  double final_f = 0.0;
  double final_gnorm = 0.0;
  double wall_time_ms = 0.0;
  std::string message;
  std::vector<IterationRecord> trace;
};

bool operator==(const IterationRecord& a, const IterationRecord& b);
bool operator==(const RunRecord& a, const RunRecord& b);

enum class LsArcVariant { first_order, second_order };

RunRecord lsarc_solve(const ProblemPtr& problem, const SolverConfig& config,
                      LsArcVariant variant = LsArcVariant::first_order);
RunRecord lstr_solve(const ProblemPtr& problem, const SolverConfig& config);
RunRecord armijo_solve(const ProblemPtr& problem, const SolverConfig& config);
RunRecord arc_l2_solve(const ProblemPtr& problem, const SolverConfig& config);
RunRecord tr_l2_solve(const ProblemPtr& problem, const SolverConfig& config);

}  // namespace lsarc
