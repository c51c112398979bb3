#pragma once

// Outer-loop plumbing shared by every solver: evaluation, divergence
// detection, termination tests and run-record bookkeeping.

#include "lsarc/solver.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace lsarc::detail {

/// Thrown when f is seen to be unbounded below.
class Diverged : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class RunState {
public:
  RunState(const ProblemPtr& problem, const SolverConfig& config);

  Evaluator ev;
  const SolverConfig& cfg;
  Vector x;
  double f = 0.0;
  Vector g;
  double gnorm = 0.0;
  double control = 0.0;  ///< sigma or the trust-region radius
  int outer_iters = 0;
  std::vector<IterationRecord> trace;

  /// B v at the current point, tallied as an inner matvec.
  LinearOperator inner_hvp();
  /// B v at the current point, not tallied as an inner matvec.
  Vector outer_hvp(const Vector& v) { return ev.hessian_vec(x, v, false); }

  /// f(x + step). Returns +inf for an overflowing or NaN trial value and
  /// throws Diverged for -inf.
  double trial(const Vector& step);

  /// Moves to x + step with known f and evaluates the new gradient.
  void accept(const Vector& step, double f_new);

  int max_inner() const;

  /// Starts an iteration record with the fields known before the step.
  IterationRecord begin_iteration(StepMode mode) const;
  void end_iteration(IterationRecord& rec);

private:
  std::optional<double> f_low_;
  void check_divergence() const;
};

using IterationFn = std::function<void(RunState&)>;

/// Runs `step` until convergence, the iteration limit, divergence or an error.
/// `step` advances state.outer_iters itself.
RunRecord run_outer_loop(const ProblemPtr& problem, const SolverConfig& config,
                         const std::string& solver, double initial_control,
                         const IterationFn& step);

/// Inner-solver options derived from the configuration.
MinresOptions minres_options(const RunState& st);
SubproblemOptions subproblem_options(const RunState& st);

/// One l2-ARC trial at sigma (Alg. 1 body). Returns true on success, in which
/// case the state has moved.
struct L2Trial {
  bool success = false;
  double rho = 0.0;
};
L2Trial l2_arc_trial(RunState& st, double sigma);
L2Trial l2_tr_trial(RunState& st, double radius);

/// Repeats l2 trials inside one outer iteration until the first success,
/// growing sigma (shrinking the radius) after each failure. Updates
/// st.control and fills the record.
void l2_arc_fallback(RunState& st, IterationRecord& rec);
void l2_tr_fallback(RunState& st, IterationRecord& rec);

}  // namespace lsarc::detail
