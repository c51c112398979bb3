#include "run_state.hpp"

#include <chrono>
#include <cmath>

namespace lsarc {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ConfigError(std::string("invalid solver configuration: ") + what);
}

}  // namespace

void SolverConfig::validate() const {
  require(eta > 0.0 && eta < 1.0, "eta must lie in (0,1)");
  require(nu1 > 0.0 && nu1 <= 1.0, "nu1 must lie in (0,1]");
  require(nu2 > 1.0, "nu2 must exceed 1");
  require(sigma_min > 0.0 && sigma0 >= sigma_min, "need sigma0 >= sigma_min > 0");
  require(tau1 >= 0.0 && tau1 < 1.0 && tau2 >= 1.0, "need 0 <= tau1 < 1 <= tau2");
  require(delta0 > 0.0 && delta_max > delta0, "need delta_max > delta0 > 0");
  require(armijo_tau > 0.0 && armijo_tau < 1.0, "armijo_tau must lie in (0,1)");
  require(eps_d > 0.0 && eps_d < 1.0, "eps_d must lie in (0,1)");
  require(inner_rtol > 0.0 && inner_rtol < 1.0, "inner_rtol must lie in (0,1)");
  require(max_inner >= 0, "max_inner must be nonnegative");
  require(max_iter >= 0, "max_iter must be nonnegative");
  require(gtol > 0.0, "gtol must be positive");
  require(zeta > 0.0, "zeta must be positive");
  require(beta_bounds.beta_min > 0.0 && beta_bounds.beta_max > beta_bounds.beta_min,
          "need 0 < beta_min < beta_max");
  require(max_backtracks >= 1, "max_backtracks must be positive");
}

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::converged: return "converged";
    case RunStatus::iteration_limit: return "iteration_limit";
    case RunStatus::diverged: return "diverged";
    case RunStatus::error: return "error";
  }
  return "unknown";
}

const char* to_string(StepMode m) {
  return m == StepMode::scaled ? "scaled" : "fallback_l2";
}

std::optional<RunStatus> parse_run_status(const std::string& s) {
  for (RunStatus r : {RunStatus::converged, RunStatus::iteration_limit, RunStatus::diverged,
                      RunStatus::error}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

std::optional<StepMode> parse_step_mode(const std::string& s) {
  if (s == "scaled") return StepMode::scaled;
  if (s == "fallback_l2") return StepMode::fallback_l2;
  return std::nullopt;
}

namespace {

// NaN-aware equality so that records survive a serialization round trip.
bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

bool same(const EvalCounters& a, const EvalCounters& b) {
  return a.f_evals == b.f_evals && a.g_evals == b.g_evals && a.hvp_evals == b.hvp_evals &&
         a.inner_matvecs == b.inner_matvecs;
}

}  // namespace

bool operator==(const IterationRecord& a, const IterationRecord& b) {
  return a.k == b.k && a.mode == b.mode && same(a.f, b.f) && same(a.gnorm, b.gnorm) &&
         same(a.control, b.control) && same(a.new_control, b.new_control) &&
         same(a.beta, b.beta) && same(a.slope, b.slope) && same(a.length, b.length) &&
         same(a.length_c, b.length_c) && same(a.rho, b.rho) && a.backtracks == b.backtracks &&
         a.accepted == b.accepted && a.cauchy_oracle_used == b.cauchy_oracle_used &&
         same(a.lambda_n, b.lambda_n) && a.inner_start == b.inner_start &&
         a.inner_after_direction == b.inner_after_direction && a.inner_end == b.inner_end &&
         same(a.counters, b.counters);
}

bool operator==(const RunRecord& a, const RunRecord& b) {
  return a.problem == b.problem && a.solver == b.solver && a.n == b.n && a.status == b.status &&
         a.outer_iters == b.outer_iters && a.f_evals == b.f_evals && a.g_evals == b.g_evals &&
         a.hvp_evals == b.hvp_evals && a.inner_matvecs == b.inner_matvecs &&
         same(a.final_f, b.final_f) && same(a.final_gnorm, b.final_gnorm) &&
         same(a.wall_time_ms, b.wall_time_ms) && a.message == b.message && a.trace == b.trace;
}

namespace detail {

RunState::RunState(const ProblemPtr& problem, const SolverConfig& config)
    : ev(problem), cfg(config), f_low_(problem->f_low()) {}

LinearOperator RunState::inner_hvp() {
  return [this](const Vector& v) { return ev.hessian_vec(x, v, true); };
}

double RunState::trial(const Vector& step) {
  const double ft = ev.trial_value(x + step);
  if (ft == -std::numeric_limits<double>::infinity()) {
    throw Diverged("objective reached -inf at a trial point");
  }
  if (!std::isfinite(ft)) return std::numeric_limits<double>::infinity();
  return ft;
}

void RunState::accept(const Vector& step, double f_new) {
  x += step;
  f = f_new;
  check_divergence();
  g = ev.gradient(x);
  gnorm = g.norm();
}

void RunState::check_divergence() const {
  if (f_low_ && f < *f_low_ - 1.0) throw Diverged("objective fell below the known lower bound");
  if (f <= cfg.f_unbounded) throw Diverged("objective appears unbounded below");
}

int RunState::max_inner() const {
  return cfg.max_inner > 0 ? cfg.max_inner : 2 * static_cast<int>(x.size());
}

IterationRecord RunState::begin_iteration(StepMode mode) const {
  IterationRecord rec;
  rec.k = outer_iters;
  rec.mode = mode;
  rec.f = f;
  rec.gnorm = gnorm;
  rec.control = control;
  rec.inner_start = ev.counters().inner_matvecs;
  rec.inner_after_direction = rec.inner_start;
  return rec;
}

void RunState::end_iteration(IterationRecord& rec) {
  rec.new_control = control;
  rec.inner_end = ev.counters().inner_matvecs;
  rec.counters = ev.counters();
  if (cfg.record_trace) trace.push_back(rec);
}

MinresOptions minres_options(const RunState& st) {
  MinresOptions o;
  o.rtol = st.cfg.inner_rtol;
  o.max_inner = st.max_inner();
  return o;
}

SubproblemOptions subproblem_options(const RunState& st) {
  SubproblemOptions o;
  o.max_iter = st.max_inner();
  return o;
}

RunRecord run_outer_loop(const ProblemPtr& problem, const SolverConfig& config,
                         const std::string& solver, double initial_control,
                         const IterationFn& step) {
  const auto t0 = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.solver = solver;
  if (problem) {
    rec.problem = problem->name();
    rec.n = problem->dim();
  }
  rec.final_f = std::numeric_limits<double>::quiet_NaN();
  rec.final_gnorm = std::numeric_limits<double>::quiet_NaN();

  std::optional<RunState> st;
  try {
    if (!problem) throw ConfigError("null problem");
    config.validate();
    st.emplace(problem, config);
    st->x = problem->start_point();
    st->control = initial_control;
    st->f = st->ev.value(st->x);
    st->g = st->ev.gradient(st->x);
    st->gnorm = st->g.norm();
    rec.final_f = st->f;
    rec.final_gnorm = st->gnorm;
    while (true) {
      if (st->gnorm <= config.gtol) {
        rec.status = RunStatus::converged;
        break;
      }
      if (st->outer_iters >= config.max_iter) {
        rec.status = RunStatus::iteration_limit;
        break;
      }
      step(*st);
      rec.final_f = st->f;
      rec.final_gnorm = st->gnorm;
    }
  } catch (const Diverged& e) {
    rec.status = RunStatus::diverged;
    rec.message = e.what();
  } catch (const EvaluationError& e) {
    rec.status = RunStatus::diverged;
    rec.message = e.what();
  } catch (const std::exception& e) {
    rec.status = RunStatus::error;
    rec.message = e.what();
  }

  if (st) {
    // A divergent point is still the last iterate reached.
    rec.final_f = st->f;
    rec.final_gnorm = st->gnorm;
    rec.outer_iters = st->outer_iters;
    const EvalCounters& c = st->ev.counters();
    rec.f_evals = c.f_evals;
    rec.g_evals = c.g_evals;
    rec.hvp_evals = c.hvp_evals;
    rec.inner_matvecs = c.inner_matvecs;
    rec.trace = std::move(st->trace);
  }
  rec.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace detail
}  // namespace lsarc
