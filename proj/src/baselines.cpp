#include "run_state.hpp"

#include <algorithm>
#include <cmath>

namespace lsarc {
namespace detail {

namespace {

HessianAccess hessian_access(RunState& st, bool dense) {
  HessianAccess B;
  B.hvp = st.inner_hvp();
  if (dense) B.dense = st.ev.dense_hessian(st.x, true);
  return B;
}

L2Trial finish_trial(RunState& st, const SubproblemResult& sub) {
  L2Trial out;
  const double pred = -sub.quad_value;
  const double ft = st.trial(sub.s);
  out.rho = pred > 0.0 ? (st.f - ft) / pred : -std::numeric_limits<double>::infinity();
  out.success = pred > 0.0 && out.rho >= st.cfg.eta;
  if (out.success) st.accept(sub.s, ft);
  return out;
}

}  // namespace

L2Trial l2_arc_trial(RunState& st, double sigma) {
  const CubicMode mode = st.cfg.arc_subproblem;
  const SubproblemResult sub = cubic_subproblem_l2(
      st.g, hessian_access(st, mode == CubicMode::dense_exact), sigma, mode, subproblem_options(st));
  return finish_trial(st, sub);
}

L2Trial l2_tr_trial(RunState& st, double radius) {
  const TrMode mode = st.cfg.tr_subproblem;
  const SubproblemResult sub = tr_subproblem_l2(
      st.g, hessian_access(st, mode == TrMode::dense_exact), radius, mode, subproblem_options(st));
  return finish_trial(st, sub);
}

void l2_arc_fallback(RunState& st, IterationRecord& rec) {
  rec.mode = StepMode::fallback_l2;
  double sigma = st.control;
  for (int bt = 0;; ++bt) {
    if (bt > st.cfg.max_backtracks) {
      throw SolverError(SolverErrorCode::backtracking_stalled, "l2-ARC fallback found no successful step");
    }
    const L2Trial t = l2_arc_trial(st, sigma);
    if (t.success) {
      rec.rho = t.rho;
      rec.backtracks = bt;
      rec.accepted = true;
      rec.length = 1.0;
      st.control = std::max(st.cfg.nu1 * sigma, st.cfg.sigma_min);
      return;
    }
    sigma *= st.cfg.nu2;
  }
}

void l2_tr_fallback(RunState& st, IterationRecord& rec) {
  rec.mode = StepMode::fallback_l2;
  double radius = st.control;
  for (int bt = 0;; ++bt) {
    if (bt > st.cfg.max_backtracks) {
      throw SolverError(SolverErrorCode::backtracking_stalled, "l2-TR fallback found no successful step");
    }
    const L2Trial t = l2_tr_trial(st, radius);
    if (t.success) {
      rec.rho = t.rho;
      rec.backtracks = bt;
      rec.accepted = true;
      rec.length = 1.0;
      st.control = std::min(st.cfg.tau2 * radius, st.cfg.delta_max);
      return;
    }
    radius *= st.cfg.tau1;
  }
}

}  // namespace detail

RunRecord arc_l2_solve(const ProblemPtr& problem, const SolverConfig& config) {
  return detail::run_outer_loop(problem, config, "arc-l2", config.sigma0, [](detail::RunState& st) {
    IterationRecord rec = st.begin_iteration(StepMode::fallback_l2);
    const double sigma = st.control;
    const detail::L2Trial t = detail::l2_arc_trial(st, sigma);
    rec.rho = t.rho;
    rec.accepted = t.success;
    rec.length = 1.0;
    st.control = t.success ? std::max(st.cfg.nu1 * sigma, st.cfg.sigma_min) : st.cfg.nu2 * sigma;
    ++st.outer_iters;
    st.end_iteration(rec);
  });
}

RunRecord tr_l2_solve(const ProblemPtr& problem, const SolverConfig& config) {
  return detail::run_outer_loop(problem, config, "tr-l2", config.delta0, [](detail::RunState& st) {
    IterationRecord rec = st.begin_iteration(StepMode::fallback_l2);
    const double radius = st.control;
    const detail::L2Trial t = detail::l2_tr_trial(st, radius);
    rec.rho = t.rho;
    rec.accepted = t.success;
    rec.length = 1.0;
    st.control = t.success ? std::min(st.cfg.tau2 * radius, st.cfg.delta_max) : st.cfg.tau1 * radius;
    ++st.outer_iters;
    st.end_iteration(rec);
  });
}

RunRecord armijo_solve(const ProblemPtr& problem, const SolverConfig& config) {
  return detail::run_outer_loop(problem, config, "armijo", 1.0, [](detail::RunState& st) {
    IterationRecord rec = st.begin_iteration(StepMode::scaled);
    const InnerSolveReport rep = solve_symmetric(st.inner_hvp(), st.g, detail::minres_options(st));
    rec.inner_after_direction = st.ev.counters().inner_matvecs;

    Vector d = rep.s_q;
    double slope = st.g.dot(d);
    if (!(-slope >= st.cfg.eps_d * st.gnorm * d.norm()) || d.norm() == 0.0) {
      d = -st.g;
      slope = -st.gnorm * st.gnorm;
    }
    rec.slope = slope;
    double step = 1.0;
    for (int bt = 0;; ++bt) {
      if (bt > st.cfg.max_backtracks) {
        throw SolverError(SolverErrorCode::backtracking_stalled, "Armijo backtracking did not terminate");
      }
      const Vector trial = step * d;
      const double ft = st.trial(trial);
      if (ft <= st.f + st.cfg.eta * step * slope) {
        rec.length = step;
        rec.backtracks = bt;
        rec.accepted = true;
        st.accept(trial, ft);
        break;
      }
      step *= st.cfg.armijo_tau;
    }
    ++st.outer_iters;
    st.end_iteration(rec);
  });
}

}  // namespace lsarc
