#include "lsarc/ls_tr.hpp"

#include "run_state.hpp"

#include <algorithm>
#include <cmath>

namespace lsarc {

TrStepLengths tr_step_lengths(const DirectionInfo& info, double radius, double gBg) {
  if (!info.descent_ok) {
    throw SolverError(SolverErrorCode::assumption_violated, "tr_step_lengths: direction fails the descent gate");
  }
  if (!(radius > 0.0)) throw ConfigError("tr_step_lengths: radius must be positive");
  TrStepLengths out;
  const double ratio = radius / std::sqrt(info.theta);
  out.alpha = info.slope < 0.0 ? std::min(1.0, ratio) : -ratio;

  const double sqrt_chi = std::sqrt(info.chi);
  const double boundary = radius / (sqrt_chi * info.norm_g);
  const double g2 = info.norm_g * info.norm_g;
  out.alpha_c_printed =
      (gBg <= 0.0 || gBg / info.norm_g >= radius / sqrt_chi) ? boundary : gBg / g2;
  out.alpha_c_oracle = gBg <= 0.0 ? boundary : std::min(g2 / gBg, boundary);
  out.oracle_used =
      std::abs(out.alpha_c_printed - out.alpha_c_oracle) > 1e-12 * std::abs(out.alpha_c_oracle);
  out.alpha_c = out.oracle_used ? out.alpha_c_oracle : out.alpha_c_printed;
  return out;
}

double tr_boundary_multiplier(const DirectionInfo& info, double radius) {
  const double sign = info.slope < 0.0 ? -1.0 : 1.0;
  return info.slope / info.theta * (1.0 + sign * std::sqrt(info.theta) / radius);
}

StepOutcome tr_accept_loop(double f0, const DirectionInfo& info, double sBs, double gBg,
                           double radius, const SolverConfig& config, const TrialFunction& trial) {
  const double g2 = info.norm_g * info.norm_g;
  StepOutcome out;
  for (int bt = 0;; ++bt) {
    if (bt > config.max_backtracks) {
      throw SolverError(SolverErrorCode::backtracking_stalled, "LS-TR: radius kept shrinking without an acceptable step");
    }
    const TrStepLengths len = tr_step_lengths(info, radius, gBg);
    const double a = len.alpha;
    out.trial_lengths.push_back(a);
    out.cauchy_oracle_used = out.cauchy_oracle_used || len.oracle_used;

    const double m_step = a * info.slope + 0.5 * a * a * sBs;
    const double t = len.alpha_c;
    const double m_cauchy = -t * g2 + 0.5 * t * t * gBg;
    if (m_step < 0.0 && m_step <= m_cauchy + 1e-12 * std::abs(m_cauchy)) {
      const Vector step = a * info.s_q;
      const double ft = trial(step);
      const double rho = (f0 - ft) / -m_step;
      if (rho >= config.eta) {
        out.step = step;
        out.length = a;
        out.length_c = t;
        out.rho = rho;
        out.backtracks = bt;
        out.accepted = true;
        out.control = radius;
        out.new_control = std::min(config.tau2 * radius, config.delta_max);
        out.f_new = ft;
        return out;
      }
    }
    radius *= config.tau1;
  }
}

namespace {

void lstr_iteration(detail::RunState& st) {
  IterationRecord rec = st.begin_iteration(StepMode::scaled);
  const SolverConfig& cfg = st.cfg;
  const InnerSolveReport rep = solve_symmetric(st.inner_hvp(), st.g, detail::minres_options(st));
  rec.inner_after_direction = st.ev.counters().inner_matvecs;

  const double beta = beta_policy(BetaMethod::ls_tr, 1.0, 0.0, cfg.beta_bounds);
  const DirectionInfo info = direction_analysis(st.g, rep.s_q, beta, cfg.eps_d);
  rec.beta = info.beta;
  rec.slope = info.slope;
  if (!info.descent_ok) {
    detail::l2_tr_fallback(st, rec);
  } else {
    const double gBg = st.g.dot(st.outer_hvp(st.g));
    const double sBs = rep.s_q.dot(rep.b_times_s);
    const StepOutcome out = tr_accept_loop(st.f, info, sBs, gBg, st.control, cfg,
                                           [&](const Vector& step) { return st.trial(step); });
    rec.length = out.length;
    rec.length_c = out.length_c;
    rec.rho = out.rho;
    rec.backtracks = out.backtracks;
    rec.accepted = true;
    rec.cauchy_oracle_used = out.cauchy_oracle_used;
    if (info.slope > 0.0 || out.length < 1.0) rec.lambda_n = tr_boundary_multiplier(info, out.control);
    st.accept(out.step, out.f_new);
    st.control = out.new_control;
  }
  ++st.outer_iters;
  st.end_iteration(rec);
}

}  // namespace

RunRecord lstr_solve(const ProblemPtr& problem, const SolverConfig& config) {
  return detail::run_outer_loop(problem, config, "ls-tr", config.delta0, lstr_iteration);
}

}  // namespace lsarc
