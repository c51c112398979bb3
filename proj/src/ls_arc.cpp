#include "lsarc/ls_arc.hpp"

#include "run_state.hpp"

#include <algorithm>
#include <cmath>

namespace lsarc {

namespace {

constexpr double kModelTol = 1e-12;

// a = sigma beta^{3/2} ||s_q||^3 / |slope|
double cubic_ratio(const DirectionInfo& info, double sigma) {
  return sigma * std::pow(info.theta, 1.5) / std::abs(info.slope);
}

}  // namespace

ArcStepLengths arc_step_lengths(const DirectionInfo& info, double sigma, double gBg_over_g2) {
  if (!info.descent_ok) {
    throw SolverError(SolverErrorCode::assumption_violated, "arc_step_lengths: direction fails the descent gate");
  }
  if (!(sigma > 0.0)) throw ConfigError("arc_step_lengths: sigma must be positive");
  const double a = cubic_ratio(info, sigma);
  const double root = std::sqrt(1.0 + 4.0 * a);
  ArcStepLengths out;
  // For positive slopes 2/(1 - root) is rewritten without cancellation.
  out.delta = info.slope < 0.0 ? 2.0 / (1.0 + root) : -(1.0 + root) / (2.0 * a);

  const double q = gBg_over_g2;
  const double c = 4.0 * sigma * std::pow(info.chi, 1.5) * info.norm_g;
  const double croot = std::sqrt(q * q + c);
  out.delta_c = q >= 0.0 ? 2.0 / (q + croot) : 2.0 * (croot - q) / c;
  return out;
}

double second_order_threshold(const DirectionInfo& info, double sigma, double zeta) {
  // 2 sign / (-1 + sign root) is |delta|; for positive slopes it is
  // evaluated as (1 + root) / (2a) to avoid cancellation when a is small.
  const double a = cubic_ratio(info, sigma);
  const double root = std::sqrt(1.0 + 4.0 * a);
  const double abs_delta = info.slope < 0.0 ? 2.0 / (1.0 + root) : (1.0 + root) / (2.0 * a);
  return zeta * abs_delta * info.norm_sq * info.norm_sq;
}

bool second_order_gate(double residual_norm, const DirectionInfo& info, double sigma, double zeta) {
  return residual_norm <= second_order_threshold(info, sigma, zeta);
}

StepOutcome arc_accept_loop(double f0, const DirectionInfo& info, double sBs, double gBg,
                            double sigma, const SolverConfig& config, const TrialFunction& trial) {
  const double q = gBg / (info.norm_g * info.norm_g);
  StepOutcome out;
  for (int bt = 0;; ++bt) {
    if (bt > config.max_backtracks) {
      throw SolverError(SolverErrorCode::backtracking_stalled, "LS-ARC: sigma kept growing without an acceptable step");
    }
    const ArcStepLengths len = arc_step_lengths(info, sigma, q);
    const double d = len.delta;
    out.trial_lengths.push_back(d);

    // Model changes relative to f0; the comparison allows for roundoff since
    // both values coincide when s_q is parallel to g.
    const double m_step = cubic_model_value(0.0, info, sBs, sigma, d, ModelDirection::s_q);
    const double m_cauchy = cubic_model_value(0.0, info, gBg, sigma, len.delta_c, ModelDirection::neg_g);
    const double pred = -(d * info.slope + 0.5 * d * d * sBs);
    if (pred > 0.0 && m_step <= m_cauchy + kModelTol * std::abs(m_cauchy)) {
      const Vector step = d * info.s_q;
      const double ft = trial(step);
      const double rho = (f0 - ft) / pred;
      if (rho >= config.eta) {
        out.step = step;
        out.length = d;
        out.length_c = len.delta_c;
        out.rho = rho;
        out.backtracks = bt;
        out.accepted = true;
        out.control = sigma;
        out.new_control = std::max(config.nu1 * sigma, config.sigma_min);
        out.f_new = ft;
        return out;
      }
    }
    sigma *= config.nu2;
  }
}

namespace {

void lsarc_iteration(detail::RunState& st, LsArcVariant variant) {
  IterationRecord rec = st.begin_iteration(StepMode::scaled);
  const double sigma = st.control;
  const SolverConfig& cfg = st.cfg;

  auto analyse = [&](const Vector& s) {
    const double beta = beta_policy(BetaMethod::ls_arc, sigma, st.g.dot(s), cfg.beta_bounds);
    return direction_analysis(st.g, s, beta, cfg.eps_d);
  };

  InnerSolveReport rep;
  if (variant == LsArcVariant::first_order) {
    rep = solve_symmetric(st.inner_hvp(), st.g, detail::minres_options(st));
  } else {
    // Stop at the first iterate meeting the second-order rule; if that one
    // fails the descent gate, keep iterating until an iterate passes it.
    bool gate_passed = false;
    auto inspect = [&](const Vector& s, double residual, int) {
      if (s.norm() == 0.0) return false;
      const DirectionInfo info = analyse(s);
      if (!gate_passed && !info.orthogonal_direction) {
        gate_passed = second_order_gate(residual, info, sigma, cfg.zeta);
      }
      return gate_passed && info.descent_ok;
    };
    rep = solve_symmetric(st.inner_hvp(), st.g, detail::minres_options(st), inspect);
  }
  rec.inner_after_direction = st.ev.counters().inner_matvecs;

  const DirectionInfo info = analyse(rep.s_q);
  rec.beta = info.beta;
  rec.slope = info.slope;
  if (!info.descent_ok) {
    detail::l2_arc_fallback(st, rec);
  } else {
    const double gBg = st.g.dot(st.outer_hvp(st.g));
    const double sBs = rep.s_q.dot(rep.b_times_s);
    const StepOutcome out = arc_accept_loop(st.f, info, sBs, gBg, sigma, cfg,
                                            [&](const Vector& step) { return st.trial(step); });
    rec.length = out.length;
    rec.length_c = out.length_c;
    rec.rho = out.rho;
    rec.backtracks = out.backtracks;
    rec.accepted = true;
    st.accept(out.step, out.f_new);
    st.control = out.new_control;
  }
  ++st.outer_iters;
  st.end_iteration(rec);
}

}  // namespace

RunRecord lsarc_solve(const ProblemPtr& problem, const SolverConfig& config, LsArcVariant variant) {
  const char* name = variant == LsArcVariant::first_order ? "ls-arc" : "ls-arc-s";
  return detail::run_outer_loop(problem, config, name, config.sigma0,
                                [variant](detail::RunState& st) { lsarc_iteration(st, variant); });
}

}  // namespace lsarc
