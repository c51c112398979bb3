#pragma once

#include "lsarc/scaled_norm.hpp"
#include "lsarc/solver.hpp"

#include <functional>
#include <vector>

namespace lsarc {

/// Result of one step-length search along a fixed direction.
struct StepOutcome {
  Vector step;
  double length = 0.0;    ///< delta (LS-ARC) or alpha (LS-TR) of the accepted trial
  double length_c = 0.0;  ///< matching Cauchy step length
  double rho = 0.0;
  int backtracks = 0;
  bool accepted = false;
  double control = 0.0;      ///< sigma / radius used by the accepted trial
  double new_control = 0.0;  ///< sigma / radius for the next iteration
  double f_new = 0.0;
  bool cauchy_oracle_used = false;
  std::vector<double> trial_lengths;  ///< length of every trial, in order
};

/// f(x + step) for a trial step; +inf marks a rejected (non-finite) value.
using TrialFunction = std::function<double(const Vector& step)>;

struct ArcStepLengths {
  double delta = 0.0;
  double delta_c = 0.0;
};

/// delta minimizes the scaled cubic model along s_q; delta_c along -g.
/// Requires info.descent_ok and sigma > 0.
ArcStepLengths arc_step_lengths(const DirectionInfo& info, double sigma, double gBg_over_g2);

/// Right-hand side of the second-order inner stopping rule,
/// zeta |delta| ||s_q||^2.
double second_order_threshold(const DirectionInfo& info, double sigma, double zeta);

/// residual_norm <= second_order_threshold(info, sigma, zeta).
bool second_order_gate(double residual_norm, const DirectionInfo& info, double sigma, double zeta);

/// Grows sigma by nu2 until the trial delta s_q has rho >= eta and a cubic
/// model value no larger than the Cauchy point's. `sBs` is s_q^T B s_q and
/// `gBg` is g^T B g. beta stays at info.beta. A trial whose predicted
/// quadratic-model reduction is not positive counts as unsuccessful.
/// Throws SolverError(backtracking_stalled) after config.max_backtracks growths.
StepOutcome arc_accept_loop(double f0, const DirectionInfo& info, double sBs, double gBg,
                            double sigma, const SolverConfig& config, const TrialFunction& trial);

}  // namespace lsarc
