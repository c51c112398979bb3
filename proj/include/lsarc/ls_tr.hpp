#pragma once

#include "lsarc/ls_arc.hpp"

namespace lsarc {

struct TrStepLengths {
  double alpha = 0.0;
  double alpha_c = 0.0;          ///< value used by the acceptance test
  double alpha_c_printed = 0.0;  ///< two-branch closed form
  double alpha_c_oracle = 0.0;   ///< exact minimizer of m^Q(-t g) on the radius
  bool oracle_used = false;      ///< printed and oracle values disagree
};

/// alpha keeps alpha s_q inside the scaled trust region (|alpha| sqrt(theta)
/// <= radius), with alpha = 1 when the Newton-like step fits and the sign
/// chosen to descend. alpha_c is the Cauchy length along -g.
TrStepLengths tr_step_lengths(const DirectionInfo& info, double radius, double gBg);

/// Multiplier lambda with (B + lambda M) alpha s_q + g = 0 for a boundary
/// step, given exact s_q.
double tr_boundary_multiplier(const DirectionInfo& info, double radius);

/// Shrinks the radius by tau1 until rho >= eta and m^Q(alpha s_q) <=
/// m^Q(-alpha_c g). On success new_control = min(tau2 radius, delta_max).
StepOutcome tr_accept_loop(double f0, const DirectionInfo& info, double sBs, double gBg,
                           double radius, const SolverConfig& config, const TrialFunction& trial);

}  // namespace lsarc
