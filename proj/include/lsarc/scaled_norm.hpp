#pragma once

#include "lsarc/types.hpp"

namespace lsarc {

/// Bracket (beta_min, beta_max) that keeps the scaled norm uniformly
/// equivalent to the Euclidean norm.
struct BetaBounds {
  double beta_min = 1e-12;
  double beta_max = 1e12;
};

/// Everything the line-search reformulations need to know about a
/// quasi-Newton direction s_q at gradient g, for a given beta.
///
/// The scaled norm itself is never formed: ||s_q||_M^2 = theta = beta ||s_q||^2
/// and ||g||_M^2 = chi ||g||^2 are all the solvers use.
struct DirectionInfo {
  Vector s_q;
  Vector g;
  double slope = 0.0;   ///< g^T s_q
  double norm_sq = 0.0; ///< ||s_q||
  double norm_g = 0.0;  ///< ||g||
  double cos_w = 0.0;   ///< slope / (||g|| ||s_q||)
  double beta = 0.0;
  double theta = 0.0;   ///< beta ||s_q||^2
  double chi = 0.0;     ///< NaN when the direction is orthogonal to g
  double m_norm_sq = 0.0;
  double m_norm_g = 0.0;
  double eps_d = 0.0;
  bool descent_ok = false;       ///< |slope| >= eps_d ||g|| ||s_q||
  bool orthogonal_direction = false;
};

/// Fills a DirectionInfo. A zero slope (or zero s_q) marks the direction
/// orthogonal and leaves chi undefined.
DirectionInfo direction_analysis(const Vector& g, const Vector& s_q, double beta, double eps_d);

/// Recomputes the beta-dependent fields (theta, chi, scaled norms) in place.
void set_beta(DirectionInfo& info, double beta);

/// chi as a function of cos(w) and beta; NaN if |cos_w| is below 1e-300.
double chi_factor(double cos_w, double beta);

enum class BetaMethod { ls_arc, ls_tr };

/// beta_k policy used in the experiments: for LS-ARC 1e-4 sigma^{-2/3} on
/// descent directions and 2 otherwise; for LS-TR always 1. Clamped into
/// [beta_min, beta_max].
double beta_policy(BetaMethod method, double sigma, double slope, const BetaBounds& bounds = {});

/// Explicit SPD matrix realizing the scaled norm for a descent direction.
/// Test oracle only; O(n^2) memory, n <= 200.
struct ExplicitScaledNorm {
  Matrix M;
  Eigen::Matrix2d N;
  double gamma = 0.0;
  Matrix basis;  ///< columns: s_q/||s_q||, g-bar, completion q_3..q_n
  Vector D;      ///< completion diagonal
};

/// Throws SolverError(assumption_violated) if !info.descent_ok, ConfigError
/// for n < 2 or n > 200.
ExplicitScaledNorm build_explicit_M(const DirectionInfo& info, double d_fill = 1.0);

enum class ModelDirection { s_q, neg_g };

/// Cubic model m(t d) with d = s_q or d = -g, using the scaled norm through
/// theta / chi. `curvature` is d^T B d for the chosen direction.
double cubic_model_value(double f0, const DirectionInfo& info, double curvature, double sigma,
                         double t, ModelDirection along);

}  // namespace lsarc
