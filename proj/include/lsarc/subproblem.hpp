#pragma once

#include "lsarc/krylov.hpp"
#include "lsarc/types.hpp"

#include <optional>

namespace lsarc {

enum class CubicMode { dense_exact, lanczos };
enum class TrMode { dense_exact, steihaug, lanczos };

const char* to_string(CubicMode m);
const char* to_string(TrMode m);

/// Access to B for the subproblem solvers. dense_exact uses `dense` when set
/// and otherwise assembles B from n products.
struct HessianAccess {
  LinearOperator hvp;
  std::optional<Matrix> dense;
};

struct SubproblemResult {
  Vector s;
  double lambda = 0.0;      ///< multiplier of (B + lambda I) s = -g
  double quad_value = 0.0;  ///< g^T s + s^T B s / 2
  double model_value = 0.0; ///< quad_value plus the regularization term (cubic only)
  int matvecs = 0;
  int iterations = 0;
  bool hard_case = false;
  bool on_boundary = false;     ///< TR only
  bool cauchy_fallback = false; ///< the Cauchy point beat the computed step
};

struct SubproblemOptions {
  double rel_tol = 1e-6;  ///< Lanczos: stop when the full-space residual is below rel_tol ||g||
  int max_iter = 0;       ///< Lanczos / Steihaug iterations, 0 selects n
};

/// Global minimizer (dense_exact) or Lanczos approximation of
/// g^T s + s^T B s / 2 + sigma/3 ||s||^3. The result never has a larger model
/// value than the Cauchy point.
SubproblemResult cubic_subproblem_l2(const Vector& g, const HessianAccess& B, double sigma,
                                     CubicMode mode, const SubproblemOptions& opts = {});

/// Minimizer of g^T p + p^T B p / 2 subject to ||p|| <= delta.
SubproblemResult tr_subproblem_l2(const Vector& g, const HessianAccess& B, double delta,
                                  TrMode mode, const SubproblemOptions& opts = {});

/// Step length t of the Cauchy point -t g for the l2 cubic model.
double cubic_cauchy_length(double gnorm, double gBg, double sigma);

/// Step length t of the Cauchy point -t g for the l2 trust region.
double tr_cauchy_length(double gnorm, double gBg, double delta);

}  // namespace lsarc
