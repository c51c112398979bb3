#pragma once

#include "lsarc/types.hpp"

#include <functional>
#include <vector>

namespace lsarc {

using LinearOperator = std::function<Vector(const Vector&)>;

enum class InnerStatus { converged, inspected, not_converged, breakdown };

const char* to_string(InnerStatus s);

struct InnerIterate {
  Vector s;
  double residual_norm;
};

struct InnerSolveReport {
  Vector s_q;
  /// ||B s_q + g||, recomputed from an explicit product (not the recurrence).
  double residual_norm = 0.0;
  /// B s_q from the recomputation above; reused by callers for s^T B s.
  Vector b_times_s;
  int iterations = 0;
  int matvecs = 0;
  InnerStatus status = InnerStatus::not_converged;
  std::vector<InnerIterate> iterate_trace;
};

/// Called once per Krylov iterate with the iterate, its recurrence residual
/// estimate ||B s + g|| and the 1-based iteration index. Returning true stops
/// the solve and returns that iterate.
using IteratePredicate = std::function<bool(const Vector& s, double residual_norm, int iteration)>;

struct MinresOptions {
  double rtol = 1e-4;
  int max_inner = 0;  ///< 0 selects 2n
  bool keep_trace = false;
};

/// MINRES for B s = -g with B symmetric, possibly indefinite.
///
/// Without `inspect`, stops at the first iterate with ||B s + g|| <= rtol ||g||.
/// With `inspect`, stops at the first iterate the predicate accepts; rtol
/// then only labels the final status. Every iterate lies in
/// span{g, Bg, B^2 g, ...}. On exhaustion the last (smallest residual)
/// iterate is returned with status not_converged; a zero pivot in the
/// recurrence returns the current iterate with status breakdown.
InnerSolveReport solve_symmetric(const LinearOperator& hvp, const Vector& g,
                                 const MinresOptions& opts = {},
                                 const IteratePredicate& inspect = {});

/// Direct solve of B s = -g via a symmetric eigendecomposition (n <= 200).
/// Throws SolverError(singular_system) when B is numerically singular.
Vector solve_dense(const Matrix& B, const Vector& g);

}  // namespace lsarc
