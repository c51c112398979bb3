#pragma once

#include "lsarc/types.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lsarc {

/// Smooth unconstrained objective with analytic gradient and Hessian-vector
/// products. Instances are immutable and may be shared between threads.
class Problem {
public:
  virtual ~Problem() = default;

  virtual std::string name() const = 0;
  virtual int dim() const = 0;
  virtual Vector start_point() const = 0;

  /// Known lower bound on f, used only to detect divergence.
  virtual std::optional<double> f_low() const { return std::nullopt; }

  virtual double value(const Vector& x) const = 0;
  virtual Vector gradient(const Vector& x) const = 0;
  virtual Vector hessian_vec(const Vector& x, const Vector& v) const = 0;

  /// Dense Hessian assembled column by column from Hessian-vector products.
  /// Only meant for small n (oracles, dense subproblem solvers).
  virtual Matrix dense_hessian(const Vector& x) const;
};

using ProblemPtr = std::shared_ptr<const Problem>;

inline constexpr int kDenseThreshold = 200;

struct EvalCounters {
  std::int64_t f_evals = 0;
  std::int64_t g_evals = 0;
  std::int64_t hvp_evals = 0;
  std::int64_t inner_matvecs = 0;
};

enum class EvalWhat { f, grad, both };

struct EvalResult {
  std::optional<double> f;
  std::optional<Vector> g;
};

/// Per-run wrapper around a problem: checks finiteness and counts every call.
class Evaluator {
public:
  explicit Evaluator(ProblemPtr problem);

  const Problem& problem() const { return *problem_; }
  int dim() const { return problem_->dim(); }

  double value(const Vector& x);
  /// Like value() but returns non-finite results instead of throwing, so a
  /// trial point that overflows can be rejected rather than ending the run.
  double trial_value(const Vector& x);
  Vector gradient(const Vector& x);
  EvalResult evaluate(const Vector& x, EvalWhat what);

  /// Hessian product at x. `inner` marks products issued by an inner
  /// (Krylov / subproblem) solver, which are also tallied in inner_matvecs.
  Vector hessian_vec(const Vector& x, const Vector& v, bool inner = false);
  Matrix dense_hessian(const Vector& x, bool inner = false);

  const EvalCounters& counters() const { return counters_; }

private:
  ProblemPtr problem_;
  EvalCounters counters_;
};

/// Builds a registered test problem. `seed` only affects randomized families
/// (quad_spd). Throws ConfigError for unknown names or incompatible n.
ProblemPtr make_problem(const std::string& name, int n, std::uint64_t seed = 1);

struct ProblemFamilyInfo {
  std::string name;
  std::string description;
  bool bounded_below;
};

const std::vector<ProblemFamilyInfo>& problem_families();

}  // namespace lsarc
