#include "lsarc/problem.hpp"

#include <cmath>
#include <sstream>

namespace lsarc {

Matrix Problem::dense_hessian(const Vector& x) const {
  const int n = dim();
  Matrix H(n, n);
  Vector e = Vector::Zero(n);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    H.col(j) = hessian_vec(x, e);
    e[j] = 0.0;
  }
  // Symmetrize away roundoff from the column-wise assembly.
  return 0.5 * (H + H.transpose());
}

namespace {

void check_input(const Problem& p, const Vector& x) {
  if (x.size() != p.dim()) {
    std::ostringstream os;
    os << p.name() << ": point has length " << x.size() << ", expected " << p.dim();
    throw ConfigError(os.str());
  }
  if (!x.allFinite()) throw EvaluationError(p.name() + ": non-finite point", x);
}

}  // namespace

Evaluator::Evaluator(ProblemPtr problem) : problem_(std::move(problem)) {
  if (!problem_) throw ConfigError("null problem");
}

double Evaluator::value(const Vector& x) {
  check_input(*problem_, x);
  ++counters_.f_evals;
  const double f = problem_->value(x);
  if (!std::isfinite(f)) throw EvaluationError(problem_->name() + ": non-finite f", x);
  return f;
}

double Evaluator::trial_value(const Vector& x) {
  check_input(*problem_, x);
  ++counters_.f_evals;
  return problem_->value(x);
}

Vector Evaluator::gradient(const Vector& x) {
  check_input(*problem_, x);
  ++counters_.g_evals;
  Vector g = problem_->gradient(x);
  if (!g.allFinite()) throw EvaluationError(problem_->name() + ": non-finite gradient", x);
  return g;
}

EvalResult Evaluator::evaluate(const Vector& x, EvalWhat what) {
  EvalResult out;
  if (what != EvalWhat::grad) out.f = value(x);
  if (what != EvalWhat::f) out.g = gradient(x);
  return out;
}

Vector Evaluator::hessian_vec(const Vector& x, const Vector& v, bool inner) {
  check_input(*problem_, x);
  ++counters_.hvp_evals;
  if (inner) ++counters_.inner_matvecs;
  Vector hv = problem_->hessian_vec(x, v);
  if (!hv.allFinite()) {
    throw EvaluationError(problem_->name() + ": non-finite Hessian product", x);
  }
  return hv;
}

Matrix Evaluator::dense_hessian(const Vector& x, bool inner) {
  check_input(*problem_, x);
  const int n = problem_->dim();
  if (n > kDenseThreshold) {
    throw ConfigError(problem_->name() + ": dense Hessian requested above the dense threshold");
  }
  counters_.hvp_evals += n;
  if (inner) counters_.inner_matvecs += n;
  Matrix H = problem_->dense_hessian(x);
  if (!H.allFinite()) throw EvaluationError(problem_->name() + ": non-finite Hessian", x);
  return H;
}

}  // namespace lsarc
