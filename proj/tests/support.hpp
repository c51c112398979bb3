#pragma once

// Independent oracles and fixtures shared by the unit and acceptance tests.

#include "lsarc/problem.hpp"

#include <functional>
#include <random>

namespace lsarc::testing {

using Rng = std::mt19937_64;

Vector random_normal(Rng& rng, int n);
double random_uniform(Rng& rng, double lo, double hi);
/// Q diag(eigs) Q^T with Q Haar-distributed.
Matrix random_symmetric(Rng& rng, const Vector& eigs);
Matrix random_spd(Rng& rng, int n, double cond);

/// Central-difference gradient with per-component step h (1 + |x_i|).
Vector fd_gradient(const Problem& p, const Vector& x, double h = 1e-6);

/// Quadratic 0.5 x^T A x + b^T x with a given start point.
class QuadraticProblem : public Problem {
public:
  QuadraticProblem(Matrix A, Vector b, Vector x0, std::string name = "quadratic");
  std::string name() const override { return name_; }
  int dim() const override { return static_cast<int>(b_.size()); }
  Vector start_point() const override { return x0_; }
  double value(const Vector& x) const override;
  Vector gradient(const Vector& x) const override;
  Vector hessian_vec(const Vector& x, const Vector& v) const override;

private:
  Matrix A_;
  Vector b_;
  Vector x0_;
  std::string name_;
};

/// Objective given by callables (for adversarial test problems).
class LambdaProblem : public Problem {
public:
  using F = std::function<double(const Vector&)>;
  using G = std::function<Vector(const Vector&)>;
  using H = std::function<Vector(const Vector&, const Vector&)>;
  LambdaProblem(std::string name, Vector x0, F f, G g, H h);
  std::string name() const override { return name_; }
  int dim() const override { return static_cast<int>(x0_.size()); }
  Vector start_point() const override { return x0_; }
  double value(const Vector& x) const override { return f_(x); }
  Vector gradient(const Vector& x) const override { return g_(x); }
  Vector hessian_vec(const Vector& x, const Vector& v) const override { return h_(x, v); }

private:
  std::string name_;
  Vector x0_;
  F f_;
  G g_;
  H h_;
};

/// Quadratic model g^T s + s^T B s / 2 (+ sigma/3 ||s||^3 when sigma > 0).
double l2_model(const Vector& g, const Matrix& B, double sigma, const Vector& s);

struct GridResult {
  Vector s;
  double value;
  double tolerance;  ///< bound on value - (true minimum) implied by the final resolution
};

/// Brute-force minimization over a box (cubic: radius bound derived from the
/// coercivity of the model; TR: the ball of radius delta) with a coarse grid
/// followed by local grid refinement down to `resolution`. Dimension <= 3.
GridResult grid_minimize_cubic(const Vector& g, const Matrix& B, double sigma, double resolution = 1e-3);
GridResult grid_minimize_tr(const Vector& g, const Matrix& B, double delta, double resolution = 1e-3);

/// Random (g, s) pair whose direction passes the descent gate at eps_d.
struct DescentInstance {
  Vector g;
  Vector s;
  double beta;
};
DescentInstance random_descent_instance(Rng& rng, int n, double eps_d);

}  // namespace lsarc::testing
