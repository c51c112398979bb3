#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace lsarc::testing {

Vector random_normal(Rng& rng, int n) {
  std::normal_distribution<double> N(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = N(rng);
  return v;
}

double random_uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Matrix random_symmetric(Rng& rng, const Vector& eigs) {
  const int n = static_cast<int>(eigs.size());
  Matrix G(n, n);
  for (int j = 0; j < n; ++j) G.col(j) = random_normal(rng, n);
  const Matrix Q = Eigen::HouseholderQR<Matrix>(G).householderQ();
  Matrix A = Q * eigs.asDiagonal() * Q.transpose();
  return 0.5 * (A + A.transpose());
}

Matrix random_spd(Rng& rng, int n, double cond) {
  Vector eigs(n);
  for (int i = 0; i < n; ++i) {
    eigs[i] = n == 1 ? 1.0 : std::pow(cond, static_cast<double>(i) / (n - 1));
  }
  return random_symmetric(rng, eigs);
}

Vector fd_gradient(const Problem& p, const Vector& x, double h) {
  Vector g(x.size());
  Vector xp = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double step = h * (1.0 + std::abs(x[i]));
    xp[i] = x[i] + step;
    const double fp = p.value(xp);
    xp[i] = x[i] - step;
    const double fm = p.value(xp);
    xp[i] = x[i];
    g[i] = (fp - fm) / (2.0 * step);
  }
  return g;
}

QuadraticProblem::QuadraticProblem(Matrix A, Vector b, Vector x0, std::string name)
    : A_(std::move(A)), b_(std::move(b)), x0_(std::move(x0)), name_(std::move(name)) {}

double QuadraticProblem::value(const Vector& x) const { return 0.5 * x.dot(A_ * x) + b_.dot(x); }
Vector QuadraticProblem::gradient(const Vector& x) const { return A_ * x + b_; }
Vector QuadraticProblem::hessian_vec(const Vector&, const Vector& v) const { return A_ * v; }

LambdaProblem::LambdaProblem(std::string name, Vector x0, F f, G g, H h)
    : name_(std::move(name)), x0_(std::move(x0)), f_(std::move(f)), g_(std::move(g)), h_(std::move(h)) {}

double l2_model(const Vector& g, const Matrix& B, double sigma, const Vector& s) {
  const double r = s.norm();
  return g.dot(s) + 0.5 * s.dot(B * s) + sigma / 3.0 * r * r * r;
}

namespace {

using Objective = std::function<double(const Vector&)>;

// Visits every point of the (2m+1)^d grid with spacing h around c.
void visit_grid(const Vector& c, double h, int m, const std::function<void(const Vector&)>& fn) {
  const int d = static_cast<int>(c.size());
  std::vector<int> idx(d, -m);
  Vector p(d);
  while (true) {
    for (int i = 0; i < d; ++i) p[i] = c[i] + h * idx[i];
    fn(p);
    int k = 0;
    while (k < d && ++idx[k] > m) idx[k++] = -m;
    if (k == d) break;
  }
}

GridResult grid_minimize(const Objective& m, const std::function<bool(const Vector&)>& feasible,
                         int d, double R, double resolution, double lipschitz) {
  const int coarse = d <= 2 ? 60 : 30;
  const double h0 = R / coarse;
  struct Cand {
    double v;
    Vector s;
  };
  std::vector<Cand> cands;
  visit_grid(Vector::Zero(d), h0, coarse, [&](const Vector& p) {
    if (feasible(p)) cands.push_back({m(p), p});
  });
  std::partial_sort(cands.begin(), cands.begin() + std::min<std::size_t>(12, cands.size()),
                    cands.end(), [](const Cand& a, const Cand& b) { return a.v < b.v; });
  cands.resize(std::min<std::size_t>(12, cands.size()));

  GridResult best{Vector::Zero(d), std::numeric_limits<double>::infinity(), 0.0};
  for (const auto& c0 : cands) {
    Vector c = c0.s;
    double v = c0.v;
    double h = h0;
    while (true) {
      bool moved = true;
      while (moved) {
        moved = false;
        Vector nc = c;
        visit_grid(c, h, 3, [&](const Vector& p) {
          if (!feasible(p)) return;
          const double pv = m(p);
          if (pv < v) {
            v = pv;
            nc = p;
            moved = true;
          }
        });
        c = nc;
      }
      if (h <= resolution) break;
      h = std::max(h / 4.0, resolution);
    }
    if (v < best.value) best = {c, v, 0.0};
  }
  best.tolerance = lipschitz * resolution * std::sqrt(static_cast<double>(d));
  return best;
}

}  // namespace

GridResult grid_minimize_cubic(const Vector& g, const Matrix& B, double sigma, double resolution) {
  const double bn = B.norm();
  const double gn = g.norm();
  // The model is positive once sigma/3 r^2 - ||B|| r/2 - ||g|| > 0.
  const double a = sigma / 3.0;
  const double R = (0.5 * bn + std::sqrt(0.25 * bn * bn + 4.0 * a * gn)) / (2.0 * a);
  const double L = gn + bn * R + sigma * R * R;
  return grid_minimize([&](const Vector& s) { return l2_model(g, B, sigma, s); },
                       [&](const Vector& s) { return s.norm() <= R; }, static_cast<int>(g.size()),
                       R, resolution, L);
}

GridResult grid_minimize_tr(const Vector& g, const Matrix& B, double delta, double resolution) {
  const int d = static_cast<int>(g.size());
  const double L = g.norm() + B.norm() * delta;
  auto model = [&](const Vector& s) { return l2_model(g, B, 0.0, s); };
  GridResult inner = grid_minimize(model, [&](const Vector& s) { return s.norm() <= delta; }, d,
                                   delta, resolution, L);
  // Coordinate moves cannot slide along a curved boundary, so the sphere is
  // searched separately in angle coordinates.
  auto on_sphere = [&](const Vector& a) {
    Vector s(d);
    if (d == 2) {
      s << std::cos(a[0]), std::sin(a[0]);
    } else {
      s << std::cos(a[1]) * std::cos(a[0]), std::cos(a[1]) * std::sin(a[0]), std::sin(a[1]);
    }
    return Vector(delta * s);
  };
  GridResult outer = grid_minimize([&](const Vector& a) { return model(on_sphere(a)); },
                                   [](const Vector&) { return true; }, d - 1, std::numbers::pi,
                                   resolution / delta, L * delta);
  if (outer.value < inner.value) {
    outer.s = on_sphere(outer.s);
    return outer;
  }
  return inner;
}

DescentInstance random_descent_instance(Rng& rng, int n, double eps_d) {
  while (true) {
    DescentInstance inst;
    inst.g = random_normal(rng, n) * std::exp(random_uniform(rng, -3.0, 3.0));
    inst.s = random_normal(rng, n) * std::exp(random_uniform(rng, -3.0, 3.0));
    inst.beta = std::exp(random_uniform(rng, std::log(1e-4), std::log(1e2)));
    const double c = inst.g.dot(inst.s) / (inst.g.norm() * inst.s.norm());
    if (std::abs(c) >= eps_d) return inst;
  }
}

}  // namespace lsarc::testing
