#include "lsarc/subproblem.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace lsarc {

const char* to_string(CubicMode m) {
  switch (m) {
    case CubicMode::dense_exact: return "dense_exact";
    case CubicMode::lanczos: return "lanczos";
  }
  return "unknown";
}

const char* to_string(TrMode m) {
  switch (m) {
    case TrMode::dense_exact: return "dense_exact";
    case TrMode::steihaug: return "steihaug";
    case TrMode::lanczos: return "lanczos";
  }
  return "unknown";
}

double cubic_cauchy_length(double gnorm, double gBg, double sigma) {
  // Positive root of sigma gnorm t^2 + q t - 1 = 0 with q = gBg/gnorm^2,
  // written to avoid cancellation when q < 0.
  const double q = gBg / (gnorm * gnorm);
  const double c = 4.0 * sigma * gnorm;
  const double root = std::sqrt(q * q + c);
  if (q >= 0.0) return 2.0 / (q + root);
  return 2.0 * (root - q) / c;
}

double tr_cauchy_length(double gnorm, double gBg, double delta) {
  const double boundary = delta / gnorm;
  if (gBg <= 0.0) return boundary;
  return std::min(gnorm * gnorm / gBg, boundary);
}

namespace {

enum class Kind { cubic, trust_region };

struct SecularSolution {
  Vector y;  // solution coefficients in the eigenbasis
  double lambda = 0.0;
  bool hard_case = false;
  bool on_boundary = false;
};

// Solves (diag(lam) + lambda I) y = -ghat with lambda = sigma ||y|| (cubic)
// or ||y|| = delta (trust region, boundary case). `lam` is ascending.
SecularSolution solve_secular(const Vector& lam, const Vector& ghat, double param, Kind kind) {
  const Eigen::Index n = lam.size();
  const double gnorm = ghat.norm();
  const double lam1 = lam[0];
  const double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());
  SecularSolution out;

  auto radius = [&](double lambda) { return kind == Kind::cubic ? lambda / param : param; };
  auto coeffs = [&](double lambda, bool skip_left) {
    Vector y = Vector::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (skip_left && lam[i] <= lam1 + 1e-12 * scale) continue;
      y[i] = -ghat[i] / (lam[i] + lambda);
    }
    return y;
  };

  if (kind == Kind::trust_region && lam1 > 0.0) {
    Vector y0 = coeffs(0.0, false);
    if (y0.norm() <= param) {
      out.y = std::move(y0);
      return out;
    }
  }
  out.on_boundary = kind == Kind::trust_region;

  const double lo = std::max(0.0, -lam1);
  const bool left_empty_possible = kind == Kind::cubic ? lam1 < 0.0 : lam1 <= 0.0;
  if (left_empty_possible) {
    double left = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (lam[i] <= lam1 + 1e-12 * scale) left += ghat[i] * ghat[i];
    }
    if (std::sqrt(left) <= 1e-12 * gnorm) {
      Vector y = coeffs(lo, true);
      const double r = radius(lo);
      if (y.norm() <= r) {
        // g has no component along the leftmost eigenvector: the secular
        // equation has no root above lo, so move along that eigenvector.
        y[0] += std::sqrt(std::max(0.0, r * r - y.squaredNorm()));
        out.y = std::move(y);
        out.lambda = lo;
        out.hard_case = true;
        out.on_boundary = true;
        return out;
      }
    }
  }

  auto phi = [&](double lambda) {
    double s2 = 0.0, d3 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double den = lam[i] + lambda;
      const double gi2 = ghat[i] * ghat[i];
      s2 += gi2 / (den * den);
      d3 += gi2 / (den * den * den);
    }
    const double snorm = std::sqrt(s2);
    const double r = radius(lambda);
    const double value = 1.0 / snorm - 1.0 / r;
    double deriv = d3 / (snorm * s2);
    if (kind == Kind::cubic) deriv += param / (lambda * lambda);
    return std::make_pair(value, deriv);
  };

  double a = lo;
  if (kind == Kind::cubic || lo > 0.0) {
    a = lo + std::max(std::numeric_limits<double>::min(), 4.0 * std::numeric_limits<double>::epsilon() * lo);
  }
  if (phi(a).first >= 0.0) {
    // Root indistinguishable from the left end (nearly hard case).
    out.lambda = a;
    out.y = coeffs(a, false);
    return out;
  }
  double b = std::abs(lam1) + (kind == Kind::cubic ? std::sqrt(param * gnorm) : gnorm / param);
  b = std::max(b, a) * (1.0 + 1e-12) + 1e-300;
  for (int i = 0; i < 200 && phi(b).first < 0.0; ++i) b = a + 2.0 * (b - a);

  std::uintmax_t max_iter = 200;
  const double lambda = boost::math::tools::newton_raphson_iterate(
      phi, b, a, b, std::numeric_limits<double>::digits - 8, max_iter);
  out.lambda = lambda;
  out.y = coeffs(lambda, false);
  return out;
}

double cubic_value(double quad, double snorm, double sigma) {
  return quad + sigma / 3.0 * snorm * snorm * snorm;
}

Matrix dense_matrix(const Vector& g, const HessianAccess& B, int& matvecs) {
  if (B.dense) return *B.dense;
  const Eigen::Index n = g.size();
  if (!B.hvp) throw ConfigError("subproblem: no Hessian access");
  Matrix H(n, n);
  Vector e = Vector::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    e[j] = 1.0;
    H.col(j) = B.hvp(e);
    e[j] = 0.0;
  }
  matvecs += static_cast<int>(n);
  return 0.5 * (H + H.transpose());
}

struct Eigen1 {
  Vector lam;
  Matrix V;
};

Eigen1 symmetric_eigen(const Matrix& H) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(H);
  if (eig.info() != Eigen::Success) {
    throw SolverError(SolverErrorCode::singular_system, "eigendecomposition failed");
  }
  return {eig.eigenvalues(), eig.eigenvectors()};
}

// Replaces the step by the Cauchy point -t g when the latter has a smaller
// model value.
void enforce_cauchy(SubproblemResult& res, const Vector& g, double gBg, double param, Kind kind) {
  const double gnorm = g.norm();
  const double t = kind == Kind::cubic ? cubic_cauchy_length(gnorm, gBg, param)
                                       : tr_cauchy_length(gnorm, gBg, param);
  const double quad = -t * gnorm * gnorm + 0.5 * t * t * gBg;
  const double model = kind == Kind::cubic ? cubic_value(quad, t * gnorm, param) : quad;
  if (res.model_value > model + 1e-12 * std::abs(model)) {
    res.s = -t * g;
    res.quad_value = quad;
    res.model_value = model;
    res.lambda = kind == Kind::cubic ? param * t * gnorm : 0.0;
    res.hard_case = false;
    res.on_boundary = kind == Kind::trust_region && t * gnorm >= param * (1.0 - 1e-12);
    res.cauchy_fallback = true;
  }
}

// Builds a Lanczos tridiagonalization of B started at g and solves the
// reduced subproblem exactly after every step.
SubproblemResult lanczos_solve(const Vector& g, const LinearOperator& hvp, double param,
                               Kind kind, const SubproblemOptions& opts) {
  if (!hvp) throw ConfigError("subproblem: lanczos mode needs Hessian-vector products");
  const Eigen::Index n = g.size();
  const double gnorm = g.norm();
  const int max_k = opts.max_iter > 0 ? std::min<int>(opts.max_iter, static_cast<int>(n))
                                      : static_cast<int>(n);

  Matrix Q(n, std::min<Eigen::Index>(max_k + 1, n));
  std::vector<double> alpha, beta;
  Q.col(0) = g / gnorm;
  SubproblemResult res;
  SecularSolution sol;
  Vector z;
  Matrix W;

  for (int k = 1; k <= max_k; ++k) {
    Vector w = hvp(Q.col(k - 1));
    ++res.matvecs;
    const double a = Q.col(k - 1).dot(w);
    alpha.push_back(a);
    w -= a * Q.col(k - 1);
    if (k >= 2) w -= beta[k - 2] * Q.col(k - 2);
    for (int pass = 0; pass < 2; ++pass) {
      w -= Q.leftCols(k) * (Q.leftCols(k).transpose() * w);
    }
    const double b = w.norm();

    Vector diag = Eigen::Map<Vector>(alpha.data(), k);
    Vector sub = beta.empty() ? Vector() : Vector(Eigen::Map<Vector>(beta.data(), k - 1));
    Eigen::SelfAdjointEigenSolver<Matrix> eig;
    eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    W = eig.eigenvectors();
    const Vector ghat = gnorm * W.row(0).transpose();
    sol = solve_secular(eig.eigenvalues(), ghat, param, kind);
    z = W * sol.y;
    res.iterations = k;

    const double tscale = std::max(1.0, diag.cwiseAbs().maxCoeff());
    const bool invariant = b <= 1e-14 * tscale;
    if (invariant || b * std::abs(z[k - 1]) <= opts.rel_tol * gnorm || k == max_k) break;
    beta.push_back(b);
    Q.col(k) = w / b;
  }

  const int k = res.iterations;
  res.s = Q.leftCols(k) * z;
  double zTz = 0.0;
  for (int i = 0; i < k; ++i) {
    zTz += alpha[i] * z[i] * z[i];
    if (i + 1 < k) zTz += 2.0 * beta[i] * z[i] * z[i + 1];
  }
  res.quad_value = gnorm * z[0] + 0.5 * zTz;
  res.lambda = sol.lambda;
  res.hard_case = sol.hard_case;
  res.on_boundary = sol.on_boundary;
  res.model_value = kind == Kind::cubic ? cubic_value(res.quad_value, z.norm(), param) : res.quad_value;
  // T_11 = g^T B g / ||g||^2, so the Cauchy check costs no extra product.
  enforce_cauchy(res, g, alpha[0] * gnorm * gnorm, param, kind);
  return res;
}

SubproblemResult dense_solve(const Vector& g, const HessianAccess& B, double param, Kind kind) {
  SubproblemResult res;
  const Matrix H = dense_matrix(g, B, res.matvecs);
  const Eigen1 e = symmetric_eigen(H);
  const Vector ghat = e.V.transpose() * g;
  const SecularSolution sol = solve_secular(e.lam, ghat, param, kind);
  res.s = e.V * sol.y;
  res.lambda = sol.lambda;
  res.hard_case = sol.hard_case;
  res.on_boundary = sol.on_boundary;
  res.quad_value = ghat.dot(sol.y) + 0.5 * sol.y.dot(e.lam.cwiseProduct(sol.y));
  res.model_value = kind == Kind::cubic ? cubic_value(res.quad_value, sol.y.norm(), param) : res.quad_value;
  enforce_cauchy(res, g, ghat.dot(e.lam.cwiseProduct(ghat)), param, kind);
  return res;
}

void check_inputs(const Vector& g, double param, const char* what) {
  if (g.size() == 0 || !(g.norm() > 0.0)) throw ConfigError(std::string(what) + ": g must be nonzero");
  if (!(param > 0.0) || !std::isfinite(param)) {
    throw ConfigError(std::string(what) + ": parameter must be positive and finite");
  }
}

// Truncated conjugate gradients on the trust-region subproblem.
SubproblemResult steihaug(const Vector& g, const LinearOperator& hvp, double delta,
                          const SubproblemOptions& opts) {
  if (!hvp) throw ConfigError("subproblem: steihaug mode needs Hessian-vector products");
  const Eigen::Index n = g.size();
  const double gnorm = g.norm();
  const int max_k = opts.max_iter > 0 ? opts.max_iter : static_cast<int>(n);
  SubproblemResult res;
  Vector p = Vector::Zero(n);
  Vector r = g;
  Vector d = -g;
  double quad = 0.0;
  double gBg = 0.0;

  auto to_boundary = [&](const Vector& dir, double dBd) {
    const double pd = p.dot(dir), dd = dir.squaredNorm();
    const double tau = (-pd + std::sqrt(pd * pd + dd * (delta * delta - p.squaredNorm()))) / dd;
    // quad(p + tau d) = quad(p) + tau (r^T d) + tau^2/2 d^T B d, since r = g + B p.
    quad += tau * r.dot(dir) + 0.5 * tau * tau * dBd;
    p += tau * dir;
    res.on_boundary = true;
  };

  for (int k = 1; k <= max_k; ++k) {
    const Vector Bd = hvp(d);
    ++res.matvecs;
    res.iterations = k;
    const double dBd = d.dot(Bd);
    if (k == 1) gBg = dBd;
    if (dBd <= 0.0) {
      to_boundary(d, dBd);
      break;
    }
    const double rr = r.squaredNorm();
    const double a = rr / dBd;
    if ((p + a * d).norm() >= delta) {
      to_boundary(d, dBd);
      break;
    }
    quad += a * r.dot(d) + 0.5 * a * a * dBd;
    p += a * d;
    r += a * Bd;
    if (r.norm() <= opts.rel_tol * gnorm) break;
    d = -r + (r.squaredNorm() / rr) * d;
  }
  res.s = std::move(p);
  res.quad_value = quad;
  res.model_value = quad;
  enforce_cauchy(res, g, gBg, delta, Kind::trust_region);
  return res;
}

}  // namespace

SubproblemResult cubic_subproblem_l2(const Vector& g, const HessianAccess& B, double sigma,
                                     CubicMode mode, const SubproblemOptions& opts) {
  check_inputs(g, sigma, "cubic_subproblem_l2");
  if (mode == CubicMode::dense_exact) return dense_solve(g, B, sigma, Kind::cubic);
  return lanczos_solve(g, B.hvp, sigma, Kind::cubic, opts);
}

SubproblemResult tr_subproblem_l2(const Vector& g, const HessianAccess& B, double delta,
                                  TrMode mode, const SubproblemOptions& opts) {
  check_inputs(g, delta, "tr_subproblem_l2");
  switch (mode) {
    case TrMode::dense_exact: return dense_solve(g, B, delta, Kind::trust_region);
    case TrMode::steihaug: return steihaug(g, B.hvp, delta, opts);
    case TrMode::lanczos: return lanczos_solve(g, B.hvp, delta, Kind::trust_region, opts);
  }
  throw ConfigError("tr_subproblem_l2: unknown mode");
}

}  // namespace lsarc
