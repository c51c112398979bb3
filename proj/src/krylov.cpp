#include "lsarc/krylov.hpp"

#include <cmath>
#include <limits>

namespace lsarc {

const char* to_string(InnerStatus s) {
  switch (s) {
    case InnerStatus::converged: return "converged";
    case InnerStatus::inspected: return "inspected";
    case InnerStatus::not_converged: return "not_converged";
    case InnerStatus::breakdown: return "breakdown";
  }
  return "unknown";
}

InnerSolveReport solve_symmetric(const LinearOperator& hvp, const Vector& g,
                                 const MinresOptions& opts, const IteratePredicate& inspect) {
  const Eigen::Index n = g.size();
  const double beta1 = g.norm();
  if (n == 0 || !(beta1 > 0.0)) throw ConfigError("solve_symmetric: g must be nonzero");
  if (!(opts.rtol > 0.0 && opts.rtol < 1.0)) throw ConfigError("solve_symmetric: rtol must lie in (0,1)");
  const int max_inner = opts.max_inner > 0 ? opts.max_inner : static_cast<int>(2 * n);

  InnerSolveReport rep;
  Vector x = Vector::Zero(n);
  Vector r1 = -g;
  Vector r2 = -g;
  Vector y = -g;
  Vector w = Vector::Zero(n), w1(n), w2 = Vector::Zero(n);
  double oldb = 0.0, beta = beta1, dbar = 0.0, epsln = 0.0, phibar = beta1;
  double cs = -1.0, sn = 0.0;
  double res = beta1;

  for (int itn = 1; itn <= max_inner; ++itn) {
    const Vector v = y / beta;
    y = hvp(v);
    ++rep.matvecs;
    if (itn >= 2) y -= (beta / oldb) * r1;
    const double alfa = v.dot(y);
    y -= (alfa / beta) * r2;
    r1 = r2;
    r2 = y;
    oldb = beta;
    beta = y.norm();

    // Apply the previous rotation, then build the one annihilating beta.
    const double oldeps = epsln;
    const double delta = cs * dbar + sn * alfa;
    const double gbar = sn * dbar - cs * alfa;
    epsln = sn * beta;
    dbar = -cs * beta;
    const double gamma = std::hypot(gbar, beta);
    if (gamma == 0.0) {
      rep.status = InnerStatus::breakdown;
      break;
    }
    cs = gbar / gamma;
    sn = beta / gamma;
    const double phi = cs * phibar;
    phibar = sn * phibar;

    w1 = w2;
    w2 = w;
    w = (v - oldeps * w1 - delta * w2) / gamma;
    x += phi * w;
    res = std::abs(phibar);
    rep.iterations = itn;
    if (opts.keep_trace) rep.iterate_trace.push_back({x, res});

    if (inspect) {
      if (inspect(x, res, itn)) {
        rep.status = InnerStatus::inspected;
        break;
      }
    } else if (res <= opts.rtol * beta1) {
      rep.status = InnerStatus::converged;
      break;
    }
    if (beta == 0.0) {
      // Invariant Krylov subspace: no further progress is possible.
      rep.status = res <= opts.rtol * beta1 ? InnerStatus::converged : InnerStatus::breakdown;
      break;
    }
  }

  rep.s_q = std::move(x);
  rep.b_times_s = hvp(rep.s_q);
  ++rep.matvecs;
  rep.residual_norm = (rep.b_times_s + g).norm();
  return rep;
}

Vector solve_dense(const Matrix& B, const Vector& g) {
  if (B.rows() != B.cols() || B.rows() != g.size()) {
    throw ConfigError("solve_dense: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(B);
  if (eig.info() != Eigen::Success) {
    throw SolverError(SolverErrorCode::singular_system, "eigendecomposition failed");
  }
  const Vector& lam = eig.eigenvalues();
  const double scale = lam.cwiseAbs().maxCoeff();
  const double floor =
      static_cast<double>(B.rows()) * std::numeric_limits<double>::epsilon() * scale;
  if (!(scale > 0.0) || lam.cwiseAbs().minCoeff() <= floor) {
    throw SolverError(SolverErrorCode::singular_system, "matrix is numerically singular");
  }
  const Matrix& V = eig.eigenvectors();
  return -(V * (V.transpose() * g).cwiseQuotient(lam));
}

}  // namespace lsarc
