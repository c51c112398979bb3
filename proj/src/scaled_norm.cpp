#include "lsarc/scaled_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lsarc {

double chi_factor(double cos_w, double beta) {
  if (!(std::abs(cos_w) >= 1e-300)) return std::numeric_limits<double>::quiet_NaN();
  const double c2 = cos_w * cos_w;
  const double t = (1.0 - c2) / cos_w;
  return beta * (2.5 - 1.5 * c2 + 2.0 * t * t);
}

void set_beta(DirectionInfo& info, double beta) {
  info.beta = beta;
  info.theta = beta * info.norm_sq * info.norm_sq;
  info.m_norm_sq = std::sqrt(beta) * info.norm_sq;
  info.chi = info.orthogonal_direction ? std::numeric_limits<double>::quiet_NaN()
                                       : chi_factor(info.cos_w, beta);
  info.m_norm_g = std::sqrt(info.chi) * info.norm_g;
}

DirectionInfo direction_analysis(const Vector& g, const Vector& s_q, double beta, double eps_d) {
  if (g.size() != s_q.size()) throw ConfigError("direction_analysis: dimension mismatch");
  DirectionInfo info;
  info.s_q = s_q;
  info.g = g;
  info.eps_d = eps_d;
  info.slope = g.dot(s_q);
  info.norm_sq = s_q.norm();
  info.norm_g = g.norm();
  if (!(info.norm_g > 0.0)) throw ConfigError("direction_analysis: g must be nonzero");
  if (info.norm_sq > 0.0) {
    info.cos_w = std::clamp(info.slope / (info.norm_g * info.norm_sq), -1.0, 1.0);
  }
  info.orthogonal_direction = info.slope == 0.0 || !(std::abs(info.cos_w) >= 1e-300);
  info.descent_ok = !info.orthogonal_direction &&
                    std::abs(info.slope) >= eps_d * info.norm_g * info.norm_sq;
  set_beta(info, beta);
  return info;
}

double beta_policy(BetaMethod method, double sigma, double slope, const BetaBounds& bounds) {
  double beta = 1.0;
  if (method == BetaMethod::ls_arc) {
    beta = slope < 0.0 ? 1e-4 * std::pow(sigma, -2.0 / 3.0) : 2.0;
  }
  return std::clamp(beta, bounds.beta_min, bounds.beta_max);
}

ExplicitScaledNorm build_explicit_M(const DirectionInfo& info, double d_fill) {
  if (!info.descent_ok) {
    throw SolverError(SolverErrorCode::assumption_violated,
                      "explicit scaled norm needs a sufficiently non-orthogonal direction");
  }
  const Eigen::Index n = info.s_q.size();
  if (n < 2 || n > 200) throw ConfigError("build_explicit_M: need 2 <= n <= 200");
  if (!(d_fill > 0.0)) throw ConfigError("build_explicit_M: d_fill must be positive");

  const Vector s_bar = info.s_q / info.norm_sq;
  const Vector comp = info.g / info.norm_g - info.cos_w * s_bar;
  const double sin_w = comp.norm();

  ExplicitScaledNorm out;
  out.basis.resize(n, n);
  out.basis.col(0) = s_bar;
  if (sin_w > 1e-14) {
    Matrix pair(n, 2);
    pair.col(0) = s_bar;
    pair.col(1) = comp / sin_w;
    const Matrix Q = Eigen::HouseholderQR<Matrix>(pair).householderQ();
    out.basis.col(1) = pair.col(1);
    out.basis.rightCols(n - 2) = Q.rightCols(n - 2);
  } else {
    const Matrix Q = Eigen::HouseholderQR<Matrix>(Matrix(s_bar)).householderQ();
    out.basis.rightCols(n - 1) = Q.rightCols(n - 1);
  }

  const double beta = info.beta;
  const double tan_w = sin_w > 1e-14 ? sin_w / info.cos_w : 0.0;
  out.gamma = 2.0 * beta * tan_w * tan_w + 0.5 * beta;
  out.N << beta, beta * tan_w, beta * tan_w, out.gamma;
  out.D = Vector::Constant(n - 2, d_fill);

  Matrix core = Matrix::Zero(n, n);
  core.topLeftCorner<2, 2>() = out.N;
  core.bottomRightCorner(n - 2, n - 2) = out.D.asDiagonal();
  out.M = out.basis * core * out.basis.transpose();
  out.M = 0.5 * (out.M + out.M.transpose());
  return out;
}

double cubic_model_value(double f0, const DirectionInfo& info, double curvature, double sigma,
                         double t, ModelDirection along) {
  const double at = std::abs(t);
  if (along == ModelDirection::s_q) {
    return f0 + t * info.slope + 0.5 * t * t * curvature +
           sigma / 3.0 * at * at * at * std::pow(info.theta, 1.5);
  }
  const double g2 = info.norm_g * info.norm_g;
  return f0 - t * g2 + 0.5 * t * t * curvature +
         sigma / 3.0 * at * at * at * std::pow(info.chi, 1.5) * g2 * info.norm_g;
}

}  // namespace lsarc
