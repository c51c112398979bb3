#include "lsarc/scaled_norm.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace lsarc {
namespace {

using testing::random_descent_instance;
using testing::random_normal;
using testing::random_symmetric;
using testing::random_uniform;
using testing::Rng;

double m_norm(const Matrix& M, const Vector& x) { return std::sqrt(x.dot(M * x)); }

TEST(DirectionAnalysis, OrthogonalSaddleDirection) {
  const auto info =
      direction_analysis(Eigen::Vector2d(2, -2), Eigen::Vector2d(-1, -1), 1.0, 1e-3);
  EXPECT_EQ(info.slope, 0.0);
  EXPECT_FALSE(info.descent_ok);
  EXPECT_TRUE(info.orthogonal_direction);
  EXPECT_TRUE(std::isnan(info.chi));
}

TEST(DirectionAnalysis, SteepestDescentChiEqualsBeta) {
  const Vector g = Eigen::Vector3d(0.3, -1.0, 2.0);
  for (double beta : {1e-4, 0.5, 3.0}) {
    const auto info = direction_analysis(g, -g, beta, 1e-3);
    EXPECT_DOUBLE_EQ(info.cos_w, -1.0);
    EXPECT_NEAR(info.chi, beta, 1e-15 * beta);
    EXPECT_TRUE(info.descent_ok);
  }
}

TEST(DirectionAnalysis, SaddleIterationOneSlope) {
  const auto info = direction_analysis(Eigen::Vector2d(1.1559, -7.4126),
                                       Eigen::Vector2d(-0.5780, -3.7063), 2.0, 1e-3);
  EXPECT_NEAR(info.slope, 26.805, 1e-2);
  EXPECT_TRUE(info.descent_ok);
}

TEST(DirectionAnalysis, DescentGateIsInclusive) {
  // cos_w = 0.6 exactly for this pair.
  const Vector g = Eigen::Vector2d(1.0, 0.0);
  const Vector s = Eigen::Vector2d(3.0, 4.0);
  EXPECT_TRUE(direction_analysis(g, s, 1.0, 0.6).descent_ok);
  EXPECT_FALSE(direction_analysis(g, s, 1.0, 0.6000001).descent_ok);
  EXPECT_THROW(direction_analysis(Vector::Zero(2), s, 1.0, 0.1), ConfigError);
}

TEST(DirectionAnalysis, InvariantsOnRandomInstances) {
  Rng rng(10);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 9;
    const auto inst = random_descent_instance(rng, n, 1e-3);
    const auto info = direction_analysis(inst.g, inst.s, inst.beta, 1e-3);
    EXPECT_LE(std::abs(info.cos_w), 1.0);
    EXPECT_GT(info.theta, 0.0);
    EXPECT_GE(info.chi, info.beta * (1 - 1e-15));
    EXPECT_NEAR(info.m_norm_sq * info.m_norm_sq, info.beta * info.norm_sq * info.norm_sq,
                1e-12 * info.theta);
    EXPECT_NEAR(info.m_norm_g * info.m_norm_g, info.chi * info.norm_g * info.norm_g,
                1e-12 * info.chi * info.norm_g * info.norm_g);
    // Norm equivalence with beta playing both bounds.
    const double lo = std::sqrt(info.beta / 2.0);
    const double hi = std::sqrt(2.0 * info.beta) / info.eps_d;
    EXPECT_GE(info.m_norm_sq, lo * info.norm_sq);
    EXPECT_LE(info.m_norm_sq, hi * info.norm_sq);
    EXPECT_GE(info.m_norm_g, lo * info.norm_g);
    EXPECT_LE(info.m_norm_g, hi * info.norm_g);
  }
}

TEST(DirectionAnalysis, ChiInvariantUnderScaling) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto inst = random_descent_instance(rng, 5, 1e-3);
    const auto base = direction_analysis(inst.g, inst.s, inst.beta, 1e-3);
    const double a = std::exp(random_uniform(rng, -5, 5));
    const double b = std::exp(random_uniform(rng, -5, 5));
    const auto scaled = direction_analysis(a * inst.g, -b * inst.s, inst.beta, 1e-3);
    EXPECT_NEAR(scaled.chi, base.chi, 1e-10 * base.chi);
  }
}

TEST(DirectionAnalysis, SetBetaRescales) {
  Rng rng(12);
  const auto inst = random_descent_instance(rng, 4, 1e-3);
  auto info = direction_analysis(inst.g, inst.s, 1.0, 1e-3);
  const double chi1 = info.chi;
  set_beta(info, 4.0);
  EXPECT_EQ(info.beta, 4.0);
  EXPECT_NEAR(info.chi, 4.0 * chi1, 1e-12 * chi1);
  EXPECT_NEAR(info.theta, 4.0 * inst.s.squaredNorm(), 1e-12 * info.theta);
}

TEST(ChiFactor, NaNBelowFloor) {
  EXPECT_TRUE(std::isnan(chi_factor(0.0, 1.0)));
  EXPECT_TRUE(std::isnan(chi_factor(1e-301, 1.0)));
  EXPECT_DOUBLE_EQ(chi_factor(1.0, 2.0), 2.0);
  EXPECT_DOUBLE_EQ(chi_factor(-1.0, 2.0), 2.0);
}

TEST(BetaPolicy, Examples) {
  EXPECT_DOUBLE_EQ(beta_policy(BetaMethod::ls_arc, 1.0, -1.0), 1e-4);
  EXPECT_DOUBLE_EQ(beta_policy(BetaMethod::ls_arc, 1.0, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(beta_policy(BetaMethod::ls_tr, 123.0, -4.0), 1.0);
  EXPECT_DOUBLE_EQ(beta_policy(BetaMethod::ls_tr, 0.1, 4.0), 1.0);
  EXPECT_NEAR(beta_policy(BetaMethod::ls_arc, 8.0, -1.0), 1e-4 / 4.0, 1e-18);
}

TEST(BetaPolicy, Clamped) {
  const BetaBounds b{1e-3, 1.5};
  EXPECT_DOUBLE_EQ(beta_policy(BetaMethod::ls_arc, 1.0, -1.0, b), 1e-3);
  EXPECT_DOUBLE_EQ(beta_policy(BetaMethod::ls_arc, 1.0, 1.0, b), 1.5);
  EXPECT_DOUBLE_EQ(beta_policy(BetaMethod::ls_arc, 1e-30, -1.0, b), 1.5);
}

TEST(ExplicitM, CollinearBlockIsDiagonal) {
  const Vector g = Eigen::Vector3d(1.0, 2.0, -1.0);
  for (double sign : {-1.0, 1.0}) {
    const auto info = direction_analysis(g, sign * 3.0 * g, 0.7, 1e-3);
    const auto E = build_explicit_M(info);
    EXPECT_NEAR(E.N(0, 0), 0.7, 1e-15);
    EXPECT_NEAR(E.N(0, 1), 0.0, 1e-15);
    EXPECT_NEAR(E.N(1, 1), 0.35, 1e-15);
    EXPECT_NEAR(E.gamma, 0.35, 1e-15);
  }
}

TEST(ExplicitM, RejectsBadInput) {
  const auto orth = direction_analysis(Eigen::Vector2d(2, -2), Eigen::Vector2d(-1, -1), 1.0, 1e-3);
  try {
    build_explicit_M(orth);
    FAIL() << "expected assumption_violated";
  } catch (const SolverError& e) {
    EXPECT_EQ(e.code(), SolverErrorCode::assumption_violated);
  }
  const auto one = direction_analysis(Vector::Ones(1), -Vector::Ones(1), 1.0, 1e-3);
  EXPECT_THROW(build_explicit_M(one), ConfigError);
  const auto ok = direction_analysis(Eigen::Vector2d(1, 0), Eigen::Vector2d(-1, 1), 1.0, 1e-3);
  EXPECT_THROW(build_explicit_M(ok, 0.0), ConfigError);
}

TEST(ExplicitM, PropertiesOnRandomInstances) {
  Rng rng(13);
  const BetaBounds bounds;
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + static_cast<int>(random_uniform(rng, 0, 49));
    const auto inst = random_descent_instance(rng, n, 1e-3);
    const auto info = direction_analysis(inst.g, inst.s, inst.beta, 1e-3);
    const auto E = build_explicit_M(info);
    const Matrix& M = E.M;

    const Eigen::SelfAdjointEigenSolver<Matrix> eig(M);
    EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0);
    EXPECT_GE(eig.eigenvalues().minCoeff(), bounds.beta_min / 2);
    EXPECT_LE(eig.eigenvalues().maxCoeff(), 2 * bounds.beta_max / (1e-3 * 1e-3));

    const Vector secant = M * inst.s - (info.theta / info.slope) * inst.g;
    EXPECT_LE(secant.norm(), 1e-10 * std::max(inst.g.norm(), (M * inst.s).norm()));

    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eN(E.N);
    const double tan2 = (1 - info.cos_w * info.cos_w) / (info.cos_w * info.cos_w);
    EXPECT_NEAR(eN.eigenvalues()[0], info.beta / 2, 1e-12 * info.beta * (1 + tan2));
    EXPECT_NEAR(eN.eigenvalues()[1], info.beta * (1 + 2 * tan2), 1e-12 * info.beta * (1 + tan2));

    EXPECT_NEAR(inst.s.dot(M * inst.s), info.beta * inst.s.squaredNorm(),
                1e-10 * info.theta);
    EXPECT_NEAR(inst.g.dot(M * inst.g), info.chi * inst.g.squaredNorm(),
                1e-10 * info.chi * inst.g.squaredNorm());

    const Matrix QtQ = E.basis.transpose() * E.basis;
    EXPECT_LE((QtQ - Matrix::Identity(n, n)).norm(), 1e-12 * n);
  }
}

TEST(CubicModel, ZeroStepIsF0) {
  const auto info = direction_analysis(Eigen::Vector2d(1, 2), Eigen::Vector2d(-1, 0), 0.3, 1e-3);
  EXPECT_EQ(cubic_model_value(5.0, info, 2.0, 1.0, 0.0, ModelDirection::s_q), 5.0);
  EXPECT_EQ(cubic_model_value(5.0, info, 2.0, 1.0, 0.0, ModelDirection::neg_g), 5.0);
}

TEST(CubicModel, QuadraticPartForExactDirection) {
  Rng rng(14);
  const Matrix B = random_symmetric(rng, Eigen::Vector3d(1.0, 2.0, 5.0));
  const Vector g = random_normal(rng, 3);
  const Vector s = B.llt().solve(-g);
  const auto info = direction_analysis(g, s, 1.0, 1e-3);
  for (double t : {-1.5, 0.25, 1.0, 2.0}) {
    const double m = cubic_model_value(0.0, info, s.dot(B * s), 0.0, t, ModelDirection::s_q);
    EXPECT_NEAR(m, info.slope * t - info.slope * t * t / 2, 1e-12 * std::abs(info.slope) * 4);
  }
}

TEST(CubicModel, MatchesExplicitNorm) {
  Rng rng(15);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 10;
    const auto inst = random_descent_instance(rng, n, 1e-3);
    const auto info = direction_analysis(inst.g, inst.s, inst.beta, 1e-3);
    const Matrix M = build_explicit_M(info).M;
    const Matrix B = random_symmetric(rng, random_normal(rng, n));
    const double sigma = std::exp(random_uniform(rng, -4, 4));
    const double t = random_uniform(rng, -3, 3);
    const double f0 = random_uniform(rng, -10, 10);
    for (auto along : {ModelDirection::s_q, ModelDirection::neg_g}) {
      const Vector d = along == ModelDirection::s_q ? inst.s : Vector(-inst.g);
      const double nd = m_norm(M, t * d);
      const double ref = f0 + t * inst.g.dot(d) + 0.5 * t * t * d.dot(B * d) + sigma / 3 * nd * nd * nd;
      const double got = cubic_model_value(f0, info, d.dot(B * d), sigma, t, along);
      const double scale = std::abs(f0) + std::abs(t * inst.g.dot(d)) +
                           std::abs(0.5 * t * t * d.dot(B * d)) + sigma / 3 * nd * nd * nd;
      EXPECT_NEAR(got, ref, 1e-10 * scale);
    }
  }
}

}  // namespace
}  // namespace lsarc
