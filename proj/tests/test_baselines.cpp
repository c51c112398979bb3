#include "lsarc/solver.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace lsarc {
namespace {

using testing::QuadraticProblem;
using testing::random_normal;
using testing::random_spd;
using testing::Rng;

SolverConfig traced() {
  SolverConfig c;
  c.record_trace = true;
  return c;
}

TEST(Armijo, NewtonStepOnQuadraticAcceptedImmediately) {
  Rng rng(60);
  const Matrix A = random_spd(rng, 10, 50.0);
  const auto p = std::make_shared<QuadraticProblem>(A, random_normal(rng, 10), random_normal(rng, 10));
  SolverConfig cfg = traced();
  cfg.inner_rtol = 1e-10;
  const auto rec = armijo_solve(p, cfg);
  EXPECT_EQ(rec.status, RunStatus::converged);
  ASSERT_FALSE(rec.trace.empty());
  EXPECT_EQ(rec.trace[0].length, 1.0);
  EXPECT_EQ(rec.trace[0].backtracks, 0);
  EXPECT_LE(rec.outer_iters, 2);
}

TEST(Armijo, UnitStepOnSphere) {
  const auto p = std::make_shared<QuadraticProblem>(Matrix::Identity(2, 2), Vector::Zero(2),
                                                    Eigen::Vector2d(1, 0));
  const auto rec = armijo_solve(p, traced());
  ASSERT_EQ(rec.trace.size(), 1u);
  EXPECT_EQ(rec.trace[0].slope, -1.0);
  EXPECT_EQ(rec.trace[0].length, 1.0);
  EXPECT_EQ(rec.final_f, 0.0);
}

TEST(Armijo, NonDescentDirectionReplacedByGradient) {
  const auto rec = armijo_solve(make_problem("saddle2d", 2), traced());
  ASSERT_FALSE(rec.trace.empty());
  // The Newton direction (-1,-1) is orthogonal to g = (2,-2).
  EXPECT_DOUBLE_EQ(rec.trace[0].slope, -8.0);
  EXPECT_EQ(rec.status, RunStatus::diverged);
}

TEST(Armijo, BacktracksOnNonconvexProblem) {
  const auto rec = armijo_solve(make_problem("rosenbrock", 10), traced());
  EXPECT_EQ(rec.status, RunStatus::converged);
  bool backtracked = false;
  for (const auto& it : rec.trace) {
    backtracked = backtracked || it.backtracks > 0;
    EXPECT_DOUBLE_EQ(it.length, std::pow(0.5, it.backtracks));
  }
  EXPECT_TRUE(backtracked);
}

TEST(ArcL2, SaddleFirstStep) {
  const auto rec = arc_l2_solve(make_problem("saddle2d", 2), traced());
  ASSERT_GE(rec.trace.size(), 2u);
  EXPECT_TRUE(rec.trace[0].accepted);
  EXPECT_NEAR(rec.trace[1].f, -13.4027, 1e-3);
  EXPECT_EQ(rec.status, RunStatus::diverged);
}

TEST(ArcL2, DenseModeMatchesLanczosOnSaddle) {
  SolverConfig cfg = traced();
  cfg.arc_subproblem = CubicMode::dense_exact;
  const auto rec = arc_l2_solve(make_problem("saddle2d", 2), cfg);
  ASSERT_GE(rec.trace.size(), 2u);
  EXPECT_NEAR(rec.trace[1].f, -13.4027, 1e-3);
}

TEST(ArcL2, UnsuccessfulIterationsOnlyGrowSigma) {
  SolverConfig cfg = traced();
  cfg.sigma0 = 1e-6;
  const auto rec = arc_l2_solve(make_problem("rosenbrock", 10), cfg);
  EXPECT_EQ(rec.status, RunStatus::converged);
  int failures = 0;
  for (std::size_t k = 0; k < rec.trace.size(); ++k) {
    const auto& it = rec.trace[k];
    if (it.accepted) {
      EXPECT_DOUBLE_EQ(it.new_control, std::max(cfg.nu1 * it.control, cfg.sigma_min));
      continue;
    }
    ++failures;
    EXPECT_DOUBLE_EQ(it.new_control, cfg.nu2 * it.control);
    if (k + 1 < rec.trace.size()) {
      EXPECT_EQ(rec.trace[k + 1].f, it.f);
      EXPECT_EQ(rec.trace[k + 1].gnorm, it.gnorm);
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(ArcL2, RosenbrockConverges) {
  const auto rec = arc_l2_solve(make_problem("rosenbrock", 100), SolverConfig{});
  EXPECT_EQ(rec.status, RunStatus::converged);
  EXPECT_LE(rec.final_gnorm, 1e-5);
}

TEST(TrL2, QuadraticConvergesQuickly) {
  for (std::uint64_t seed : {1, 2, 3}) {
    SolverConfig cfg;
    cfg.delta0 = 1e3;
    const auto rec = tr_l2_solve(make_problem("quad_spd", 50, seed), cfg);
    EXPECT_EQ(rec.status, RunStatus::converged);
    EXPECT_LE(rec.outer_iters, 10);
  }
}

TEST(TrL2, UnsuccessfulIterationsOnlyShrinkRadius) {
  SolverConfig cfg = traced();
  cfg.delta0 = 1e3;
  const auto rec = tr_l2_solve(make_problem("rosenbrock", 10), cfg);
  EXPECT_EQ(rec.status, RunStatus::converged);
  int failures = 0;
  for (std::size_t k = 0; k < rec.trace.size(); ++k) {
    const auto& it = rec.trace[k];
    if (it.accepted) {
      EXPECT_DOUBLE_EQ(it.new_control, std::min(cfg.tau2 * it.control, cfg.delta_max));
      continue;
    }
    ++failures;
    EXPECT_DOUBLE_EQ(it.new_control, cfg.tau1 * it.control);
    if (k + 1 < rec.trace.size()) EXPECT_EQ(rec.trace[k + 1].f, it.f);
  }
  EXPECT_GT(failures, 0);
}

TEST(TrL2, SteihaugModeConverges) {
  SolverConfig cfg;
  cfg.tr_subproblem = TrMode::steihaug;
  const auto rec = tr_l2_solve(make_problem("wood", 20), cfg);
  EXPECT_EQ(rec.status, RunStatus::converged);
}

TEST(Baselines, StationaryStartNeedsNoIteration) {
  const Matrix A = Eigen::Vector2d(2, 3).asDiagonal();
  const Vector b = Eigen::Vector2d(-1, 1);
  const auto p = std::make_shared<QuadraticProblem>(A, b, A.llt().solve(-b));
  for (auto fn : {armijo_solve, arc_l2_solve, tr_l2_solve}) {
    const auto rec = fn(p, SolverConfig{});
    EXPECT_EQ(rec.status, RunStatus::converged);
    EXPECT_EQ(rec.outer_iters, 0);
  }
}

TEST(Baselines, CountersMatchFinalTraceSnapshot) {
  for (auto fn : {armijo_solve, arc_l2_solve, tr_l2_solve}) {
    const auto rec = fn(make_problem("trig", 30), traced());
    ASSERT_EQ(rec.status, RunStatus::converged);
    ASSERT_FALSE(rec.trace.empty());
    const auto& c = rec.trace.back().counters;
    EXPECT_EQ(rec.f_evals, c.f_evals);
    EXPECT_EQ(rec.g_evals, c.g_evals);
    EXPECT_EQ(rec.hvp_evals, c.hvp_evals);
    EXPECT_EQ(rec.inner_matvecs, c.inner_matvecs);
    EXPECT_EQ(static_cast<int>(rec.trace.size()), rec.outer_iters);
  }
}

}  // namespace
}  // namespace lsarc
