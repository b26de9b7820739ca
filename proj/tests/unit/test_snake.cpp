// Copyright 2026 The snakevqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "snakevqe/snake.hpp"

namespace snakevqe {
namespace {

/// Every objective is zero; gradients vanish everywhere.
class FlatFamily final : public ObjectiveFamily {
 public:
  FlatFamily(std::size_t m, std::size_t k) : m_(m), k_(k) {}
  std::size_t size() const override { return m_; }
  std::size_t dim() const override { return k_; }
  double value(std::size_t, std::span<const double>) const override { return 0.0; }
  std::vector<double> gradient(std::size_t, std::span<const double>) const override {
    return std::vector<double>(k_, 0.0);
  }
  double label(std::size_t m) const override { return static_cast<double>(m); }

 private:
  std::size_t m_, k_;
};

class NanFamily final : public ObjectiveFamily {
 public:
  std::size_t size() const override { return 6; }
  std::size_t dim() const override { return 1; }
  double value(std::size_t, std::span<const double> t) const override { return t[0]; }
  std::vector<double> gradient(std::size_t m, std::span<const double> t) const override {
    return {m == 4 && t[0] < 0.5 ? NAN : 1.0};
  }
  double label(std::size_t m) const override { return static_cast<double>(m); }
};

void expect_matrix_near(const Theta& a, const Theta& b, double tol) {
  ASSERT_EQ(a.rows(), b.rows());
  ASSERT_EQ(a.cols(), b.cols());
  EXPECT_LE((a - b).cwiseAbs().maxCoeff(), tol);
}

TEST(BuildA, StretchOnlyCirculant) {
  const auto A = build_A(1.0, 0.0, 5, Boundary::periodic);
  Eigen::RowVectorXd row(5);
  row << 2, -1, 0, 0, -1;
  EXPECT_EQ(A.row(0), row);
}

TEST(BuildA, ZeroStiffness) {
  EXPECT_TRUE(build_A(0.0, 0.0, 17, Boundary::periodic).isZero(0.0));
  EXPECT_TRUE(build_A(0.0, 0.0, 17, Boundary::clamped).isZero(0.0));
}

TEST(BuildA, StiffH2Hyperparameters) {
  const auto A = build_A(0.1, 3.0, 54, Boundary::periodic);
  for (Eigen::Index i = 0; i < 54; ++i) {
    EXPECT_DOUBLE_EQ(A(i, i), 18.2);
    EXPECT_DOUBLE_EQ(A(i, (i + 1) % 54), -12.1);
    EXPECT_DOUBLE_EQ(A(i, (i + 53) % 54), -12.1);
    EXPECT_DOUBLE_EQ(A(i, (i + 2) % 54), 3.0);
    EXPECT_DOUBLE_EQ(A(i, (i + 52) % 54), 3.0);
    EXPECT_DOUBLE_EQ(A.row(i).cwiseAbs().sum(), 18.2 + 2 * 12.1 + 6.0);
  }
}

TEST(BuildA, ClampedInteriorMatchesPeriodicStencil) {
  const auto P = build_A(0.7, 1.3, 12, Boundary::periodic);
  const auto C = build_A(0.7, 1.3, 12, Boundary::clamped);
  EXPECT_TRUE(C.isApprox(C.transpose()));
  for (Eigen::Index i = 2; i < 10; ++i) EXPECT_TRUE(C.row(i).isApprox(P.row(i), 1e-15));
  // Free ends: constants are still in the kernel.
  EXPECT_LE((C * Eigen::VectorXd::Ones(12)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NE(C(0, 0), P(0, 0));
}

TEST(BuildA, TooFewMembers) { EXPECT_THROW(build_A(1, 1, 4, Boundary::periodic), InputError); }

TEST(BuildA, PeriodicRowsSumToZeroAndSpectrumIsNonNegative) {
  for (std::size_t M = 5; M <= 64; ++M) {
    for (auto boundary : {Boundary::periodic, Boundary::clamped}) {
      const auto A = build_A(0.1, 3.0, M, boundary);
      if (boundary == Boundary::periodic) {
        EXPECT_LE(A.rowwise().sum().cwiseAbs().maxCoeff(), 1e-14);
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
      EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12) << M;
    }
  }
}

TEST(BuildA, PeriodicEigenvaluesMatchSymbol) {
  const std::size_t M = 16;
  const double alpha = 0.4, beta = 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_A(alpha, beta, M, Boundary::periodic));
  std::vector<double> symbol;
  for (std::size_t k = 0; k < M; ++k) {
    const double c = 1 - std::cos(2 * std::numbers::pi * k / M);
    symbol.push_back(2 * alpha * c + 4 * beta * c * c);
  }
  std::sort(symbol.begin(), symbol.end());
  for (std::size_t k = 0; k < M; ++k) EXPECT_NEAR(es.eigenvalues()[k], symbol[k], 1e-12);
}

TEST(SnakeStep, ZeroStiffnessIsGradientDescent) {
  const auto f = STFamily::uniform(11);
  const Theta init = random_init(11, 1, -4, 4, 3);
  const Theta a = snake_step(init, f, build_A(0, 0, 11, Boundary::periodic), 0.01);
  EXPECT_EQ(a, gd_step(init, f, 0.01));  // bitwise
}

TEST(SnakeStep, ConstantSnakeOnFlatObjectiveIsFixed) {
  const FlatFamily f(9, 2);
  Theta t(9, 2);
  t.col(0).setConstant(0.3);
  t.col(1).setConstant(-1.7);
  const auto next = snake_step(t, f, build_A(0.1, 3, 9, Boundary::periodic), 0.5);
  expect_matrix_near(next, t, 1e-14);
}

TEST(SnakeStep, ScalarQuadraticArithmetic) {
  const QuadraticFamily f(Eigen::MatrixXd::Zero(6, 1));
  const Theta t = Theta::Ones(6, 1);
  EXPECT_EQ(snake_step(t, f, build_A(0, 0, 6, Boundary::periodic), 0.5), Theta::Constant(6, 1, 0.5));
}

TEST(SnakeStep, SolveResidualIsTiny) {
  const auto A = build_A(0.1, 3.0, 61, Boundary::periodic);
  const auto f = STFamily::uniform(61);
  const Theta t = random_init(61, 1, -4, 4, 9);
  const double eta = 0.5;
  const Theta next = snake_step(t, f, A, eta);
  const Theta rhs = t - eta * gradients(f, t);
  const Eigen::MatrixXd S = eta * A + Eigen::MatrixXd::Identity(61, 61);
  EXPECT_LE((S * next - rhs).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(SnakeRun, ZeroStiffnessTrajectoryEqualsGd) {
  const auto f = STFamily::uniform(61);
  const Theta init = random_init(61, 1, -4, 4, 21);
  SnakeConfig cfg;
  cfg.alpha = cfg.beta = 0.0;
  cfg.eta = 0.01;
  cfg.max_iters = 200;
  cfg.grad_tol = 0.0;
  cfg.snapshot_stride = 1;
  const auto s = snake_run(f, cfg, init);
  const auto g = gd_run(f, GdConfig{0.01, 200, 0.0, 1}, init);
  ASSERT_EQ(s.trajectory.size(), 201u);
  ASSERT_EQ(g.trajectory.size(), 201u);
  for (std::size_t i = 0; i < s.trajectory.size(); ++i) {
    EXPECT_EQ(s.trajectory[i].iteration, g.trajectory[i].iteration);
    EXPECT_EQ(s.trajectory[i].theta, g.trajectory[i].theta);
  }
}

TEST(SnakeRun, TranslationEquivariance) {
  const std::size_t M = 20;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::MatrixXd centres(M, 2);
  for (Eigen::Index i = 0; i < centres.size(); ++i) centres.data()[i] = u(rng);
  const Eigen::RowVector2d c(0.75, -0.5);
  const Eigen::MatrixXd shifted = centres.rowwise() + c;
  const Theta init = random_init(M, 2, -1, 1, 4);
  const Theta init_shifted = init.rowwise() + c;
  SnakeConfig cfg;
  cfg.eta = 0.3;
  cfg.max_iters = 50;
  cfg.grad_tol = 0.0;
  cfg.snapshot_stride = 1;
  const auto a = snake_run(QuadraticFamily(centres), cfg, init);
  const auto b = snake_run(QuadraticFamily(shifted), cfg, init_shifted);
  for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
    const Theta moved = a.trajectory[i].theta.rowwise() + c;
    expect_matrix_near(b.trajectory[i].theta, moved, 1e-12);
  }
}

TEST(SnakeRun, LargeDecayBecomesGradientDescentAfterFirstStep) {
  const auto f = STFamily::uniform(61);
  const Theta init = random_init(61, 1, -4, 4, 5);
  SnakeConfig cfg;
  cfg.eta = 0.01;
  cfg.gamma = 1e3;
  cfg.max_iters = 100;
  cfg.grad_tol = 0.0;
  cfg.snapshot_stride = 1;
  const auto s = snake_run(f, cfg, init);
  const auto g = gd_run(f, GdConfig{0.01, 99, 0.0, 1}, s.trajectory[1].theta);
  for (std::size_t i = 0; i < g.trajectory.size(); ++i) {
    expect_matrix_near(s.trajectory[i + 1].theta, g.trajectory[i].theta, 1e-9);
  }
}

TEST(SnakeRun, ConvergesOnQuadraticAndReportsResidual) {
  const std::size_t M = 12;
  Eigen::MatrixXd centres(M, 1);
  for (std::size_t m = 0; m < M; ++m) centres(m, 0) = std::sin(0.5 * m);
  SnakeConfig cfg;
  cfg.alpha = 0.0;
  cfg.beta = 0.0;
  cfg.eta = 0.5;
  const auto r = snake_run(QuadraticFamily(centres), cfg, Theta::Zero(M, 1));
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.max_grad_norm(), 1e-6);
  ASSERT_EQ(r.members.size(), M);
  EXPECT_EQ(r.equilibrium_residuals.size(), 1u);
  EXPECT_EQ(r.trajectory.front().iteration, 0u);
  EXPECT_EQ(r.trajectory.back().iteration, r.iterations);
}

TEST(SnakeRun, StiffSnakeEquilibriumHasBias) {
  // A + G -> 0 at the fixed point even though the member gradients do not.
  const std::size_t M = 12;
  Eigen::MatrixXd centres(M, 1);
  for (std::size_t m = 0; m < M; ++m) centres(m, 0) = std::sin(0.5 * m);
  SnakeConfig cfg;
  cfg.alpha = 1.0;
  cfg.beta = 1.0;
  cfg.eta = 0.5;
  cfg.max_iters = 3000;
  const auto r = snake_run(QuadraticFamily(centres), cfg, Theta::Zero(M, 1));
  EXPECT_FALSE(r.converged);
  EXPECT_GT(r.max_grad_norm(), 1e-3);
  EXPECT_LT(r.equilibrium_residuals[0], 1e-10);
}

TEST(SnakeRun, NonFiniteGradientNamesMemberAndIteration) {
  SnakeConfig cfg;
  cfg.alpha = cfg.beta = 0;
  cfg.eta = 0.1;
  try {
    snake_run(NanFamily(), cfg, Theta::Ones(6, 1));
    FAIL() << "expected NonFiniteError";
  } catch (const NonFiniteError& e) {
    EXPECT_EQ(e.member(), 4u);
    EXPECT_EQ(e.iteration(), 6u);  // 1 - 0.1 k < 0.5 first at k = 6
  }
}

TEST(SnakeRun, ValidatesConfigAndGrid) {
  const auto f = STFamily::uniform(11);
  SnakeConfig cfg;
  cfg.eta = 0.0;
  EXPECT_THROW(snake_run(f, cfg, -4, 4), InputError);
  cfg.eta = 0.1;
  cfg.alpha = -1;
  EXPECT_THROW(snake_run(f, cfg, -4, 4), InputError);
  cfg.alpha = 0.1;
  cfg.gamma = NAN;
  EXPECT_THROW(snake_run(f, cfg, -4, 4), InputError);
  cfg.gamma = 0;
  EXPECT_THROW(snake_run(STFamily({0, 1, 2, 3, 5, 6}), cfg, -4, 4), InputError);
  EXPECT_THROW(snake_run(f, cfg, Theta::Zero(10, 1)), InputError);
}

TEST(SnakeRun, DecayWeakensStiffnessMonotonically) {
  // With gamma > 0 the late iterations behave like GD: the last step's A is tiny.
  const auto f = STFamily::uniform(21);
  SnakeConfig cfg;
  cfg.eta = 0.01;
  cfg.gamma = 0.1;
  cfg.max_iters = 400;
  cfg.grad_tol = 0.0;
  const auto r = snake_run(f, cfg, -4, 4);
  // The residual uses A0 exp(-399 gamma), which is negligible next to G.
  double g2 = 0.0;
  for (const auto& m : r.members) g2 += m.grad_norm * m.grad_norm;
  EXPECT_NEAR(r.equilibrium_residuals[0], std::sqrt(g2), 1e-6);
}

TEST(GdRun, SignOfInitPicksBasinAtTZero) {
  const STFamily f({0.0});
  const auto pos = gd_run(f, GdConfig{0.01, 5000, 1e-12, 0}, Theta::Constant(1, 1, 1.0));
  const auto neg = gd_run(f, GdConfig{0.01, 5000, 1e-12, 0}, Theta::Constant(1, 1, -1.0));
  EXPECT_NEAR(pos.theta(0, 0), 2.828427, 1e-6);
  EXPECT_NEAR(neg.theta(0, 0), -2.828427, 1e-6);
}

TEST(GdRun, ZeroGradientReturnsInit) {
  const Theta init = random_init(7, 3, -1, 1, 8);
  const auto r = gd_run(FlatFamily(7, 3), GdConfig{}, init);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_EQ(r.theta, init);
}

TEST(RandomInit, DeterministicAndInRange) {
  const Theta a = random_init(30, 2, -4, 4, 77);
  EXPECT_EQ(a, random_init(30, 2, -4, 4, 77));
  EXPECT_NE(a, random_init(30, 2, -4, 4, 78));
  EXPECT_GE(a.minCoeff(), -4.0);
  EXPECT_LT(a.maxCoeff(), 4.0);
}

TEST(InternalEnergy, Examples) {
  EXPECT_EQ(internal_energy(Theta::Constant(8, 2, 1.3), 0.1, 3, Boundary::periodic), 0.0);
  Theta alt(8, 1);
  for (Eigen::Index m = 0; m < 8; ++m) alt(m, 0) = m % 2;
  EXPECT_EQ(internal_energy(alt, 1.0, 0.0, Boundary::periodic), 8.0);
  EXPECT_EQ(internal_energy(random_init(8, 3, -1, 1, 1), 0, 0, Boundary::clamped), 0.0);
}

TEST(InternalEnergy, EqualsQuadraticFormOfA) {
  for (auto boundary : {Boundary::periodic, Boundary::clamped}) {
    const Theta t = random_init(13, 3, -2, 2, 6);
    const auto A = build_A(0.3, 1.7, 13, boundary);
    const double form = (t.transpose() * A * t).trace();
    EXPECT_NEAR(internal_energy(t, 0.3, 1.7, boundary), form, 1e-10);
  }
}

}  // namespace
}  // namespace snakevqe
