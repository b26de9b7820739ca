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
#include <random>

#include "snakevqe/objective.hpp"
#include "snakevqe/oracle.hpp"

namespace snakevqe {
namespace {

TEST(StValue, Examples) {
  EXPECT_EQ(st_value(0.0, 3.7), 0.0);
  EXPECT_NEAR(st_value(std::sqrt(8.0), 0.0), -32.0, 1e-12);
  EXPECT_EQ(st_value(2.0, 6.0), -18.0);
}

TEST(StGradient, Examples) {
  EXPECT_EQ(st_gradient(0.0, 0.0), 0.0);
  EXPECT_EQ(st_gradient(2.0, 6.0), -13.0);
  EXPECT_NEAR(st_gradient(std::sqrt(8.0), 0.0), 0.0, 1e-12);
}

TEST(StMinima, SymmetricAtZero) {
  const auto m = st_minima(0.0);
  EXPECT_NEAR(m.x_global, -std::sqrt(8.0), 1e-12);
  EXPECT_NEAR(m.x_local, std::sqrt(8.0), 1e-12);
  EXPECT_NEAR(m.x_barrier, 0.0, 1e-12);
  EXPECT_NEAR(st_value(m.x_global, 0.0), st_value(m.x_local, 0.0), 1e-12);
}

TEST(StMinima, NegativeRootIsGlobalForPositiveT) {
  for (double t : {0.1, 1.0, 3.0, 6.0}) {
    const auto m = st_minima(t);
    EXPECT_LT(m.x_global, m.x_barrier);
    EXPECT_LT(m.x_barrier, m.x_local);
    EXPECT_LT(st_value(m.x_global, t), st_value(m.x_local, t)) << t;
    for (double x : {m.x_global, m.x_local, m.x_barrier}) {
      EXPECT_NEAR(4 * x * x * x - 32 * x + t, 0.0, 1e-10);
    }
  }
  EXPECT_THROW(st_minima(-1.0), std::invalid_argument);
}

TEST(StBasin, Labels) {
  EXPECT_EQ(st_basin(-1.0, 6.0), StBasin::global);
  EXPECT_EQ(st_basin(1.0, 6.0), StBasin::local);
  EXPECT_EQ(st_basin(1.0, 0.0), StBasin::tie);
}

TEST(STFamily, DefaultGridAndExactGradient) {
  const auto f = STFamily::uniform();
  ASSERT_EQ(f.size(), 61u);
  EXPECT_EQ(f.dim(), 1u);
  EXPECT_EQ(f.label(0), 0.0);
  EXPECT_EQ(f.label(60), 6.0);
  EXPECT_NEAR(f.label(30), 3.0, 1e-15);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-4, 4);
  for (std::size_t m = 0; m < f.size(); ++m) {
    const std::vector<double> x{u(rng)};
    EXPECT_EQ(f.value(m, x), st_value(x[0], f.label(m)));
    EXPECT_EQ(f.gradient(m, x)[0], st_gradient(x[0], f.label(m)));
    const double h = 1e-5;
    const double fd = (st_value(x[0] + h, f.label(m)) - st_value(x[0] - h, f.label(m))) / (2 * h);
    EXPECT_NEAR(f.gradient(m, x)[0], fd, 1e-5);
  }
}

TEST(STFamily, RejectsOutOfRange) {
  EXPECT_THROW(STFamily({-1.0, 0.0}), InputError);
  EXPECT_THROW(STFamily({1.0, 1.0}), InputError);
}

TEST(VQEFamily, DelegatesToAnsatz) {
  const VQEFamily f(synth_h2_family(), builtin_ansatz("h2_ucc"));
  EXPECT_EQ(f.size(), 54u);
  EXPECT_EQ(f.dim(), 1u);
  EXPECT_EQ(f.label_name(), "bond_length_au");
  const std::vector<double> t{0.3};
  for (std::size_t m = 0; m < f.size(); m += 7) {
    const auto& h = f.family().points()[m].hamiltonian;
    EXPECT_EQ(f.value(m, t), energy_at(f.ansatz(), h, t));
    EXPECT_EQ(f.gradient(m, t), gradient(f.ansatz(), h, t));
    EXPECT_NEAR(f.gradient(m, t)[0], gradient_fd(f.ansatz(), h, t, 1e-5)[0], 1e-6);
  }
}

TEST(VQEFamily, MinimumBoundedByGroundEnergy) {
  const VQEFamily f(synth_h2_family(), builtin_ansatz("h2_ucc"));
  for (std::size_t m = 0; m < f.size(); ++m) {
    const auto& h = f.family().points()[m].hamiltonian;
    EXPECT_GE(grid_scan_min(f.ansatz(), h, 256).energy, ground_energy(h) - 1e-9);
  }
}

TEST(VQEFamily, QubitMismatchThrows) {
  EXPECT_THROW(VQEFamily(synth_h2_family(), builtin_ansatz("lih_ucc")), InputError);
}

TEST(QuadraticFamily, ValueAndGradient) {
  Eigen::MatrixXd c(2, 2);
  c << 1, 2, -1, 0;
  const QuadraticFamily f(c);
  EXPECT_EQ(f.value(0, std::vector<double>{1, 2}), 0.0);
  EXPECT_EQ(f.value(1, std::vector<double>{0, 0}), 0.5);
  EXPECT_EQ(f.gradient(1, std::vector<double>{0, 3}), (std::vector<double>{1, 3}));
}

}  // namespace
}  // namespace snakevqe
