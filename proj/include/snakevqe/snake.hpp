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

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "snakevqe/objective.hpp"

namespace snakevqe {

/// M x K parameter matrix; row m is theta(lambda_m), column i is r_i.
using Theta = Eigen::MatrixXd;

enum class Boundary { periodic, clamped };

Boundary parse_boundary(std::string_view text);
const char* to_string(Boundary boundary);

struct SnakeConfig {
  double alpha = 0.1;
  double beta = 3.0;
  double eta = 0.2;
  double gamma = 0.0;  // decay rate; 0 keeps A fixed
  std::size_t max_iters = 2000;
  double grad_tol = 1e-6;
  Boundary boundary = Boundary::periodic;
  std::uint64_t seed = 0;
  std::size_t snapshot_stride = 0;  // 0: initial and final state only

  /// Throws InputError naming the first offending field.
  void validate() const;
};

struct GdConfig {
  double eta = 0.2;
  std::size_t max_iters = 2000;
  double grad_tol = 1e-6;
  std::size_t snapshot_stride = 0;

  void validate() const;
};

/// A value or gradient of member `member` became NaN/inf at `iteration`.
class NonFiniteError : public std::runtime_error {
 public:
  NonFiniteError(std::size_t member, std::size_t iteration);
  std::size_t member() const { return member_; }
  std::size_t iteration() const { return iteration_; }

 private:
  std::size_t member_;
  std::size_t iteration_;
};

/**
 * Stiffness matrix alpha * D1^T D1 + beta * D2^T D2, where D1 and D2 are
 * first and second difference operators. Periodic: cyclic pentadiagonal with
 * rows (beta, -alpha-4beta, 2alpha+6beta, -alpha-4beta, beta). Clamped: the
 * differences do not wrap, giving a free-ended snake. Requires M >= 5.
 */
Eigen::MatrixXd build_A(double alpha, double beta, std::size_t M, Boundary boundary);

/// M x K matrix of member gradients; throws NonFiniteError.
Theta gradients(const ObjectiveFamily& family, const Theta& theta,
                std::size_t iteration = 0);

/// One implicit step: column i <- (eta A + I)^{-1} (r_i - eta g_i).
Theta snake_step(const Theta& theta, const ObjectiveFamily& family,
                 const Eigen::MatrixXd& A, double eta);

/// theta_m <- theta_m - eta grad E_m(theta_m), independently per member.
Theta gd_step(const Theta& theta, const ObjectiveFamily& family, double eta);

struct MemberResult {
  double label;
  std::vector<double> theta;
  double value;
  double grad_norm;  // infinity norm of grad E_m
  double residual;   // infinity norm of row m of (A Theta + G)
};

struct Snapshot {
  std::size_t iteration;
  Theta theta;
  std::vector<double> values;
};

struct RunReport {
  std::string optimizer;  // "snake" or "gd"
  std::size_t iterations = 0;
  bool converged = false;
  Theta theta;
  std::vector<MemberResult> members;
  std::vector<Snapshot> trajectory;
  /// 2-norm of A r_i + g_i per column i, with the last A used.
  std::vector<double> equilibrium_residuals;
  double wall_time_s = 0.0;

  double max_grad_norm() const;
};

RunReport snake_run(const ObjectiveFamily& family, const SnakeConfig& config,
                    const Theta& init);
/// Seeded uniform init on [init_lo, init_hi).
RunReport snake_run(const ObjectiveFamily& family, const SnakeConfig& config,
                    double init_lo, double init_hi);

RunReport gd_run(const ObjectiveFamily& family, const GdConfig& config,
                 const Theta& init);

/// Row-major fill from mt19937_64(seed), uniform on [lo, hi).
Theta random_init(std::size_t M, std::size_t K, double lo, double hi,
                  std::uint64_t seed);

/// sum over columns of alpha |D1 r_i|^2 + beta |D2 r_i|^2 = sum_i r_i^T A r_i.
double internal_energy(const Theta& theta, double alpha, double beta,
                       Boundary boundary);

/// Throws InputError unless the family's labels are evenly spaced.
void require_uniform_grid(const ObjectiveFamily& family);

}  // namespace snakevqe
