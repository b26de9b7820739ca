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
#include <vector>

#include <Eigen/Dense>

#include "snakevqe/ansatz.hpp"
#include "snakevqe/hamiltonian.hpp"

namespace snakevqe {

/// Brute-force ground truth for small systems.
inline constexpr std::size_t kMaxOracleQubits = 5;

using DenseHermitian = Eigen::MatrixXcd;

/// sum_i c_i (kron of 2x2 Pauli matrices), qubit 0 as the leftmost factor.
DenseHermitian dense_matrix(const Hamiltonian& h);

/// Eigenvalues of dense_matrix(h), ascending.
std::vector<double> eigenvalues(const Hamiltonian& h);
double ground_energy(const Hamiltonian& h);

struct GridPoint {
  std::vector<double> theta;
  double energy;
};

/// energy_at over the uniform grid [-pi, pi)^K, K = n_params <= 3.
class GridScan {
 public:
  GridScan(const Ansatz& ansatz, const Hamiltonian& h, std::size_t resolution);

  std::size_t resolution() const { return resolution_; }
  std::size_t dim() const { return dim_; }
  double value(std::size_t flat_index) const { return values_[flat_index]; }
  std::vector<double> theta(std::size_t flat_index) const;

  GridPoint min() const;

  /// Cells strictly lower than all 3^K - 1 periodic neighbours, sorted by energy.
  std::vector<GridPoint> local_minima() const;

 private:
  std::size_t resolution_;
  std::size_t dim_;
  std::vector<double> values_;
};

/// Minimum over the raw grid.
GridPoint grid_scan_min(const Ansatz& ansatz, const Hamiltonian& h,
                        std::size_t resolution);

/**
 * Refines `start` with derivative-free golden-section sweeps, one axis at a
 * time, each confined to [theta_j - radius, theta_j + radius]. Uses only
 * energy_at; independent of any gradient code.
 */
GridPoint polish_minimum(const Ansatz& ansatz, const Hamiltonian& h,
                         const GridPoint& start, double radius,
                         std::size_t sweeps = 6);

/// grid_scan_min followed by polish_minimum over two grid cells.
GridPoint grid_scan_min_polished(const Ansatz& ansatz, const Hamiltonian& h,
                                 std::size_t resolution);

}  // namespace snakevqe
