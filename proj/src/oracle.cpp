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

#include "snakevqe/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace snakevqe {

namespace {

Eigen::Matrix2cd pauli_matrix(char c) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (c) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, C(0, -1), C(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::logic_error("bad Pauli letter");
  }
  return m;
}

void check_size(const Hamiltonian& h) {
  if (h.n_qubits() > kMaxOracleQubits) {
    throw std::invalid_argument("exact oracle supports at most " +
                                std::to_string(kMaxOracleQubits) + " qubits, got " +
                                std::to_string(h.n_qubits()));
  }
}

}  // namespace

DenseHermitian dense_matrix(const Hamiltonian& h) {
  check_size(h);
  const Eigen::Index dim = Eigen::Index{1} << h.n_qubits();
  DenseHermitian out = DenseHermitian::Zero(dim, dim);
  for (const auto& term : h.terms()) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
    for (char c : term.pauli.word()) {
      Eigen::MatrixXcd next = Eigen::kroneckerProduct(acc, pauli_matrix(c)).eval();
      acc = std::move(next);
    }
    out += term.coeff * acc;
  }
  return out;
}

std::vector<double> eigenvalues(const Hamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<DenseHermitian> solver(dense_matrix(h),
                                                       Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double ground_energy(const Hamiltonian& h) { return eigenvalues(h).front(); }

GridScan::GridScan(const Ansatz& ansatz, const Hamiltonian& h,
                   std::size_t resolution)
    : resolution_(resolution), dim_(ansatz.n_params()) {
  if (dim_ > 3) {
    throw std::invalid_argument("grid scan supports at most 3 parameters");
  }
  if (resolution < 16) throw std::invalid_argument("grid resolution must be >= 16");
  std::size_t cells = 1;
  for (std::size_t k = 0; k < dim_; ++k) cells *= resolution;
  values_.resize(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    values_[i] = energy_at(ansatz, h, theta(i));
  }
}

std::vector<double> GridScan::theta(std::size_t flat_index) const {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(resolution_);
  std::vector<double> t(dim_);
  // Last parameter varies fastest.
  for (std::size_t k = dim_; k-- > 0;) {
    t[k] = -std::numbers::pi + step * static_cast<double>(flat_index % resolution_);
    flat_index /= resolution_;
  }
  return t;
}

GridPoint GridScan::min() const {
  const auto it = std::min_element(values_.begin(), values_.end());
  const auto idx = static_cast<std::size_t>(it - values_.begin());
  return {theta(idx), *it};
}

std::vector<GridPoint> GridScan::local_minima() const {
  std::vector<GridPoint> out;
  const std::size_t r = resolution_;
  std::vector<std::size_t> coord(dim_);
  std::size_t n_neighbours = 1;
  for (std::size_t k = 0; k < dim_; ++k) n_neighbours *= 3;

  for (std::size_t i = 0; i < values_.size(); ++i) {
    std::size_t rem = i;
    for (std::size_t k = dim_; k-- > 0;) {
      coord[k] = rem % r;
      rem /= r;
    }
    bool is_min = true;
    for (std::size_t nb = 0; nb < n_neighbours && is_min; ++nb) {
      std::size_t code = nb;
      std::size_t flat = 0;
      bool self = true;
      for (std::size_t k = 0; k < dim_; ++k) {
        const std::size_t off = code % 3;  // 0 -> -1, 1 -> 0, 2 -> +1
        code /= 3;
        if (off != 1) self = false;
        const std::size_t c = (coord[k] + r + off - 1) % r;
        flat = flat * r + c;
      }
      if (!self && !(values_[i] < values_[flat])) is_min = false;
    }
    if (is_min) out.push_back({theta(i), values_[i]});
  }
  std::sort(out.begin(), out.end(),
            [](const GridPoint& a, const GridPoint& b) { return a.energy < b.energy; });
  return out;
}

GridPoint grid_scan_min(const Ansatz& ansatz, const Hamiltonian& h,
                        std::size_t resolution) {
  return GridScan(ansatz, h, resolution).min();
}

GridPoint polish_minimum(const Ansatz& ansatz, const Hamiltonian& h,
                         const GridPoint& start, double radius,
                         std::size_t sweeps) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  GridPoint best = start;
  std::vector<double> x = start.theta;
  for (std::size_t sweep = 0; sweep < sweeps; ++sweep) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double centre = x[j];
      auto f = [&](double v) {
        x[j] = v;
        return energy_at(ansatz, h, x);
      };
      double a = centre - radius;
      double b = centre + radius;
      double c = b - inv_phi * (b - a);
      double d = a + inv_phi * (b - a);
      double fc = f(c);
      double fd = f(d);
      while (b - a > 1e-12) {
        if (fc < fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - inv_phi * (b - a);
          fc = f(c);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + inv_phi * (b - a);
          fd = f(d);
        }
      }
      const double cand = 0.5 * (a + b);
      const double fcand = f(cand);
      if (fcand < best.energy) {
        best = {x, fcand};
      } else {
        x[j] = best.theta[j];
      }
    }
  }
  return best;
}

GridPoint grid_scan_min_polished(const Ansatz& ansatz, const Hamiltonian& h,
                                 std::size_t resolution) {
  const GridPoint raw = grid_scan_min(ansatz, h, resolution);
  const double cell = 2.0 * std::numbers::pi / static_cast<double>(resolution);
  return polish_minimum(ansatz, h, raw, 2.0 * cell);
}

}  // namespace snakevqe
