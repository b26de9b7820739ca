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
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "snakevqe/ansatz.hpp"
#include "snakevqe/hamiltonian.hpp"

namespace snakevqe {

/**
 * M objectives over a shared K-dimensional parameter space, indexed by
 * member m and labelled by a real parameter (bond length, t, ...).
 * Implementations are pure and safe to evaluate concurrently.
 */
class ObjectiveFamily {
 public:
  virtual ~ObjectiveFamily() = default;

  virtual std::size_t size() const = 0;  // M
  virtual std::size_t dim() const = 0;   // K
  virtual double value(std::size_t m, std::span<const double> theta) const = 0;
  virtual std::vector<double> gradient(std::size_t m,
                                       std::span<const double> theta) const = 0;
  virtual double label(std::size_t m) const = 0;
  virtual std::string label_name() const { return "lambda"; }

  std::vector<double> labels() const;
};

/// value(m, theta) = energy_at(ansatz, H(lambda_m), theta).
class VQEFamily final : public ObjectiveFamily {
 public:
  VQEFamily(HamiltonianFamily family, Ansatz ansatz);

  std::size_t size() const override { return family_.size(); }
  std::size_t dim() const override { return ansatz_.n_params(); }
  double value(std::size_t m, std::span<const double> theta) const override;
  std::vector<double> gradient(std::size_t m,
                               std::span<const double> theta) const override;
  double label(std::size_t m) const override { return family_.points()[m].lambda; }
  std::string label_name() const override { return family_.parameter_name(); }

  const HamiltonianFamily& family() const { return family_; }
  const Ansatz& ansatz() const { return ansatz_; }

 private:
  HamiltonianFamily family_;
  Ansatz ansatz_;
};

// Styblinski-Tang slice f(x; t) = (x^4 - 16 x^2 + t x) / 2.
double st_value(double x, double t);
double st_gradient(double x, double t);

struct StStationaryPoints {
  double x_global;  // minimum at -x0(t)
  double x_local;   // minimum at +x0(t)
  double x_barrier; // local maximum separating the two basins
};

/// Roots of 4x^3 - 32x + t = 0 for 0 <= t <= 6, refined to 1e-12.
StStationaryPoints st_minima(double t);

enum class StBasin { global, local, tie };
const char* to_string(StBasin basin);

/// Which basin x lies in for f(.; t); t == 0 has equal-depth minima.
StBasin st_basin(double x, double t);

class STFamily final : public ObjectiveFamily {
 public:
  explicit STFamily(std::vector<double> t_grid);
  /// M uniformly spaced t values on [t_min, t_max].
  static STFamily uniform(std::size_t points = 61, double t_min = 0.0,
                          double t_max = 6.0);

  std::size_t size() const override { return t_.size(); }
  std::size_t dim() const override { return 1; }
  double value(std::size_t m, std::span<const double> theta) const override;
  std::vector<double> gradient(std::size_t m,
                               std::span<const double> theta) const override;
  double label(std::size_t m) const override { return t_[m]; }
  std::string label_name() const override { return "t"; }

 private:
  std::vector<double> t_;
};

/// value(m, theta) = |theta - centre_m|^2 / 2; a convex test family.
class QuadraticFamily final : public ObjectiveFamily {
 public:
  explicit QuadraticFamily(Eigen::MatrixXd centres);

  std::size_t size() const override { return static_cast<std::size_t>(centres_.rows()); }
  std::size_t dim() const override { return static_cast<std::size_t>(centres_.cols()); }
  double value(std::size_t m, std::span<const double> theta) const override;
  std::vector<double> gradient(std::size_t m,
                               std::span<const double> theta) const override;
  double label(std::size_t m) const override { return static_cast<double>(m); }

  const Eigen::MatrixXd& centres() const { return centres_; }

 private:
  Eigen::MatrixXd centres_;
};

}  // namespace snakevqe
