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

#include "snakevqe/objective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace snakevqe {

std::vector<double> ObjectiveFamily::labels() const {
  std::vector<double> out(size());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = label(m);
  return out;
}

VQEFamily::VQEFamily(HamiltonianFamily family, Ansatz ansatz)
    : family_(std::move(family)), ansatz_(std::move(ansatz)) {
  if (family_.n_qubits() != ansatz_.n_qubits()) {
    throw InputError("ansatz acts on " + std::to_string(ansatz_.n_qubits()) +
                     " qubits but the family has " +
                     std::to_string(family_.n_qubits()));
  }
}

double VQEFamily::value(std::size_t m, std::span<const double> theta) const {
  return energy_at(ansatz_, family_.points().at(m).hamiltonian, theta);
}

std::vector<double> VQEFamily::gradient(std::size_t m,
                                        std::span<const double> theta) const {
  return snakevqe::gradient(ansatz_, family_.points().at(m).hamiltonian, theta);
}

double st_value(double x, double t) {
  return 0.5 * (x * x * x * x - 16.0 * x * x + t * x);
}

double st_gradient(double x, double t) {
  return 0.5 * (4.0 * x * x * x - 32.0 * x + t);
}

StStationaryPoints st_minima(double t) {
  if (!(t >= 0.0 && t <= 6.0)) {
    throw std::invalid_argument("st_minima is defined for 0 <= t <= 6");
  }
  // x^3 - 8x + t/4 = 0 has three real roots here; trigonometric form, then Newton.
  const double p = -8.0;
  const double q = t / 4.0;
  const double amp = 2.0 * std::sqrt(-p / 3.0);
  const double phi = std::acos((3.0 * q / (2.0 * p)) * std::sqrt(-3.0 / p)) / 3.0;
  double roots[3];
  for (int k = 0; k < 3; ++k) {
    roots[k] = amp * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
  }
  for (double& x : roots) {
    for (int it = 0; it < 50; ++it) {
      const double f = x * x * x - 8.0 * x + q;
      const double df = 3.0 * x * x - 8.0;
      const double step = f / df;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
  }
  std::sort(std::begin(roots), std::end(roots));
  return {roots[0], roots[2], roots[1]};
}

const char* to_string(StBasin basin) {
  switch (basin) {
    case StBasin::global:
      return "global";
    case StBasin::local:
      return "local";
    case StBasin::tie:
      return "tie";
  }
  return "?";
}

StBasin st_basin(double x, double t) {
  if (t == 0.0) return StBasin::tie;
  return x < st_minima(t).x_barrier ? StBasin::global : StBasin::local;
}

STFamily::STFamily(std::vector<double> t_grid) : t_(std::move(t_grid)) {
  if (t_.empty()) throw InputError("ST family needs at least one t value");
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (!(t_[i] >= 0.0 && t_[i] <= 6.0)) {
      throw InputError("ST family t values must lie in [0, 6]");
    }
    if (i > 0 && !(t_[i] > t_[i - 1])) {
      throw InputError("ST family t values must be strictly increasing");
    }
  }
}

STFamily STFamily::uniform(std::size_t points, double t_min, double t_max) {
  if (points < 2) throw InputError("ST family needs at least 2 points");
  std::vector<double> t(points);
  const double step = (t_max - t_min) / static_cast<double>(points - 1);
  for (std::size_t m = 0; m < points; ++m) {
    t[m] = m + 1 == points ? t_max : t_min + step * static_cast<double>(m);
  }
  return STFamily(std::move(t));
}

double STFamily::value(std::size_t m, std::span<const double> theta) const {
  return st_value(theta[0], t_.at(m));
}

std::vector<double> STFamily::gradient(std::size_t m,
                                       std::span<const double> theta) const {
  return {st_gradient(theta[0], t_.at(m))};
}

QuadraticFamily::QuadraticFamily(Eigen::MatrixXd centres)
    : centres_(std::move(centres)) {
  if (centres_.rows() == 0 || centres_.cols() == 0) {
    throw InputError("quadratic family needs a non-empty centre matrix");
  }
}

double QuadraticFamily::value(std::size_t m, std::span<const double> theta) const {
  double v = 0.0;
  for (Eigen::Index k = 0; k < centres_.cols(); ++k) {
    const double d = theta[k] - centres_(static_cast<Eigen::Index>(m), k);
    v += 0.5 * d * d;
  }
  return v;
}

std::vector<double> QuadraticFamily::gradient(std::size_t m,
                                              std::span<const double> theta) const {
  std::vector<double> g(dim());
  for (Eigen::Index k = 0; k < centres_.cols(); ++k) {
    g[k] = theta[k] - centres_(static_cast<Eigen::Index>(m), k);
  }
  return g;
}

}  // namespace snakevqe
