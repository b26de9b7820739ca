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

#include "snakevqe/snake.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <random>

namespace snakevqe {

Boundary parse_boundary(std::string_view text) {
  if (text == "periodic") return Boundary::periodic;
  if (text == "clamped") return Boundary::clamped;
  throw InputError("boundary must be 'periodic' or 'clamped', got '" +
                   std::string(text) + "'");
}

const char* to_string(Boundary boundary) {
  return boundary == Boundary::periodic ? "periodic" : "clamped";
}

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw InputError(std::string(name) + " must be finite");
}

void require_step(double eta, std::size_t max_iters, double grad_tol) {
  require_finite(eta, "eta");
  require_finite(grad_tol, "grad_tol");
  if (!(eta > 0.0)) throw InputError("eta must be > 0");
  if (grad_tol < 0.0) throw InputError("grad_tol must be >= 0");
  if (max_iters == 0) throw InputError("max_iters must be >= 1");
}

}  // namespace

void SnakeConfig::validate() const {
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  require_finite(gamma, "gamma");
  if (alpha < 0.0) throw InputError("alpha must be >= 0");
  if (beta < 0.0) throw InputError("beta must be >= 0");
  if (gamma < 0.0) throw InputError("gamma must be >= 0");
  require_step(eta, max_iters, grad_tol);
}

void GdConfig::validate() const { require_step(eta, max_iters, grad_tol); }

NonFiniteError::NonFiniteError(std::size_t member, std::size_t iteration)
    : std::runtime_error("non-finite value or gradient at member " +
                         std::to_string(member) + ", iteration " +
                         std::to_string(iteration)),
      member_(member),
      iteration_(iteration) {}

Eigen::MatrixXd build_A(double alpha, double beta, std::size_t M, Boundary boundary) {
  if (M < 5) {
    throw InputError("snake needs at least 5 members, got " + std::to_string(M));
  }
  const auto n = static_cast<Eigen::Index>(M);
  if (boundary == Boundary::periodic) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    const double d0 = 2.0 * alpha + 6.0 * beta;
    const double d1 = -alpha - 4.0 * beta;
    for (Eigen::Index i = 0; i < n; ++i) {
      A(i, i) = d0;
      A(i, (i + 1) % n) = d1;
      A(i, (i + n - 1) % n) = d1;
      A(i, (i + 2) % n) = beta;
      A(i, (i + n - 2) % n) = beta;
    }
    return A;
  }
  Eigen::MatrixXd D1 = Eigen::MatrixXd::Zero(n - 1, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    D1(i, i) = -1.0;
    D1(i, i + 1) = 1.0;
  }
  Eigen::MatrixXd D2 = Eigen::MatrixXd::Zero(n - 2, n);
  for (Eigen::Index i = 0; i + 2 < n; ++i) {
    D2(i, i) = 1.0;
    D2(i, i + 1) = -2.0;
    D2(i, i + 2) = 1.0;
  }
  return alpha * (D1.transpose() * D1) + beta * (D2.transpose() * D2);
}

Theta gradients(const ObjectiveFamily& family, const Theta& theta,
                std::size_t iteration) {
  const auto M = static_cast<Eigen::Index>(family.size());
  const auto K = static_cast<Eigen::Index>(family.dim());
  if (theta.rows() != M || theta.cols() != K) {
    throw std::invalid_argument("Theta is " + std::to_string(theta.rows()) + "x" +
                                std::to_string(theta.cols()) + ", family needs " +
                                std::to_string(M) + "x" + std::to_string(K));
  }
  Theta G(M, K);
  std::vector<double> row(static_cast<std::size_t>(K));
  for (Eigen::Index m = 0; m < M; ++m) {
    for (Eigen::Index k = 0; k < K; ++k) row[k] = theta(m, k);
    const auto g = family.gradient(static_cast<std::size_t>(m), row);
    for (Eigen::Index k = 0; k < K; ++k) {
      if (!std::isfinite(g[k])) throw NonFiniteError(static_cast<std::size_t>(m), iteration);
      G(m, k) = g[k];
    }
  }
  return G;
}

namespace {

// (eta A + I) factorization; an all-zero A bypasses the solve entirely so
// that alpha = beta = 0 is bit-for-bit gradient descent.
class ImplicitSolver {
 public:
  ImplicitSolver(const Eigen::MatrixXd& A, double eta) : trivial_(A.isZero(0.0)) {
    if (!trivial_) {
      const auto n = A.rows();
      llt_.compute(eta * A + Eigen::MatrixXd::Identity(n, n));
      if (llt_.info() != Eigen::Success) {
        throw std::runtime_error("(eta*A + I) is not positive definite");
      }
    }
  }

  Theta solve(const Theta& rhs) const { return trivial_ ? rhs : Theta(llt_.solve(rhs)); }

 private:
  bool trivial_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

std::vector<double> member_values(const ObjectiveFamily& family, const Theta& theta,
                                  std::size_t iteration) {
  std::vector<double> values(family.size());
  std::vector<double> row(family.dim());
  for (std::size_t m = 0; m < values.size(); ++m) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      row[k] = theta(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
    }
    values[m] = family.value(m, row);
    if (!std::isfinite(values[m])) throw NonFiniteError(m, iteration);
  }
  return values;
}

double max_inf_norm(const Theta& G) {
  return G.size() == 0 ? 0.0 : G.cwiseAbs().maxCoeff();
}

void check_init(const ObjectiveFamily& family, const Theta& init) {
  if (init.rows() != static_cast<Eigen::Index>(family.size()) ||
      init.cols() != static_cast<Eigen::Index>(family.dim())) {
    throw InputError("initial Theta shape does not match the family");
  }
  if (!init.allFinite()) throw InputError("initial Theta contains non-finite values");
}

// Shared driver: `step` maps (Theta, G, k) to the next Theta; `last_A`
// reports the stiffness used by step k (for the equilibrium residual).
template <typename Step, typename LastA>
RunReport run(const ObjectiveFamily& family, const Theta& init, std::size_t max_iters,
              double grad_tol, std::size_t stride, Step&& step, LastA&& last_A) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  Theta theta = init;
  report.trajectory.push_back({0, theta, member_values(family, theta, 0)});

  std::size_t k = 0;
  Theta G = gradients(family, theta, 0);
  while (true) {
    if (max_inf_norm(G) < grad_tol) {
      report.converged = true;
      break;
    }
    if (k == max_iters) break;
    ++k;
    theta = step(theta, G, k);
    G = gradients(family, theta, k);
    if (stride != 0 && k % stride == 0 && k != max_iters) {
      report.trajectory.push_back({k, theta, member_values(family, theta, k)});
    }
  }
  report.iterations = k;
  const auto values = member_values(family, theta, k);
  if (report.trajectory.back().iteration != k) {
    report.trajectory.push_back({k, theta, values});
  }

  const Eigen::MatrixXd A = last_A(k);
  const Theta R = A * theta + G;
  report.equilibrium_residuals.resize(static_cast<std::size_t>(R.cols()));
  for (Eigen::Index i = 0; i < R.cols(); ++i) {
    report.equilibrium_residuals[static_cast<std::size_t>(i)] = R.col(i).norm();
  }
  for (std::size_t m = 0; m < family.size(); ++m) {
    const auto row = static_cast<Eigen::Index>(m);
    MemberResult r;
    r.label = family.label(m);
    r.theta.resize(family.dim());
    for (std::size_t i = 0; i < family.dim(); ++i) {
      r.theta[i] = theta(row, static_cast<Eigen::Index>(i));
    }
    r.value = values[m];
    r.grad_norm = G.row(row).cwiseAbs().maxCoeff();
    r.residual = R.row(row).cwiseAbs().maxCoeff();
    report.members.push_back(std::move(r));
  }
  report.theta = std::move(theta);
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace

Theta snake_step(const Theta& theta, const ObjectiveFamily& family,
                 const Eigen::MatrixXd& A, double eta) {
  if (A.rows() != theta.rows() || A.cols() != theta.rows()) {
    throw std::invalid_argument("stiffness matrix does not match Theta");
  }
  const Theta G = gradients(family, theta);
  return ImplicitSolver(A, eta).solve(theta - eta * G);
}

Theta gd_step(const Theta& theta, const ObjectiveFamily& family, double eta) {
  return theta - eta * gradients(family, theta);
}

double RunReport::max_grad_norm() const {
  double out = 0.0;
  for (const auto& m : members) out = std::max(out, m.grad_norm);
  return out;
}

void require_uniform_grid(const ObjectiveFamily& family) {
  const auto labels = family.labels();
  if (labels.size() < 2) return;
  const double span = labels.back() - labels.front();
  const double step = span / static_cast<double>(labels.size() - 1);
  for (std::size_t m = 1; m < labels.size(); ++m) {
    if (std::abs((labels[m] - labels[m - 1]) - step) > 1e-6 * std::abs(step)) {
      throw InputError("snake optimizer needs a uniform lambda grid; spacing at point " +
                       std::to_string(m) + " differs");
    }
  }
}

RunReport snake_run(const ObjectiveFamily& family, const SnakeConfig& config,
                    const Theta& init) {
  config.validate();
  check_init(family, init);
  require_uniform_grid(family);
  const Eigen::MatrixXd A0 = build_A(config.alpha, config.beta, family.size(),
                                     config.boundary);
  // Step k uses A0 * exp(-(k - 1) gamma): the first step sees the full A0.
  auto scale_at = [&](std::size_t k) {
    return config.gamma == 0.0 || k <= 1
               ? 1.0
               : std::exp(-static_cast<double>(k - 1) * config.gamma);
  };
  std::optional<ImplicitSolver> fixed;
  if (config.gamma == 0.0) fixed.emplace(A0, config.eta);

  auto step = [&](const Theta& theta, const Theta& G, std::size_t k) {
    const Theta rhs = theta - config.eta * G;
    if (fixed) return fixed->solve(rhs);
    return ImplicitSolver(scale_at(k) * A0, config.eta).solve(rhs);
  };
  auto last_A = [&](std::size_t k) -> Eigen::MatrixXd {
    return scale_at(std::max<std::size_t>(k, 1)) * A0;
  };
  RunReport report = run(family, init, config.max_iters, config.grad_tol,
                         config.snapshot_stride, step, last_A);
  report.optimizer = "snake";
  return report;
}

RunReport snake_run(const ObjectiveFamily& family, const SnakeConfig& config,
                    double init_lo, double init_hi) {
  return snake_run(family, config,
                   random_init(family.size(), family.dim(), init_lo, init_hi, config.seed));
}

RunReport gd_run(const ObjectiveFamily& family, const GdConfig& config,
                 const Theta& init) {
  config.validate();
  check_init(family, init);
  const auto M = static_cast<Eigen::Index>(family.size());
  auto step = [&](const Theta& theta, const Theta& G, std::size_t) {
    return Theta(theta - config.eta * G);
  };
  auto last_A = [&](std::size_t) -> Eigen::MatrixXd {
    return Eigen::MatrixXd::Zero(M, M);
  };
  RunReport report = run(family, init, config.max_iters, config.grad_tol,
                         config.snapshot_stride, step, last_A);
  report.optimizer = "gd";
  return report;
}

Theta random_init(std::size_t M, std::size_t K, double lo, double hi,
                  std::uint64_t seed) {
  if (!(hi > lo)) throw InputError("random init needs lo < hi");
  // Explicit 53-bit conversion; std::uniform_real_distribution is not
  // specified bit-exactly across standard libraries.
  std::mt19937_64 rng(seed);
  Theta out(static_cast<Eigen::Index>(M), static_cast<Eigen::Index>(K));
  for (Eigen::Index m = 0; m < out.rows(); ++m) {
    for (Eigen::Index k = 0; k < out.cols(); ++k) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      out(m, k) = lo + (hi - lo) * u;
    }
  }
  return out;
}

double internal_energy(const Theta& theta, double alpha, double beta,
                       Boundary boundary) {
  const Eigen::Index M = theta.rows();
  const bool wrap = boundary == Boundary::periodic;
  double e1 = 0.0;
  double e2 = 0.0;
  for (Eigen::Index m = 0; m < M; ++m) {
    if (wrap || m + 1 < M) {
      e1 += (theta.row((m + 1) % M) - theta.row(m)).squaredNorm();
    }
    if (wrap || m + 2 < M) {
      e2 += (theta.row(m) - 2.0 * theta.row((m + 1) % M) + theta.row((m + 2) % M))
                .squaredNorm();
    }
  }
  return alpha * e1 + beta * e2;
}

}  // namespace snakevqe
