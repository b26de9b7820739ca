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

#include "snakevqe/report.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace snakevqe {

using nlohmann::json;

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (res.ec != std::errc{}) throw std::logic_error("to_chars failed");
  return {buf.data(), res.ptr};
}

namespace {

std::size_t theta_width(const RunReport& report) {
  return static_cast<std::size_t>(report.theta.cols());
}

}  // namespace

void write_results_csv(std::ostream& out, const RunReport& report,
                       const std::vector<double>& exact) {
  if (!exact.empty() && exact.size() != report.members.size()) {
    throw std::invalid_argument("exact energies do not match the member count");
  }
  const std::size_t K = theta_width(report);
  out << "lambda,energy,exact_energy";
  for (std::size_t i = 0; i < K; ++i) out << ",theta_" << i;
  out << ",grad_norm\n";
  for (std::size_t m = 0; m < report.members.size(); ++m) {
    const auto& r = report.members[m];
    out << format_double(r.label) << ',' << format_double(r.value) << ',';
    if (!exact.empty()) out << format_double(exact[m]);
    for (double t : r.theta) out << ',' << format_double(t);
    out << ',' << format_double(r.grad_norm) << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const RunReport& report,
                          const std::vector<double>& labels) {
  const std::size_t K = theta_width(report);
  out << "iteration,member,lambda";
  for (std::size_t i = 0; i < K; ++i) out << ",theta_" << i;
  out << ",value\n";
  for (const auto& snap : report.trajectory) {
    for (Eigen::Index m = 0; m < snap.theta.rows(); ++m) {
      out << snap.iteration << ',' << m << ','
          << format_double(labels.at(static_cast<std::size_t>(m)));
      for (Eigen::Index i = 0; i < snap.theta.cols(); ++i) {
        out << ',' << format_double(snap.theta(m, i));
      }
      out << ',' << format_double(snap.values[static_cast<std::size_t>(m)]) << '\n';
    }
  }
}

json report_to_json(const RunReport& report, bool timing) {
  json members = json::array();
  for (const auto& r : report.members) {
    members.push_back({{"lambda", r.label},
                       {"theta", r.theta},
                       {"value", r.value},
                       {"grad_norm", r.grad_norm},
                       {"residual", r.residual}});
  }
  json out = {{"optimizer", report.optimizer},
              {"iterations", report.iterations},
              {"converged", report.converged},
              {"max_grad_norm", report.max_grad_norm()},
              {"equilibrium_residuals", report.equilibrium_residuals},
              {"members", std::move(members)}};
  if (timing) out["wall_time_s"] = report.wall_time_s;
  return out;
}

json config_to_json(const SnakeConfig& c) {
  return {{"alpha", c.alpha},       {"beta", c.beta},
          {"eta", c.eta},           {"gamma", c.gamma},
          {"max_iters", c.max_iters}, {"grad_tol", c.grad_tol},
          {"boundary", to_string(c.boundary)}, {"seed", c.seed},
          {"snapshot_stride", c.snapshot_stride}};
}

json config_to_json(const GdConfig& c) {
  return {{"eta", c.eta},
          {"max_iters", c.max_iters},
          {"grad_tol", c.grad_tol},
          {"snapshot_stride", c.snapshot_stride}};
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

}  // namespace snakevqe
