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

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "snakevqe/snake.hpp"

namespace snakevqe {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

/**
 * results.csv: lambda, energy, exact_energy, theta_0..theta_{K-1}, grad_norm.
 * `exact` may be empty, in which case the exact_energy column is left blank.
 */
void write_results_csv(std::ostream& out, const RunReport& report,
                       const std::vector<double>& exact);

/// trajectory.csv: iteration, member, lambda, theta_0..theta_{K-1}, value.
void write_trajectory_csv(std::ostream& out, const RunReport& report,
                          const std::vector<double>& labels);

/// Iterations, convergence flag, per-member results and equilibrium residuals.
/// Wall time is included only when `timing` is set (it breaks byte equality).
nlohmann::json report_to_json(const RunReport& report, bool timing);

nlohmann::json config_to_json(const SnakeConfig& config);
nlohmann::json config_to_json(const GdConfig& config);

/// Writes `text` to `path`, throwing InputError if the file cannot be opened.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace snakevqe
