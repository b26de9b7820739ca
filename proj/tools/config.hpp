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
#include <filesystem>
#include <map>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "json.hpp"

namespace snakevqe::cli {

/**
 * Named settings for one subcommand. Each value resolves as: command-line
 * flag, then the flat JSON file given with --config, then the built-in
 * default. Config keys are the flag names without the leading dashes.
 */
class Settings {
 public:
  explicit Settings(CLI::App* app);

  void option(const std::string& name, const std::string& help);
  void flag(const std::string& name, const std::string& help);

  /// Reads --config if present; call after parsing.
  void resolve();

  bool has(const std::string& name) const;
  std::string text(const std::string& name, const std::string& fallback) const;
  double real(const std::string& name, double fallback) const;
  std::size_t count(const std::string& name, std::size_t fallback) const;
  std::uint64_t seed(const std::string& name, std::uint64_t fallback) const;
  bool enabled(const std::string& name) const;

  /// --out, then config "out", then $SNAKEVQE_OUT, then `fallback`.
  std::filesystem::path output_dir(const std::string& fallback) const;

 private:
  const nlohmann::json* from_config(const std::string& name) const;
  std::string raw(const std::string& name) const;

  CLI::App* app_;
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> flags_;
  std::set<std::string> known_;
  std::string config_path_;
  nlohmann::json config_ = nlohmann::json::object();
};

}  // namespace snakevqe::cli
