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

#include "config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "snakevqe/pauli.hpp"

namespace snakevqe::cli {

using nlohmann::json;

Settings::Settings(CLI::App* app) : app_(app) {
  app_->add_option("--config", config_path_, "flat JSON file of option defaults");
}

void Settings::option(const std::string& name, const std::string& help) {
  known_.insert(name);
  app_->add_option("--" + name, values_[name], help);
}

void Settings::flag(const std::string& name, const std::string& help) {
  known_.insert(name);
  flags_[name] = false;
  app_->add_flag("--" + name, flags_[name], help);
}

void Settings::resolve() {
  if (config_path_.empty()) return;
  std::ifstream in(config_path_);
  if (!in) throw InputError("cannot open config file '" + config_path_ + "'");
  try {
    config_ = json::parse(in);
  } catch (const json::parse_error&) {
    throw InputError("config file '" + config_path_ + "' is not valid JSON");
  }
  if (!config_.is_object()) throw InputError("config file must hold a JSON object");
  for (const auto& [key, value] : config_.items()) {
    if (!known_.contains(key)) {
      throw InputError("unknown config key '" + key + "' for this subcommand");
    }
    if (value.is_object() || value.is_array() || value.is_null()) {
      throw InputError("config key '" + key + "' must be a scalar");
    }
  }
}

bool Settings::has(const std::string& name) const {
  return app_->count("--" + name) > 0 || from_config(name) != nullptr;
}

const json* Settings::from_config(const std::string& name) const {
  const auto it = config_.find(name);
  return it == config_.end() ? nullptr : &*it;
}

std::string Settings::raw(const std::string& name) const {
  if (app_->count("--" + name) > 0) return values_.at(name);
  const json* v = from_config(name);
  if (v->is_string()) return v->get<std::string>();
  if (v->is_number_float()) {
    // Preserve the exact double rather than a re-rounded dump.
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v->get<double>());
    return {buf, res.ptr};
  }
  return v->dump();
}

std::string Settings::text(const std::string& name, const std::string& fallback) const {
  return has(name) ? raw(name) : fallback;
}

double Settings::real(const std::string& name, double fallback) const {
  if (!has(name)) return fallback;
  const std::string s = raw(name);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw InputError("--" + name + " expects a finite number, got '" + s + "'");
  }
  return v;
}

std::uint64_t Settings::seed(const std::string& name, std::uint64_t fallback) const {
  if (!has(name)) return fallback;
  const std::string s = raw(name);
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw InputError("--" + name + " expects a non-negative integer, got '" + s + "'");
  }
  return v;
}

std::size_t Settings::count(const std::string& name, std::size_t fallback) const {
  return static_cast<std::size_t>(seed(name, fallback));
}

bool Settings::enabled(const std::string& name) const {
  if (flags_.at(name)) return true;
  const json* v = from_config(name);
  if (v == nullptr) return false;
  if (!v->is_boolean()) throw InputError("config key '" + name + "' must be true/false");
  return v->get<bool>();
}

std::filesystem::path Settings::output_dir(const std::string& fallback) const {
  if (has("out")) return raw("out");
  if (const char* env = std::getenv("SNAKEVQE_OUT"); env != nullptr && *env != '\0') {
    return env;
  }
  return fallback;
}

}  // namespace snakevqe::cli
