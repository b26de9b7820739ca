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

#include "snakevqe/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace snakevqe {

using nlohmann::json;

Hamiltonian::Hamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits) {
  if (n_qubits == 0) {
    throw InputError("Hamiltonian must act on at least one qubit");
  }
  std::map<std::string, std::vector<double>> grouped;
  for (const auto& term : terms) {
    if (term.pauli.n_qubits() != n_qubits) {
      throw InputError("term '" + term.pauli.word() + "' does not act on " +
                       std::to_string(n_qubits) + " qubits");
    }
    if (!std::isfinite(term.coeff)) {
      throw InputError("non-finite coefficient for term '" +
                       term.pauli.word() + "'");
    }
    grouped[term.pauli.word()].push_back(term.coeff);
  }
  for (auto& [word, coeffs] : grouped) {
    std::sort(coeffs.begin(), coeffs.end());
    double sum = 0.0;
    for (double c : coeffs) sum += c;
    if (sum != 0.0) terms_.push_back({sum, PauliString(word)});
  }
}

double Hamiltonian::coeff(std::string_view word) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), word,
      [](const PauliTerm& t, std::string_view w) { return t.pauli.word() < w; });
  if (it != terms_.end() && it->pauli.word() == word) return it->coeff;
  return 0.0;
}

Hamiltonian Hamiltonian::scaled(double factor) const {
  std::vector<PauliTerm> out = terms_;
  for (auto& t : out) t.coeff *= factor;
  return Hamiltonian(n_qubits_, std::move(out));
}

Hamiltonian Hamiltonian::shifted(double constant) const {
  std::vector<PauliTerm> out = terms_;
  out.push_back({constant, PauliString::identity(n_qubits_)});
  return Hamiltonian(n_qubits_, std::move(out));
}

HamiltonianFamily::HamiltonianFamily(std::string parameter_name,
                                     std::vector<FamilyPoint> points)
    : parameter_name_(std::move(parameter_name)), points_(std::move(points)) {
  if (points_.empty()) {
    throw InputError("Hamiltonian family has no points");
  }
  for (const auto& p : points_) {
    if (!std::isfinite(p.lambda)) throw InputError("non-finite lambda value");
  }
  std::stable_sort(points_.begin(), points_.end(),
                   [](const FamilyPoint& a, const FamilyPoint& b) {
                     return a.lambda < b.lambda;
                   });
  const std::size_t n = points_.front().hamiltonian.n_qubits();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].hamiltonian.n_qubits() != n) {
      throw InputError("inconsistent qubit counts across family points");
    }
    if (i > 0 && !(points_[i].lambda > points_[i - 1].lambda)) {
      std::ostringstream msg;
      msg << "lambda values must be strictly increasing (duplicate "
          << points_[i].lambda << ")";
      throw InputError(msg.str());
    }
  }
}

std::vector<double> HamiltonianFamily::lambdas() const {
  std::vector<double> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.lambda);
  return out;
}

namespace {

const json& require(const json& obj, const char* key, const char* where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(std::string("missing \"") + key + "\" in " + where);
  }
  return obj.at(key);
}

double require_number(const json& v, const char* what) {
  if (v.is_array() || v.is_object()) {
    throw InputError(std::string(what) +
                     " must be a real number (complex values are not supported)");
  }
  if (!v.is_number()) {
    throw InputError(std::string(what) + " must be a number");
  }
  return v.get<double>();
}

}  // namespace

HamiltonianFamily family_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("family file must be a JSON object");
  const json& nq = require(doc, "n_qubits", "family");
  if (!nq.is_number_integer() || nq.get<long long>() <= 0) {
    throw InputError("\"n_qubits\" must be a positive integer");
  }
  const auto n_qubits = static_cast<std::size_t>(nq.get<long long>());
  std::string name = "lambda";
  if (doc.contains("parameter_name")) {
    if (!doc["parameter_name"].is_string()) {
      throw InputError("\"parameter_name\" must be a string");
    }
    name = doc["parameter_name"].get<std::string>();
  }
  const json& pts = require(doc, "points", "family");
  if (!pts.is_array()) throw InputError("\"points\" must be an array");

  std::vector<FamilyPoint> points;
  for (const auto& pt : pts) {
    const double lambda = require_number(require(pt, "lambda", "point"), "lambda");
    const json& terms = require(pt, "terms", "point");
    if (!terms.is_array()) throw InputError("\"terms\" must be an array");
    std::vector<PauliTerm> parsed;
    for (const auto& t : terms) {
      const json& word = require(t, "pauli", "term");
      if (!word.is_string()) throw InputError("\"pauli\" must be a string");
      const double c = require_number(require(t, "coeff", "term"), "coeff");
      parsed.push_back({c, PauliString::parse(word.get<std::string>(), n_qubits)});
    }
    points.push_back({lambda, Hamiltonian(n_qubits, std::move(parsed))});
  }
  return HamiltonianFamily(std::move(name), std::move(points));
}

json family_to_json(const HamiltonianFamily& family) {
  json pts = json::array();
  for (const auto& p : family.points()) {
    json terms = json::array();
    for (const auto& t : p.hamiltonian.terms()) {
      terms.push_back({{"coeff", t.coeff}, {"pauli", t.pauli.word()}});
    }
    pts.push_back({{"lambda", p.lambda}, {"terms", std::move(terms)}});
  }
  return {{"n_qubits", family.n_qubits()},
          {"parameter_name", family.parameter_name()},
          {"points", std::move(pts)}};
}

HamiltonianFamily load_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open family file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return family_from_json(doc);
}

void save_family(const HamiltonianFamily& family,
                 const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << family_to_json(family).dump(2) << '\n';
}

namespace {

double bump(double x) {
  if (std::abs(x) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - x * x));
}

}  // namespace

std::array<double, 6> synth_h2_coefficients(double lambda) {
  const double w = std::exp(-(lambda / 0.07) * (lambda / 0.07));
  const double diag = -(0.55 + 0.3 * std::exp(-(lambda - 0.25)));
  const double offdiag = -0.2 * diag * (1.0 + 0.5 * bump((lambda - 1.55) / 0.7));
  const std::array<double, 6> h2_like = {
      0.9 * std::exp(-1.2 * lambda) - 0.55,
      0.5 * diag,
      -0.5 * diag,
      0.15 + 0.05 * std::tanh(lambda - 1.5),
      0.5 * offdiag,
      0.5 * offdiag};
  std::array<double, 6> c{};
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = w * kSynthH2Anchor[i] + (1.0 - w) * h2_like[i];
  }
  return c;
}

Hamiltonian h2_structure_hamiltonian(const std::array<double, 6>& coeffs) {
  std::vector<PauliTerm> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    terms.push_back({coeffs[i], PauliString(kH2Words[i])});
  }
  return Hamiltonian(2, std::move(terms));
}

Hamiltonian synth_h2_point(double lambda) {
  return h2_structure_hamiltonian(synth_h2_coefficients(lambda));
}

HamiltonianFamily synth_h2_family(std::size_t points, double lambda_min,
                                  double lambda_max) {
  if (points < 5) throw InputError("synthetic family needs at least 5 points");
  if (!(lambda_min < lambda_max) || !std::isfinite(lambda_min) ||
      !std::isfinite(lambda_max)) {
    throw InputError("synthetic family needs lambda_min < lambda_max");
  }
  std::vector<FamilyPoint> pts;
  pts.reserve(points);
  const double step = (lambda_max - lambda_min) / static_cast<double>(points - 1);
  for (std::size_t m = 0; m < points; ++m) {
    const double lambda = m + 1 == points ? lambda_max : lambda_min + step * m;
    pts.push_back({lambda, synth_h2_point(lambda)});
  }
  return HamiltonianFamily("bond_length_au", std::move(pts));
}

}  // namespace snakevqe
