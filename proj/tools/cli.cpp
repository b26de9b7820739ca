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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "snakevqe/ansatz.hpp"
#include "snakevqe/hamiltonian.hpp"
#include "snakevqe/objective.hpp"
#include "snakevqe/oracle.hpp"
#include "snakevqe/report.hpp"
#include "snakevqe/snake.hpp"
#include "svg.hpp"

namespace snakevqe::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::size_t kDefaultStride = 50;

// ---------------------------------------------------------------------------
// Shared option groups

void add_family_options(Settings& s) {
  s.option("family", "Hamiltonian family JSON file");
  s.option("synthetic", "built-in synthetic family (h2)");
  s.option("points", "synthetic family size");
  s.option("lambda-min", "synthetic family first lambda");
  s.option("lambda-max", "synthetic family last lambda");
}

void add_ansatz_options(Settings& s) {
  s.option("ansatz", "builtin ansatz name or ansatz JSON path");
  s.option("reference", "override the ansatz reference bitstring");
}

void add_optimizer_options(Settings& s) {
  s.option("alpha", "snake stretch stiffness");
  s.option("beta", "snake bend stiffness");
  s.option("eta", "step size");
  s.option("gamma", "stiffness decay rate");
  s.option("boundary", "periodic or clamped");
  s.option("max-iters", "iteration budget");
  s.option("grad-tol", "per-member gradient infinity-norm tolerance");
  s.option("seed", "random initialization seed");
  s.option("snapshot-stride", "trajectory snapshot stride (0: first and last only)");
}

void add_output_options(Settings& s, bool plots) {
  s.option("out", "output directory");
  s.flag("timing", "include wall time in JSON reports");
  if (plots) s.flag("plot", "also write SVG plots");
}

struct FamilySource {
  HamiltonianFamily family;
  std::string description;
};

FamilySource load_input_family(const Settings& s, bool default_synthetic) {
  const bool has_file = s.has("family");
  const bool has_synth = s.has("synthetic");
  if (has_file && has_synth) throw InputError("give either --family or --synthetic, not both");
  if (has_file) {
    const std::string path = s.text("family", "");
    return {load_family(path), path};
  }
  if (!has_synth && !default_synthetic) {
    throw InputError("a family is required: --family PATH or --synthetic h2");
  }
  const std::string kind = s.text("synthetic", "h2");
  if (kind != "h2") throw InputError("unknown synthetic family '" + kind + "' (expected h2)");
  const std::size_t points = s.count("points", 54);
  const double lo = s.real("lambda-min", 0.25);
  const double hi = s.real("lambda-max", 2.85);
  return {synth_h2_family(points, lo, hi), "synthetic:h2"};
}

std::string default_ansatz_for(std::size_t n_qubits) {
  switch (n_qubits) {
    case 2:
      return "h2_ucc";
    case 3:
      return "lih_ucc";
    case 4:
      return "hehp_ucc";
    default:
      throw InputError("no default ansatz for " + std::to_string(n_qubits) +
                       " qubits; pass --ansatz");
  }
}

Ansatz load_input_ansatz(const Settings& s, std::size_t n_qubits,
                         const std::string& fallback) {
  const std::string name = s.text("ansatz", fallback.empty() ? default_ansatz_for(n_qubits) : fallback);
  Ansatz a = resolve_ansatz(name);
  if (s.has("reference")) a = a.with_reference(s.text("reference", ""));
  if (a.n_qubits() != n_qubits) {
    throw InputError("ansatz '" + name + "' acts on " + std::to_string(a.n_qubits()) +
                     " qubits but the family has " + std::to_string(n_qubits));
  }
  return a;
}

SnakeConfig snake_config(const Settings& s, const SnakeConfig& defaults) {
  SnakeConfig c;
  c.alpha = s.real("alpha", defaults.alpha);
  c.beta = s.real("beta", defaults.beta);
  c.eta = s.real("eta", defaults.eta);
  c.gamma = s.real("gamma", defaults.gamma);
  c.boundary = parse_boundary(s.text("boundary", to_string(defaults.boundary)));
  c.max_iters = s.count("max-iters", defaults.max_iters);
  c.grad_tol = s.real("grad-tol", defaults.grad_tol);
  c.seed = s.seed("seed", defaults.seed);
  c.snapshot_stride = s.count("snapshot-stride", defaults.snapshot_stride);
  c.validate();
  return c;
}

GdConfig gd_config(const SnakeConfig& c) {
  GdConfig g{c.eta, c.max_iters, c.grad_tol, c.snapshot_stride};
  g.validate();
  return g;
}

fs::path prepare_out(const Settings& s) {
  fs::path dir = s.output_dir("snakevqe_out");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory '" + dir.string() + "'");
  return dir;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<double> exact_energies(const HamiltonianFamily& family) {
  std::vector<double> out;
  if (family.n_qubits() > kMaxOracleQubits) return out;
  for (const auto& p : family.points()) out.push_back(ground_energy(p.hamiltonian));
  return out;
}

// ---------------------------------------------------------------------------
// CSV reading and plots (shared by --plot and the plot subcommand)

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;  // NaN for blank cells

  std::size_t column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw InputError("missing column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  }
  std::vector<double> values(std::size_t col) const {
    std::vector<double> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.push_back(r[col]);
    return v;
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// Cells that are not numbers (basin labels) are read as NaN; `labels`
// collects them per column.
Table read_table(const fs::path& path, std::map<std::size_t, std::vector<std::string>>* labels = nullptr) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  Table t;
  std::string line;
  if (!std::getline(in, line) || line.empty()) {
    throw InputError("'" + path.string() + "' is empty");
  }
  t.header = split(line);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != t.header.size()) {
      throw InputError("'" + path.string() + "' line " + std::to_string(lineno) +
                       " has " + std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(t.header.size()));
    }
    std::vector<double> row(cells.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto& c = cells[i];
      if (c.empty()) continue;
      double v = 0.0;
      const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
      if (res.ec == std::errc{} && res.ptr == c.data() + c.size()) {
        row[i] = v;
      } else if (labels != nullptr) {
        (*labels)[i].push_back(c);
      } else {
        throw InputError("'" + path.string() + "' line " + std::to_string(lineno) +
                         ": '" + c + "' is not a number");
      }
    }
    t.rows.push_back(std::move(row));
  }
  if (t.rows.empty()) throw InputError("'" + path.string() + "' has no data rows");
  return t;
}

bool starts_with(const std::vector<std::string>& header,
                 std::initializer_list<const char*> prefix) {
  if (header.size() < prefix.size()) return false;
  std::size_t i = 0;
  for (const char* p : prefix) {
    if (header[i++] != p) return false;
  }
  return true;
}

std::string plot_results(const Table& t) {
  const auto x = t.values(t.column("lambda"));
  std::vector<Series> s{{"energy", x, t.values(t.column("energy")), true}};
  const auto exact = t.values(t.column("exact_energy"));
  if (std::any_of(exact.begin(), exact.end(), [](double v) { return std::isfinite(v); })) {
    s.push_back({"exact", x, exact, false, true});
  }
  return line_plot("Energy vs lambda", "lambda", "energy", s);
}

std::string plot_trajectory(const Table& t) {
  const std::size_t it_col = t.column("iteration");
  const std::size_t lam_col = t.column("lambda");
  std::vector<std::size_t> theta_cols;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i].rfind("theta_", 0) == 0) theta_cols.push_back(i);
  }
  std::vector<Series> series;
  std::map<double, std::size_t> first_row;  // iteration -> series offset
  for (const auto& row : t.rows) {
    auto [it, fresh] = first_row.try_emplace(row[it_col], series.size());
    if (fresh) {
      for (std::size_t c : theta_cols) {
        std::ostringstream name;
        name << t.header[c] << " @" << static_cast<long long>(row[it_col]);
        series.push_back({name.str(), {}, {}});
      }
    }
    for (std::size_t j = 0; j < theta_cols.size(); ++j) {
      series[it->second + j].x.push_back(row[lam_col]);
      series[it->second + j].y.push_back(row[theta_cols[j]]);
    }
  }
  return line_plot("Parameter curves per snapshot", "lambda", "theta", series);
}

std::string plot_st(const Table& t) {
  const auto x = t.values(t.column("t"));
  return line_plot("Final x per t", "t", "x",
                   {{"snake", x, t.values(t.column("snake_x")), true},
                    {"gd", x, t.values(t.column("gd_x")), true},
                    {"global min", x, t.values(t.column("x_global")), false, true},
                    {"local min", x, t.values(t.column("x_local")), false, true}});
}

std::string plot_nonconvex(const Table& t) {
  const auto x = t.values(t.column("lambda"));
  return line_plot("theta_2 vs lambda", "lambda", "theta_2",
                   {{"snake", x, t.values(t.column("snake_theta_2")), true},
                    {"gd", x, t.values(t.column("gd_theta_2")), true}});
}

/// Plot for a CSV written by this tool, chosen by its header.
std::string plot_file(const fs::path& path) {
  std::map<std::size_t, std::vector<std::string>> labels;
  const Table t = read_table(path, &labels);
  std::string svg;
  if (starts_with(t.header, {"lambda", "energy", "exact_energy"})) {
    svg = plot_results(t);
  } else if (starts_with(t.header, {"iteration", "member", "lambda"})) {
    svg = plot_trajectory(t);
  } else if (starts_with(t.header, {"t", "init_x", "snake_x"})) {
    svg = plot_st(t);
  } else if (starts_with(t.header, {"lambda", "snake_theta_1", "snake_theta_2"})) {
    svg = plot_nonconvex(t);
  } else {
    throw InputError("'" + path.string() + "' is not a snakevqe result file");
  }
  // Text cells are only legal in the ST basin columns.
  for (const auto& [col, cells] : labels) {
    const auto& name = t.header[col];
    if (name != "snake_basin" && name != "gd_basin") {
      throw InputError("'" + path.string() + "' column '" + name + "' is not numeric");
    }
  }
  return svg;
}

void write_plot(const fs::path& csv, const fs::path& dir) {
  write_text_file(dir / csv.filename().replace_extension(".svg"), plot_file(csv));
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_solve(const Settings& s, std::ostream& out) {
  const auto src = load_input_family(s, false);
  const Ansatz ansatz = load_input_ansatz(s, src.family.n_qubits(), "");
  const VQEFamily family(src.family, ansatz);
  const std::string optimizer = s.text("optimizer", "snake");
  if (optimizer != "snake" && optimizer != "gd") {
    throw InputError("--optimizer must be snake or gd, got '" + optimizer + "'");
  }
  SnakeConfig defaults;
  defaults.snapshot_stride = kDefaultStride;
  const SnakeConfig cfg = snake_config(s, defaults);
  const Theta init = random_init(family.size(), family.dim(), -std::numbers::pi,
                                 std::numbers::pi, cfg.seed);
  const fs::path dir = prepare_out(s);

  RunReport report;
  json cfg_json;
  if (optimizer == "snake") {
    report = snake_run(family, cfg, init);
    cfg_json = config_to_json(cfg);
  } else {
    report = gd_run(family, gd_config(cfg), init);
    cfg_json = config_to_json(gd_config(cfg));
    cfg_json["seed"] = cfg.seed;
  }
  const auto exact = exact_energies(src.family);

  std::ostringstream results, trajectory;
  write_results_csv(results, report, exact);
  write_trajectory_csv(trajectory, report, family.labels());
  json doc = {{"command", "solve"},
              {"family", {{"source", src.description},
                          {"points", family.size()},
                          {"n_qubits", src.family.n_qubits()},
                          {"parameter_name", src.family.parameter_name()}}},
              {"ansatz", ansatz_to_json(ansatz)},
              {"config", cfg_json},
              {"run", report_to_json(report, s.enabled("timing"))}};
  if (!exact.empty()) {
    double worst = 0.0;
    for (std::size_t m = 0; m < exact.size(); ++m) {
      worst = std::max(worst, std::abs(report.members[m].value - exact[m]));
    }
    doc["max_abs_energy_error"] = worst;
  }
  write_text_file(dir / "results.csv", results.str());
  write_text_file(dir / "trajectory.csv", trajectory.str());
  write_text_file(dir / "report.json", dump(doc));
  if (s.enabled("plot")) {
    write_plot(dir / "results.csv", dir);
    write_plot(dir / "trajectory.csv", dir);
  }

  out << optimizer << ": " << family.size() << " members, " << report.iterations
      << " iterations, " << (report.converged ? "converged" : "iteration budget exhausted")
      << ", max grad norm " << format_double(report.max_grad_norm()) << "\n";
  if (doc.contains("max_abs_energy_error")) {
    out << "max |energy - exact_energy| = "
        << format_double(doc["max_abs_energy_error"].get<double>()) << "\n";
  }
  out << "wrote " << (dir / "results.csv").string() << "\n";
  return report.converged ? kOk : kBudgetExhausted;
}

int cmd_benchmark_st(const Settings& s, std::ostream& out) {
  const STFamily family = STFamily::uniform(s.count("points", 61));
  SnakeConfig defaults;
  defaults.alpha = 100.0;
  defaults.beta = 3.0;
  defaults.eta = 0.01;
  defaults.snapshot_stride = kDefaultStride;
  const SnakeConfig cfg = snake_config(s, defaults);
  const Theta init = random_init(family.size(), 1, -4.0, 4.0, cfg.seed);
  const fs::path dir = prepare_out(s);

  const RunReport snake = snake_run(family, cfg, init);
  const RunReport gd = gd_run(family, gd_config(cfg), init);

  std::ostringstream csv;
  csv << "t,init_x,snake_x,snake_basin,gd_x,gd_basin,x_global,x_local\n";
  std::size_t counted = 0, snake_global = 0, gd_global = 0, init_global = 0;
  for (std::size_t m = 0; m < family.size(); ++m) {
    const double t = family.label(m);
    const auto row = static_cast<Eigen::Index>(m);
    const auto mins = st_minima(t);
    const StBasin sb = st_basin(snake.theta(row, 0), t);
    const StBasin gb = st_basin(gd.theta(row, 0), t);
    csv << format_double(t) << ',' << format_double(init(row, 0)) << ','
        << format_double(snake.theta(row, 0)) << ',' << to_string(sb) << ','
        << format_double(gd.theta(row, 0)) << ',' << to_string(gb) << ','
        << format_double(mins.x_global) << ',' << format_double(mins.x_local) << '\n';
    if (sb == StBasin::tie) continue;
    ++counted;
    snake_global += sb == StBasin::global;
    gd_global += gb == StBasin::global;
    init_global += init(row, 0) < 0.0;
  }
  auto frac = [&](std::size_t n) {
    return counted == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(counted);
  };
  const bool timing = s.enabled("timing");
  json summary = {{"command", "benchmark-st"},
                  {"points", family.size()},
                  {"config", config_to_json(cfg)},
                  {"members_counted", counted},
                  {"snake_global", snake_global},
                  {"snake_global_fraction", frac(snake_global)},
                  {"gd_global", gd_global},
                  {"gd_global_fraction", frac(gd_global)},
                  {"init_negative", init_global},
                  {"init_negative_fraction", frac(init_global)},
                  {"snake", report_to_json(snake, timing)},
                  {"gd", report_to_json(gd, timing)}};
  summary["snake"].erase("members");
  summary["gd"].erase("members");

  std::ostringstream traj_snake, traj_gd;
  write_trajectory_csv(traj_snake, snake, family.labels());
  write_trajectory_csv(traj_gd, gd, family.labels());
  write_text_file(dir / "st_results.csv", csv.str());
  write_text_file(dir / "summary.json", dump(summary));
  write_text_file(dir / "trajectory_snake.csv", traj_snake.str());
  write_text_file(dir / "trajectory_gd.csv", traj_gd.str());
  if (s.enabled("plot")) {
    write_plot(dir / "st_results.csv", dir);
    write_plot(dir / "trajectory_snake.csv", dir);
    write_plot(dir / "trajectory_gd.csv", dir);
  }

  out << "snake global-basin fraction " << format_double(frac(snake_global)) << " ("
      << snake_global << "/" << counted << ")\n"
      << "gd global-basin fraction " << format_double(frac(gd_global)) << " ("
      << gd_global << "/" << counted << "), inits on the global side "
      << format_double(frac(init_global)) << "\n";
  return kOk;
}

int cmd_nonconvex_h2(const Settings& s, std::ostream& out) {
  const auto src = load_input_family(s, true);
  const Ansatz ansatz = load_input_ansatz(s, src.family.n_qubits(), "h2_nonconvex");
  if (ansatz.n_params() != 2) {
    throw InputError("nonconvex-h2 needs a two-parameter ansatz");
  }
  const VQEFamily family(src.family, ansatz);
  SnakeConfig defaults;
  defaults.alpha = 10.0;
  defaults.beta = 3.0;
  defaults.eta = 0.1;
  defaults.gamma = 0.005;
  defaults.max_iters = 3000;
  defaults.snapshot_stride = kDefaultStride;
  const SnakeConfig cfg = snake_config(s, defaults);
  const Theta init = random_init(family.size(), 2, -std::numbers::pi,
                                 std::numbers::pi, cfg.seed);
  const fs::path dir = prepare_out(s);

  const RunReport snake = snake_run(family, cfg, init);
  const RunReport gd = gd_run(family, gd_config(cfg), init);
  const auto exact = exact_energies(src.family);

  std::ostringstream csv;
  csv << "lambda,snake_theta_1,snake_theta_2,snake_energy,gd_theta_1,gd_theta_2,gd_energy,"
         "exact_energy\n";
  double snake_max = 0.0, gd_max = 0.0;
  std::size_t gd_trapped = 0;
  for (std::size_t m = 0; m < family.size(); ++m) {
    const auto& a = snake.members[m];
    const auto& b = gd.members[m];
    csv << format_double(a.label) << ',' << format_double(a.theta[0]) << ','
        << format_double(a.theta[1]) << ',' << format_double(a.value) << ','
        << format_double(b.theta[0]) << ',' << format_double(b.theta[1]) << ','
        << format_double(b.value) << ',' << (exact.empty() ? "" : format_double(exact[m]))
        << '\n';
    snake_max = std::max(snake_max, std::abs(a.theta[1]));
    gd_max = std::max(gd_max, std::abs(b.theta[1]));
    gd_trapped += std::abs(b.theta[1]) > 0.5;
  }
  const bool timing = s.enabled("timing");
  json summary = {{"command", "nonconvex-h2"},
                  {"family", src.description},
                  {"ansatz", ansatz_to_json(ansatz)},
                  {"config", config_to_json(cfg)},
                  {"snake_max_abs_theta_2", snake_max},
                  {"gd_max_abs_theta_2", gd_max},
                  {"gd_members_abs_theta_2_above_0.5", gd_trapped},
                  {"snake", report_to_json(snake, timing)},
                  {"gd", report_to_json(gd, timing)}};
  summary["snake"].erase("members");
  summary["gd"].erase("members");

  std::ostringstream traj_snake, traj_gd;
  write_trajectory_csv(traj_snake, snake, family.labels());
  write_trajectory_csv(traj_gd, gd, family.labels());
  write_text_file(dir / "nonconvex.csv", csv.str());
  write_text_file(dir / "summary.json", dump(summary));
  write_text_file(dir / "trajectory_snake.csv", traj_snake.str());
  write_text_file(dir / "trajectory_gd.csv", traj_gd.str());
  if (s.enabled("plot")) {
    write_plot(dir / "nonconvex.csv", dir);
    write_plot(dir / "trajectory_snake.csv", dir);
  }

  out << "snake max |theta_2| " << format_double(snake_max) << "\n"
      << "gd max |theta_2| " << format_double(gd_max) << " (" << gd_trapped << "/"
      << family.size() << " members above 0.5)\n";
  return kOk;
}

int cmd_oracle(const Settings& s, std::ostream& out) {
  const auto src = load_input_family(s, false);
  if (src.family.n_qubits() > kMaxOracleQubits) {
    throw InputError("oracle supports at most " + std::to_string(kMaxOracleQubits) +
                     " qubits, family has " + std::to_string(src.family.n_qubits()));
  }
  const fs::path dir = prepare_out(s);
  std::ostringstream csv;
  csv << "lambda,exact_energy\n";
  for (const auto& p : src.family.points()) {
    csv << format_double(p.lambda) << ',' << format_double(ground_energy(p.hamiltonian))
        << '\n';
  }
  write_text_file(dir / "oracle.csv", csv.str());
  out << "wrote " << src.family.size() << " exact energies to "
      << (dir / "oracle.csv").string() << "\n";
  return kOk;
}

int cmd_plot(const Settings& s, const std::vector<std::string>& inputs, std::ostream& out) {
  if (inputs.empty()) throw InputError("plot needs at least one CSV file");
  for (const auto& in : inputs) {
    const fs::path csv(in);
    if (!fs::exists(csv)) throw InputError("'" + in + "' does not exist");
    const fs::path dir = s.has("out") ? prepare_out(s)
                                      : (csv.has_parent_path() ? csv.parent_path() : ".");
    write_plot(csv, dir);
    out << "wrote " << (dir / csv.filename().replace_extension(".svg")).string() << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collective VQE with the snake optimizer", "snakevqe"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "optimize a Hamiltonian family");
  Settings solve_s(solve);
  add_family_options(solve_s);
  add_ansatz_options(solve_s);
  solve_s.option("optimizer", "snake or gd");
  add_optimizer_options(solve_s);
  add_output_options(solve_s, true);

  auto* st = app.add_subcommand("benchmark-st", "snake vs GD on the Styblinski-Tang family");
  Settings st_s(st);
  st_s.option("points", "number of t values on [0, 6]");
  add_optimizer_options(st_s);
  add_output_options(st_s, true);

  auto* nc = app.add_subcommand("nonconvex-h2", "snake vs GD with the nonconvex ansatz");
  Settings nc_s(nc);
  add_family_options(nc_s);
  add_ansatz_options(nc_s);
  add_optimizer_options(nc_s);
  add_output_options(nc_s, true);

  auto* oracle = app.add_subcommand("oracle", "exact ground energies of a family");
  Settings oracle_s(oracle);
  add_family_options(oracle_s);
  oracle_s.option("out", "output directory");

  auto* plot = app.add_subcommand("plot", "render SVG plots from result CSV files");
  Settings plot_s(plot);
  std::vector<std::string> plot_inputs;
  plot->add_option("inputs", plot_inputs, "result CSV files");
  plot_s.option("out", "output directory (default: next to each input)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (solve->parsed()) {
      solve_s.resolve();
      return cmd_solve(solve_s, out);
    }
    if (st->parsed()) {
      st_s.resolve();
      return cmd_benchmark_st(st_s, out);
    }
    if (nc->parsed()) {
      nc_s.resolve();
      return cmd_nonconvex_h2(nc_s, out);
    }
    if (oracle->parsed()) {
      oracle_s.resolve();
      return cmd_oracle(oracle_s, out);
    }
    plot_s.resolve();
    return cmd_plot(plot_s, plot_inputs, out);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "snakevqe: error: " << msg << "\n";
    return kInputError;
  }
}

}  // namespace snakevqe::cli
