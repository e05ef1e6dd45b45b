// Copyright 2026 The zenoqc Authors
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

#include "zenoqc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "zenoqc/channels.hpp"
#include "zenoqc/faulttol.hpp"
#include "zenoqc/gates.hpp"
#include "zenoqc/parallel.hpp"
#include "zenoqc/zeno.hpp"

namespace zenoqc::cli {

namespace {

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {"epsilon", "freq_over_h", "rounds",
                                                "gate",    "budget",      "bisect_tol",
                                                "include_decoupling",     "workers", "out"};
  return keys;
}

bool is_key(const std::string& k) {
  const auto& keys = config_keys();
  return std::find(keys.begin(), keys.end(), k) != keys.end();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(const std::string& what) { throw CliError(kInvalidConfig, what); }

double parse_real(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    bad(key + ": not a number: '" + t + "'");
  }
  if (used != t.size() || !std::isfinite(v)) bad(key + ": not a finite number: '" + t + "'");
  return v;
}

long parse_integer(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t, &used);
  } catch (const std::exception&) {
    bad(key + ": not an integer: '" + t + "'");
  }
  if (used != t.size()) bad(key + ": not an integer: '" + t + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& key, const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) bad(key + ": empty list entry");
    items.push_back(item);
  }
  if (items.empty()) bad(key + ": empty grid");
  return items;
}

std::vector<double> real_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split_list(key, text)) out.push_back(parse_real(key, s));
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "on" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "off" || t == "no") return false;
  bad(key + ": expected true or false, got '" + t + "'");
}

std::string join_reals(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_real(v[i]);
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Sweep defaults when a key is not given.
void apply_defaults(ExperimentConfig& c) {
  c.epsilon = {0.2};
  c.freq_over_h = {1e4};
  c.rounds = {17};
  if (c.command == "threshold") {
    c.freq_over_h = {1e3, 3e3, 1e4, 3e4, 1e5};
    c.rounds = {9, 11, 13, 15, 17};
  } else if (c.command == "distill") {
    c.rounds = {1, 3, 5, 7, 9, 11, 13, 15, 17};
  } else if (c.command == "fixed-state" || c.command == "eff-h" || c.command == "noise-check") {
    c.epsilon = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  }
}

void set_key(ExperimentConfig& c, const std::string& key, const std::string& value) {
  if (key == "epsilon") {
    c.epsilon = real_list(key, value);
  } else if (key == "freq_over_h") {
    c.freq_over_h = real_list(key, value);
  } else if (key == "rounds") {
    c.rounds.clear();
    for (const auto& s : split_list(key, value)) {
      const long n = parse_integer(key, s);
      if (n < 1 || n > 30 || n % 2 == 0) bad("rounds: entries must be odd and in [1, 30]");
      c.rounds.push_back(static_cast<int>(n));
    }
  } else if (key == "gate") {
    c.gate = trim(value);
  } else if (key == "budget") {
    c.budget = parse_real(key, value);
  } else if (key == "bisect_tol") {
    c.bisect_tol = parse_real(key, value);
  } else if (key == "include_decoupling") {
    c.include_decoupling = parse_bool(key, value);
  } else if (key == "workers") {
    const long w = parse_integer(key, value);
    if (w < 1 || w > 1024) bad("workers: must lie in [1, 1024]");
    c.workers = static_cast<std::size_t>(w);
  } else if (key == "out") {
    c.out = trim(value);
  } else {
    bad("unknown config key '" + key + "'");
  }
}

void validate(const ExperimentConfig& c) {
  for (double e : c.epsilon) {
    if (e < 0.0 || e > 1.0) bad("epsilon: entries must lie in [0, 1]");
  }
  for (double f : c.freq_over_h) {
    if (!(f > 0.0)) bad("freq_over_h: entries must be positive");
  }
  if (!(c.budget > 0.0 && c.budget < 1.0)) bad("budget: must lie in (0, 1)");
  if (!(c.bisect_tol > 0.0)) bad("bisect_tol: must be positive");
}

const GateRecipe gate_recipe(const std::string& name) {
  try {
    return recipe(name);
  } catch (const std::invalid_argument& e) {
    throw CliError(kUnknownGate, e.what());
  }
}

std::vector<std::string> pauli_labels(std::size_t n) {
  static const char kAxes[] = {'I', 'X', 'Y', 'Z'};
  std::vector<std::string> out;
  std::size_t count = std::size_t{1} << (2 * n);
  for (std::size_t k = 0; k < count; ++k) {
    std::string s(n, 'I');
    std::size_t x = k;
    for (std::size_t q = n; q-- > 0;) {
      s[q] = kAxes[x & 3u];
      x >>= 2;
    }
    out.push_back(s);
  }
  return out;
}

// Coefficients c_P with H = sum_P c_P P.
std::vector<double> pauli_coefficients(const HermitianOperator& h) {
  const SystemLayout& l = h.layout();
  const auto labels = l.labels();
  std::vector<double> out;
  for (const auto& s : pauli_labels(labels.size())) {
    Matrix p = Matrix::Identity(1, 1);
    for (char a : s) {
      const Matrix f = pauli(a);
      Matrix next(p.rows() * 2, p.cols() * 2);
      for (Eigen::Index i = 0; i < p.rows(); ++i)
        for (Eigen::Index j = 0; j < p.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = p(i, j) * f;
      p = std::move(next);
    }
    out.push_back((p * h.data()).trace().real() / static_cast<double>(l.dim()));
  }
  return out;
}

std::string register_suffix(const SystemLayout& l) {
  std::string s;
  for (const auto& q : l.labels()) s += (s.empty() ? "" : "_") + q;
  return s;
}

ResultTable fixed_state_table(const ExperimentConfig& c) {
  ResultTable t;
  t.columns = {"epsilon_i", "epsilon_h", "px", "py", "pz"};
  const GateRecipe r = gate_recipe("rx");  // Heisenberg {A, Q}
  std::vector<std::pair<double, bool>> points;
  for (double e : c.epsilon) {
    points.push_back({e, false});
    points.push_back({e, true});
  }
  t.rows = parallel_map(points.size(), c.workers, [&](std::size_t k) {
    const auto [e, hadamard] = points[k];
    const NoisyCycleSpec spec = hadamard ? init_hadamard_cycle(r.interaction, e, e, 1.0)
                                         : init_cycle(r.interaction, e, 1.0);
    const BlochVector p = bloch_vector(fixed_state(spec).state);
    return std::vector<double>{e, hadamard ? e : 0.0, p.px, p.py, p.pz};
  });
  return t;
}

ResultTable eff_h_table(const ExperimentConfig& c) {
  const GateRecipe r = gate_recipe(c.gate);
  ResultTable t;
  const NoisyCycleSpec probe = r.cycle(NoiseRates{}, 1.0);
  const SystemLayout reg = probe.register_layout();
  t.columns = {"epsilon_i", "epsilon_h"};
  for (const auto& s : pauli_labels(reg.labels().size())) t.columns.push_back("c_" + s);
  t.rows = parallel_map(c.epsilon.size(), c.workers, [&](std::size_t k) {
    const double e = c.epsilon[k];
    const NoisyCycleSpec spec = r.cycle(NoiseRates::uniform(e), 1.0);
    const HermitianOperator h = effective_hamiltonian(spec.interaction(), fixed_state(spec).state);
    std::vector<double> row{spec.rates().init, spec.rates().unitary};
    for (double x : pauli_coefficients(h)) row.push_back(x);
    return row;
  });
  t.summary = "register " + register_suffix(reg);
  return t;
}

ResultTable gate_error_table(const ExperimentConfig& c) {
  const GateRecipe r = gate_recipe(c.gate);
  if (!r.has_fixed_duration()) bad("gate '" + c.gate + "' is a decoupling recipe without a gate time");
  ResultTable t;
  t.columns = {"epsilon", "freq_over_h", "infidelity", "N_periods"};
  t.kinds = {CellKind::Real, CellKind::Real, CellKind::Real, CellKind::Integer};
  for (double e : c.epsilon) {
    if (!(e < 1.0)) bad("gate-error: epsilon must be below 1 (the gate time diverges)");
  }
  const CycleFactory factory = [&](double eps, double freq) {
    const NoiseRates rates = NoiseRates::uniform(eps);
    return std::make_pair(r.cycle(rates, freq), r.duration(rates));
  };
  const auto surface = infidelity_surface(factory, c.epsilon, c.freq_over_h, r.target, c.workers);
  for (const auto& p : surface) {
    t.rows.push_back({p.eps, p.freq_over_h, p.infidelity, static_cast<double>(p.periods)});
  }
  return t;
}

ResultTable swap_check_table(const ExperimentConfig&) {
  ResultTable t;
  t.columns = {"time", "deviation"};
  t.rows.push_back({swap_time(), swap_identity_check()});
  t.rows.push_back({0.5 * swap_time(), swap_identity_deviation(0.5 * swap_time())});
  return t;
}

ResultTable transfer_check_table(const ExperimentConfig& c) {
  ResultTable t;
  t.columns = {"state", "distance_to_first", "infidelity_vs_rzz"};
  t.kinds = {CellKind::Integer, CellKind::Real, CellKind::Real};
  const SystemLayout p2 = SystemLayout::single("P2");
  const SystemLayout a = SystemLayout::single("A", Role::Actuator);
  const std::vector<std::pair<BlochVector, BlochVector>> states = {
      {{0.0, 0.0, 0.5}, {0.0, 0.0, 0.5}},
      {{0.5, 0.0, 0.0}, {0.0, 0.0, -0.5}},
      {{0.0, 0.0, 0.0}, {0.0, 0.5, 0.0}},
      {{0.1, -0.2, 0.3}, {-0.25, 0.15, 0.1}},
  };
  const ComplexMatrix target = rzz_gate(SystemLayout::registers({"C1", "C2"}));
  const auto channels = parallel_map(states.size(), c.workers, [&](std::size_t k) {
    return transfer_cphase_circuit(from_bloch(states[k].first, p2), from_bloch(states[k].second, a),
                                   IdealTransfer{});
  });
  for (std::size_t k = 0; k < channels.size(); ++k) {
    t.rows.push_back({static_cast<double>(k),
                      frobenius_distance(channels[k].superop(), channels[0].superop()),
                      1.0 - entanglement_fidelity(channels[k], target)});
  }
  return t;
}

ResultTable distill_table(const ExperimentConfig& c) {
  ResultTable t;
  t.columns = {"rounds", "epsilon", "freq_over_h", "p_fail"};
  t.kinds = {CellKind::Integer, CellKind::Real, CellKind::Real, CellKind::Real};
  struct Point {
    int n;
    double e;
    double f;
  };
  std::vector<Point> points;
  for (int n : c.rounds)
    for (double e : c.epsilon)
      for (double f : c.freq_over_h) points.push_back({n, e, f});
  for (const auto& p : points) {
    if (!(p.e < 1.0)) bad("distill: epsilon must be below 1 (the readout gate time diverges)");
  }
  t.rows = parallel_map(points.size(), c.workers, [&](std::size_t k) {
    DistillationConfig dc;
    dc.rounds = points[k].n;
    dc.eps = points[k].e;
    dc.freq_over_h = points[k].f;
    return std::vector<double>{static_cast<double>(dc.rounds), dc.eps, dc.freq_over_h,
                               distill(dc).p_fail};
  });
  return t;
}

ResultTable threshold_table(const ExperimentConfig& c) {
  ResultTable t;
  t.columns = {"freq_over_h", "rounds", "epsilon_star", "iterations"};
  t.kinds = {CellKind::Real, CellKind::Integer, CellKind::Real, CellKind::Integer};
  ThresholdOptions opts;
  opts.budget = c.budget;
  opts.tolerance = c.bisect_tol;
  opts.budget_options.include_distillation_decoupling = c.include_decoupling;
  std::vector<std::pair<double, int>> points;
  for (double f : c.freq_over_h)
    for (int n : c.rounds) points.push_back({f, n});
  std::vector<ThresholdPoint> results;
  try {
    results = parallel_map(points.size(), c.workers, [&](std::size_t k) {
      return threshold(points[k].first, points[k].second, opts);
    });
  } catch (const NonMonotoneBudget& e) {
    throw CliError(kNonMonotone, e.what());
  }
  int missing = 0;
  for (const auto& r : results) {
    const double eps = r.found ? r.eps_star : std::numeric_limits<double>::quiet_NaN();
    if (!r.found) ++missing;
    t.rows.push_back({r.freq_over_h, static_cast<double>(r.rounds), eps,
                      static_cast<double>(r.iterations)});
  }
  if (missing > 0) t.summary = std::to_string(missing) + " point(s) without a threshold";
  return t;
}

ResultTable noise_check_table(const ExperimentConfig& c) {
  ResultTable t;
  t.columns = {"epsilon", "cross_norm", "trz_s", "pass_c1", "pass_c2"};
  t.kinds = {CellKind::Real, CellKind::Real, CellKind::Real, CellKind::Integer, CellKind::Integer};
  int failed = 0;
  for (double e : c.epsilon) {
    const FrozenStates s = depolarizing_frozen_states(e);
    const NoiseAdmissibility n = noise_conditions(s.rho_i, s.rho_h, s.rho_s);
    if (!n.pass_c1 || !n.pass_c2) ++failed;
    t.rows.push_back({e, n.cross_norm, n.trz_s, n.pass_c1 ? 1.0 : 0.0, n.pass_c2 ? 1.0 : 0.0});
  }
  t.summary = std::to_string(failed) + " rate(s) failing C1 or C2";
  return t;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"fixed-state",    "eff-h",   "gate-error",
                                                 "swap-check",     "transfer-check", "distill",
                                                 "threshold",      "noise-check"};
  return names;
}

std::vector<std::string> ExperimentConfig::canonical_lines() const {
  return {
      "command = " + command,
      "epsilon = " + join_reals(epsilon),
      "freq_over_h = " + join_reals(freq_over_h),
      "rounds = " + join_ints(rounds),
      "gate = " + gate,
      "budget = " + format_real(budget),
      "bisect_tol = " + format_real(bisect_tol),
      std::string("include_decoupling = ") + (include_decoupling ? "true" : "false"),
  };
}

std::uint64_t ExperimentConfig::hash() const {
  std::string all;
  for (const auto& l : canonical_lines()) all += l + "\n";
  return fnv1a(all);
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) bad("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (!is_key(key)) bad("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

ExperimentConfig resolve_config(const std::string& command,
                                const std::map<std::string, std::string>& file,
                                const std::map<std::string, std::string>& overrides) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    bad("unknown command '" + command + "'");
  }
  ExperimentConfig c;
  c.command = command;
  apply_defaults(c);
  for (const auto& [k, v] : file) set_key(c, k, v);
  for (const auto& [k, v] : overrides) set_key(c, k, v);
  validate(c);
  return c;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

std::string ResultTable::to_csv() const {
  std::string s;
  for (const auto& p : provenance) s += "# " + p + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) s += (i ? "," : "") + columns[i];
  s += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ",";
      const bool integer = i < kinds.size() && kinds[i] == CellKind::Integer;
      if (integer && std::isfinite(row[i])) {
        s += std::to_string(static_cast<long long>(row[i]));
      } else {
        s += format_real(row[i]);
      }
    }
    s += "\n";
  }
  return s;
}

ResultTable run(const ExperimentConfig& config) {
  static const std::map<std::string, std::function<ResultTable(const ExperimentConfig&)>> commands = {
      {"fixed-state", fixed_state_table},       {"eff-h", eff_h_table},
      {"gate-error", gate_error_table},         {"swap-check", swap_check_table},
      {"transfer-check", transfer_check_table}, {"distill", distill_table},
      {"threshold", threshold_table},           {"noise-check", noise_check_table},
  };
  const auto it = commands.find(config.command);
  if (it == commands.end()) bad("unknown command '" + config.command + "'");
  ResultTable t = it->second(config);
  if (t.kinds.empty()) t.kinds.assign(t.columns.size(), CellKind::Real);

  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(config.hash()));
  t.provenance.push_back(std::string("zenoqc ") + ZENOQC_VERSION);
  for (const auto& l : config.canonical_lines()) t.provenance.push_back(l);
  t.provenance.push_back(std::string("config_hash = fnv1a64:") + hash);
  return t;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"zenoqc: Zeno-effect noisy-operation gate and threshold simulator", "zenoqc"};
  app.set_version_flag("--version", std::string(ZENOQC_VERSION));
  std::string command;
  std::string config_path;
  app.add_option("command", command, "one of: fixed-state eff-h gate-error swap-check "
                                     "transfer-check distill threshold noise-check")
      ->required();
  app.add_option("--config", config_path, "flat key = value file");
  std::map<std::string, std::string> overrides;
  std::map<std::string, std::string> raw;
  for (const auto& k : config_keys()) {
    app.add_option("--" + k, raw[k], "override '" + k + "'");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInvalidConfig;
  }
  for (const auto& k : config_keys()) {
    if (app.get_option("--" + k)->count() > 0) overrides[k] = raw[k];
  }

  try {
    std::map<std::string, std::string> file;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw CliError(kIoError, "cannot read config file '" + config_path + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      file = parse_config_text(ss.str());
    }
    const ExperimentConfig config = resolve_config(command, file, overrides);
    const ResultTable table = run(config);
    const std::string csv = table.to_csv();
    if (config.out.empty()) {
      out << csv;
    } else {
      std::ofstream f(config.out, std::ios::binary);
      if (!f || !(f << csv) || !f.flush()) {
        throw CliError(kIoError, "cannot write output file '" + config.out + "'");
      }
    }
    err << command << ": " << table.rows.size() << " row(s)";
    if (!config.out.empty()) err << " -> " << config.out;
    if (!table.summary.empty()) err << "; " << table.summary;
    err << "\n";
    return kOk;
  } catch (const CliError& e) {
    err << "zenoqc: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    err << "zenoqc: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace zenoqc::cli
