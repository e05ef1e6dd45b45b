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

#include "zenoqc/faulttol.hpp"

#include <algorithm>
#include <cmath>

#include "zenoqc/gates.hpp"

namespace zenoqc {

namespace {

constexpr double kPruneBelow = 1e-300;

const SystemLayout& readout_layout() {
  static const SystemLayout l = SystemLayout::registers({"d", "a"});
  return l;
}

Vector plus_state() {
  Vector v(2);
  v << 1.0, 1.0;
  return v / std::sqrt(2.0);
}

Vector minus_state() {
  Vector v(2);
  v << 1.0, -1.0;
  return v / std::sqrt(2.0);
}

inline double trace_of(const Eigen::Vector4cd& v) { return (v(0) + v(3)).real(); }

struct TreeWalk {
  const RoundMaps& maps;
  int rounds;
  ReadoutKind kind;
  DistillationResult& out;

  void descend(int depth, std::uint32_t prefix, const Eigen::Vector4cd& v0,
               const Eigen::Vector4cd& v1) {
    const double p0 = trace_of(v0);
    const double p1 = trace_of(v1);
    const double p = 0.5 * (p0 + p1);
    if (depth == rounds) {
      // joint weights of the inferred state being |0> or |1>
      double w0 = 0.5 * p0;
      double w1 = 0.5 * p1;
      if (kind == ReadoutKind::Initialization) {
        w0 = 0.5 * (v0(0) + v1(0)).real();
        w1 = 0.5 * (v0(3) + v1(3)).real();
      }
      const double q = p > 0.0 ? w0 / p : 0.5;
      out.records.push_back({prefix, p, q});
      out.p_fail += std::min(w0, w1);
      return;
    }
    if (p < kPruneBelow) {
      out.pruned_mass += p;
      return;
    }
    descend(depth + 1, prefix << 1, maps.plus * v0, maps.plus * v1);
    descend(depth + 1, (prefix << 1) | 1u, maps.minus * v0, maps.minus * v1);
  }
};

Eigen::Vector4cd vec_basis(int k) {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(k == 0 ? 0 : 3) = 1.0;  // |0><0| or |1><1| in column stacking
  return v;
}

// Error on `label` that flips an observable along `axis`.
double flip_error(const Channel& error, const std::string& label, char axis) {
  return marginal_error(pauli_twirl(error), label, axis);
}

Channel relabel_to_data(const Channel& c) {
  return Channel(SystemLayout::single("d"), c.superop());
}

// Marginal of a twirled three-body Ising link on its first register qubit.
Channel ising_link_on_first(const Channel& pair) {
  const SystemLayout& l = pair.layout();
  const std::string other = l.labels()[1];
  return reduce(pair, DensityMatrix::maximally_mixed(SystemLayout::single(other)));
}

}  // namespace

void DistillationConfig::validate() const {
  if (rounds < 1 || rounds % 2 == 0) throw std::invalid_argument("rounds must be odd and >= 1");
  if (rounds > 30) throw std::invalid_argument("rounds above 30 are not supported");
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in [0, 1]");
  if (noisy_gate && !(eps < 1.0)) throw std::invalid_argument("noisy gate needs eps < 1");
  if (!(freq_over_h > 0.0)) throw std::invalid_argument("frequency must be positive");
}

double DistillationResult::recompute_p_fail() const {
  double total = 0.0;
  for (const auto& r : records) total += r.probability * std::min(r.posterior0, 1.0 - r.posterior0);
  return total;
}

Channel data_idle_channel(double freq_over_h, double duration) {
  const NoiseRates none{};
  const Channel heis = relabel_to_data(
      realize(recipe("decouple_heisenberg"), none, freq_over_h, duration).realized);
  const Channel link = relabel_to_data(
      ising_link_on_first(realize(recipe("decouple_ising"), none, freq_over_h, duration).realized));
  Channel out = heis;
  for (int k = 0; k < 4; ++k) out = compose(link, out);
  return out;
}

Channel readout_gate_channel(const DistillationConfig& config) {
  if (!config.noisy_gate) return unitary_channel(rzz_prime_gate(readout_layout()));
  return realize(recipe("rzz_prime"), NoiseRates::uniform(config.eps), config.freq_over_h).realized;
}

RoundMaps round_maps(const DistillationConfig& config) {
  config.validate();
  const SystemLayout& joint = readout_layout();
  const SystemLayout anc = SystemLayout::single("a");
  const SystemLayout data = SystemLayout::single("d");

  DensityMatrix ancilla = DensityMatrix::pure(anc, plus_state());
  if (config.noisy_ancilla_init) ancilla = apply(depolarizing(config.eps, anc, "a"), ancilla);

  Channel round = readout_gate_channel(config);
  if (config.data_idle) {
    const double t_round = recipe("rzz_prime").duration(NoiseRates::uniform(config.eps));
    round = compose(embed(data_idle_channel(config.freq_over_h, t_round), joint), round);
  }
  if (config.noisy_measurement) round = compose(depolarizing(config.eps, joint, "a"), round);

  const std::vector<std::string> traced{"a"};
  const Vector outcome_states[2] = {plus_state(), minus_state()};
  Eigen::Matrix4cd maps[2];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Matrix unit = Matrix::Zero(2, 2);
      unit(i, j) = 1.0;
      const ComplexMatrix in = kron(ComplexMatrix(data, unit), ancilla.matrix());
      const ComplexMatrix out = apply(round, in);
      for (int o = 0; o < 2; ++o) {
        const Matrix proj = outcome_states[o] * outcome_states[o].adjoint();
        const ComplexMatrix projected =
            embed(ComplexMatrix(anc, proj), joint) * out;
        const Matrix reduced = partial_trace(projected, traced).data();
        maps[o].col(i + 2 * j) = Eigen::Map<const Eigen::Vector4cd>(reduced.data());
      }
    }
  }
  return {maps[0], maps[1]};
}

DistillationResult distill(const DistillationConfig& config) {
  const RoundMaps maps = round_maps(config);
  DistillationResult out;
  out.records.reserve(std::size_t{1} << config.rounds);
  TreeWalk walk{maps, config.rounds, config.kind, out};
  walk.descend(0, 0u, vec_basis(0), vec_basis(1));
  return out;
}

// ---------------------------------------------------------------------------
// Error budget

double ErrorBudget::p_phase() const {
  double total = p_init + p_meas;
  for (double x : rx) total += x;
  for (double x : rzz) total += x;
  for (const auto& d : decoupling) total += d.contribution;
  return total;
}

ErrorBudget vacuum_error_budget(double eps, double freq_over_h, int rounds,
                                const BudgetOptions& options) {
  DistillationConfig dc{rounds, eps, freq_over_h, true, true, true};
  dc.data_idle = options.include_distillation_decoupling;
  dc.validate();
  if (!(eps < 1.0)) throw std::invalid_argument("vacuum_error_budget needs eps < 1");

  const NoiseRates rates = NoiseRates::uniform(eps);
  ErrorBudget b;
  b.eps = eps;
  b.freq_over_h = freq_over_h;
  b.rounds = rounds;

  dc.kind = ReadoutKind::Initialization;
  b.p_init = distill(dc).p_fail;
  dc.kind = ReadoutKind::Measurement;
  b.p_meas = distill(dc).p_fail;

  // Frame of the performed circuit (the R_Z pair cancels): the data qubit is a
  // Z eigenstate during distillation, a Y eigenstate between the two R_X gates,
  // and is finally read in Z. Errors count when they anticommute with that.
  const GateRecipe rx = recipe("rx");
  const GateRecipe rzz = recipe("rzz");
  const GateRecipe readout = recipe("rzz_prime");
  const Channel rx_error = realize(rx, rates, freq_over_h).error;
  b.rx = {flip_error(rx_error, "Q", 'y'), flip_error(rx_error, "Q", 'z')};
  b.rzz.assign(4, flip_error(realize(rzz, rates, freq_over_h).error, "Q1", 'y'));

  // Idle couplings outside distillation. The data qubit has one Heisenberg
  // link to its triangle actuator, one Ising link shared with its ancilla and
  // four Ising links to cluster neighbours. During an R_X the data basis turns
  // uniformly between Z and Y, so a Z error flips the outcome with
  // probability sin^2 of the turned angle, 1/2 on average.
  struct Slot {
    std::string name;
    double duration;
    int idle_heisenberg;
    int idle_ising;
    double weight;
  };
  const double t_round = readout.duration(rates);
  const double t_rx = rx.duration(rates);
  const double t_rzz = rzz.duration(rates);
  const std::vector<Slot> slots = {
      {"rx_prepare", t_rx, 0, 5, 0.5},
      {"rzz", t_rzz, 1, 1, 1.0},
      {"rx_measure", t_rx, 0, 5, 0.5},
  };

  const GateRecipe idle_h = recipe("decouple_heisenberg");
  const GateRecipe idle_i = recipe("decouple_ising");
  for (const auto& s : slots) {
    if (s.idle_heisenberg > 0) {
      const double e = flip_error(realize(idle_h, rates, freq_over_h, s.duration).error, "Q", 'y');
      b.decoupling.push_back({s.name, "heisenberg", s.idle_heisenberg, s.duration, s.weight,
                              s.idle_heisenberg * s.weight * e});
    }
    if (s.idle_ising > 0) {
      const double e = flip_error(realize(idle_i, rates, freq_over_h, s.duration).error, "Q1", 'y');
      b.decoupling.push_back({s.name, "ising", s.idle_ising, s.duration, s.weight,
                              s.idle_ising * s.weight * e});
    }
  }
  const double total_time = 2.0 * rounds * t_round + 2.0 * t_rx + t_rzz;
  b.schedule_duration = total_time / (2.0 * kPi);
  return b;
}

// ---------------------------------------------------------------------------
// Threshold

ThresholdPoint threshold(double freq_over_h, int rounds, const ThresholdOptions& options) {
  if (!(options.tolerance > 0.0) || !(options.scan_step > 0.0)) {
    throw std::invalid_argument("threshold: tolerance and scan step must be positive");
  }
  if (!(options.budget > 0.0)) throw std::invalid_argument("threshold: budget must be positive");

  ThresholdPoint tp;
  tp.freq_over_h = freq_over_h;
  tp.rounds = rounds;
  tp.budget = options.budget;

  auto p_at = [&](double eps) {
    return vacuum_error_budget(eps, freq_over_h, rounds, options.budget_options).p_phase();
  };

  // Coarse scan for the first crossing; the budget must rise along the way.
  double lo = 0.0;
  double p_lo = p_at(lo);
  if (p_lo >= options.budget) return tp;
  double hi = -1.0;
  for (int k = 1;; ++k) {
    const double eps = std::min(k * options.scan_step, options.scan_max);
    const double p = p_at(eps);
    if (p < p_lo) {
      throw NonMonotoneBudget("phase-error budget decreases between eps=" + std::to_string(lo) +
                              " and eps=" + std::to_string(eps));
    }
    if (p >= options.budget) {
      hi = eps;
      break;
    }
    lo = eps;
    p_lo = p;
    if (eps >= options.scan_max) return tp;
  }

  while (hi - lo > options.tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double p = p_at(mid);
    tp.history.push_back({lo, hi, mid, p});
    if (p >= options.budget) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  tp.found = true;
  tp.lo = lo;
  tp.hi = hi;
  tp.eps_star = 0.5 * (lo + hi);
  tp.iterations = static_cast<int>(tp.history.size());
  return tp;
}

ErrorRates error_rate_mapping(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in [0, 1]");
  return {eps / 2.0, 3.0 * eps / 4.0};
}

}  // namespace zenoqc
