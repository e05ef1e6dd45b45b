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

#pragma once

/// \file
/// Readout distillation and the fault-tolerance threshold pipeline.
///
/// A single depolarizing rate eps is shared by every noisy operation. The
/// phase-error budget of one vacuum (X-measured) cluster qubit is a first
/// order sum over its gate, idle and readout contributions, each computed
/// with all other operations ideal.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zenoqc/channels.hpp"

namespace zenoqc {

/// Which data-qubit state the readout infers: the state it had before the
/// rounds (measurement) or the state it is left in (initialization).
enum class ReadoutKind { Measurement, Initialization };

struct DistillationConfig {
  int rounds = 1;  ///< odd, >= 1
  double eps = 0.0;
  double freq_over_h = 1e4;
  bool noisy_ancilla_init = true;
  bool noisy_gate = true;  ///< false: ideal R_ZZ'
  bool noisy_measurement = true;
  /// Twirled idle couplings of the data qubit (one Heisenberg, four Ising)
  /// act on it during every round.
  bool data_idle = false;
  ReadoutKind kind = ReadoutKind::Measurement;

  void validate() const;
};

/// One outcome string; round r is bit (rounds - 1 - r), 1 meaning "-".
struct OutcomeRecord {
  std::uint32_t outcomes = 0;
  double probability = 0.0;  ///< p_o with a uniform prior on the data state
  double posterior0 = 0.0;   ///< q_o = P(inferred data state is |0> | o)
};

struct DistillationResult {
  double p_fail = 0.0;
  std::vector<OutcomeRecord> records;
  double pruned_mass = 0.0;  ///< probability of branches dropped below 1e-300

  /// sum_o p_o min(q_o, 1 - q_o) recomputed from the records.
  double recompute_p_fail() const;
};

/// Linear maps on vec(data state) for the two outcomes of one round.
struct RoundMaps {
  Eigen::Matrix4cd plus;
  Eigen::Matrix4cd minus;
};

RoundMaps round_maps(const DistillationConfig& config);

/// Single-qubit channel on "d" from the data qubit's idle couplings over
/// `duration` (hbar/J): one twirled Heisenberg and four twirled Ising links.
Channel data_idle_channel(double freq_over_h, double duration);

/// Channel actually performed by the ancilla-readout gate R_ZZ' on (d, a):
/// the finite-frequency realization, or the ideal gate when noisy_gate is off.
Channel readout_gate_channel(const DistillationConfig& config);

DistillationResult distill(const DistillationConfig& config);

/// Idle (twirled) couplings of the data qubit during one schedule slot.
struct DecouplingTerm {
  std::string slot;
  std::string interaction;    ///< "heisenberg" or "ising"
  int count = 0;              ///< identical idle interactions in the slot
  double duration = 0.0;      ///< hbar/J
  double frame_weight = 1.0;  ///< fraction of errors that flip the final outcome
  double contribution = 0.0;  ///< count * frame_weight * per-interaction error
};

struct BudgetOptions {
  /// Simulate the data qubit's idle couplings inside the distillation rounds.
  bool include_distillation_decoupling = true;
};

struct ErrorBudget {
  double eps = 0.0;
  double freq_over_h = 0.0;
  int rounds = 0;
  double p_init = 0.0;
  double p_meas = 0.0;
  std::vector<double> rx;   ///< two R_X gates
  std::vector<double> rzz;  ///< four R_ZZ gates
  std::vector<DecouplingTerm> decoupling;
  double schedule_duration = 0.0;  ///< (J/h)^{-1}

  double p_phase() const;
};

ErrorBudget vacuum_error_budget(double eps, double freq_over_h, int rounds,
                                const BudgetOptions& options = {});

/// Raised when the coarse scan before bisection finds a decreasing budget.
class NonMonotoneBudget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ThresholdOptions {
  double budget = 0.03;
  double tolerance = 1e-4;  ///< final bracket width in eps
  double scan_step = 0.05;
  double scan_max = 0.99;
  BudgetOptions budget_options;
};

struct BisectionStep {
  double lo = 0.0;
  double hi = 0.0;
  double mid = 0.0;
  double p_phase = 0.0;
};

struct ThresholdPoint {
  double freq_over_h = 0.0;
  int rounds = 0;
  double budget = 0.03;
  bool found = false;  ///< false: no crossing on [0, scan_max]
  double eps_star = 0.0;
  double lo = 0.0;  ///< p_phase(lo) < budget
  double hi = 0.0;  ///< p_phase(hi) >= budget
  int iterations = 0;
  std::vector<BisectionStep> history;
};

ThresholdPoint threshold(double freq_over_h, int rounds, const ThresholdOptions& options = {});

struct ErrorRates {
  double init_measure = 0.0;  ///< eps / 2
  double unitary = 0.0;       ///< 3 eps / 4
};

ErrorRates error_rate_mapping(double eps);

}  // namespace zenoqc
