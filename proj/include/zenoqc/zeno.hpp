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
/// Operator-Zeno engine.
///
/// A register coupled to actuator qubits through an interaction H is driven
/// by repeating, at frequency f, a short sequence of noisy channels on the
/// actuators followed by free evolution for one period 2*pi/f. When the
/// actuator channels form a projector, the actuators freeze in a fixed state
/// rho_U and the register evolves under H_Q = Tr_A[(rho_U (x) 1) H].

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zenoqc/channels.hpp"
#include "zenoqc/qcore.hpp"

namespace zenoqc {

enum class ActuatorOpKind { Initialization, Unitary, Twirl };

/// One channel applied to actuator qubits within a period.
struct ActuatorOp {
  ActuatorOpKind kind;
  Channel channel;  ///< on a sub-layout made of actuator labels only
};

/// Depolarizing rates recorded with a cycle.
struct CycleRates {
  double init = 0.0;
  double unitary = 0.0;
};

ActuatorOp noisy_initialization(const std::string& actuator, double eps);
ActuatorOp noisy_unitary(const std::string& actuator, const Matrix& u2, double eps);
ActuatorOp twirl(const std::string& actuator);

/// One Zeno period: actuator channels in order, then free evolution under the
/// interaction for 2*pi / freq_over_h.
class NoisyCycleSpec {
 public:
  NoisyCycleSpec(HermitianOperator interaction, std::vector<ActuatorOp> ops, double freq_over_h,
                 CycleRates rates = {});

  const HermitianOperator& interaction() const { return interaction_; }
  const std::vector<ActuatorOp>& ops() const { return ops_; }
  double freq_over_h() const { return freq_; }
  const CycleRates& rates() const { return rates_; }
  /// Period length in hbar/J units.
  double period() const;

  const SystemLayout& layout() const { return interaction_.layout(); }
  SystemLayout actuator_layout() const;
  SystemLayout register_layout() const;

 private:
  HermitianOperator interaction_;
  std::vector<ActuatorOp> ops_;
  double freq_;
  CycleRates rates_;
};

/// Initialization (rate eps_i) on every actuator.
NoisyCycleSpec init_cycle(const HermitianOperator& h, double eps_i, double freq_over_h);
/// Initialization then Hadamard on every actuator.
NoisyCycleSpec init_hadamard_cycle(const HermitianOperator& h, double eps_i, double eps_h,
                                   double freq_over_h);
/// Full depolarization of every actuator.
NoisyCycleSpec twirl_cycle(const HermitianOperator& h, double freq_over_h);

struct FixedState {
  DensityMatrix state;  ///< on the actuator layout
  bool twirl_only = false;
};

/// Period actuator map applied to the maximally mixed actuator state.
FixedState fixed_state(const NoisyCycleSpec& spec);

/// Actuator-only superoperator of one period (ops in order, no evolution).
Channel actuator_period_map(const NoisyCycleSpec& spec);

struct ProjectorCheck {
  bool is_projector = false;
  double defect = 0.0;  ///< ||P^2 - P||_F
};

ProjectorCheck verify_projector(const NoisyCycleSpec& spec);

/// Tr_A[(rho_U (x) 1_Q) H], on the register labels of H.
HermitianOperator effective_hamiltonian(const HermitianOperator& h, const DensityMatrix& rho_u);

/// floor(t * f) with t in hbar/J and f in J/h, i.e. floor(t * f / (2 pi)).
/// A relative slack of 1e-12 absorbs round-off at exact integers.
std::uint64_t period_count(double t, double freq_over_h);

/// Full-layout map of one period: free evolution after the actuator ops.
Channel period_map(const NoisyCycleSpec& spec);

/// Tr_A[M^periods (rho (x) 1_A/d_A)] as a channel on the register, with the
/// power taken by binary exponentiation.
Channel realize_periods(const NoisyCycleSpec& spec, std::uint64_t periods);

struct NocoResult {
  Channel realized;  ///< actual register channel
  Channel ideal;     ///< exp(-i H_Q t) as a channel
  Channel error;     ///< realized o ideal^{-1}
  ComplexMatrix target_unitary;
  std::uint64_t periods = 0;
  double target_time = 0.0;     ///< t, hbar/J
  double simulated_time = 0.0;  ///< periods * period, hbar/J
};

/// Register channel produced by floor(t f) periods of `spec`.
NocoResult noco_channel(const NoisyCycleSpec& spec, double t);

struct SurfacePoint {
  double eps = 0.0;
  double freq_over_h = 0.0;
  double infidelity = 0.0;
  std::uint64_t periods = 0;
};

/// Builds (cycle, duration) for one grid point.
using CycleFactory = std::function<std::pair<NoisyCycleSpec, double>(double eps, double freq)>;

/// 1 - F against `target` for every (eps, freq) pair; eps is the outer loop.
std::vector<SurfacePoint> infidelity_surface(const CycleFactory& factory,
                                             std::span<const double> eps_grid,
                                             std::span<const double> freq_grid,
                                             const ComplexMatrix& target, std::size_t workers = 1);

}  // namespace zenoqc
