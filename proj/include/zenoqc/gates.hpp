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
/// Interaction catalog, gate recipes, circuit identities and noise checks.
///
/// Default labels: Heisenberg {A, Q}; three-body Ising {A, Q1, Q2}; XY ring
/// {A, C1, P2}; the ancilla-readout gate R_ZZ' uses {d, a, T, S} (data,
/// ancilla, triangle actuator, square actuator). A is always the actuator.

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zenoqc/channels.hpp"
#include "zenoqc/qcore.hpp"
#include "zenoqc/zeno.hpp"

namespace zenoqc {

enum class InteractionKind { Heisenberg, Ising3, XY };

InteractionKind parse_interaction_kind(std::string_view name);

/// Catalog interaction on its default labels, J = 1.
HermitianOperator hamiltonian_catalog(InteractionKind kind);

/// J (XX + YY + ZZ) between actuator and register.
HermitianOperator heisenberg(const std::string& actuator, const std::string& reg);
/// J Z_A Z_1 Z_2.
HermitianOperator ising3(const std::string& actuator, const std::string& q1, const std::string& q2);
/// J [X_A (X_c + X_p) + Y_A (Y_c + Y_p)].
HermitianOperator xy(const std::string& actuator, const std::string& c, const std::string& p);

/// Sum of operators placed on a common layout.
HermitianOperator sum_on(const SystemLayout& layout, std::initializer_list<HermitianOperator> terms);

/// Depolarizing rates of the actuator operations.
struct NoiseRates {
  double init = 0.0;
  double hadamard = 0.0;

  static NoiseRates uniform(double eps) { return {eps, eps}; }
};

/// A register-level gate realized by a Zeno cycle.
struct GateRecipe {
  std::string name;
  HermitianOperator interaction;
  std::function<NoisyCycleSpec(const NoiseRates&, double freq_over_h)> cycle;
  /// Gate time in hbar/J. Empty for decoupling recipes, whose duration is
  /// supplied by the caller.
  std::function<double(const NoiseRates&)> duration;
  ComplexMatrix target;

  bool has_fixed_duration() const { return static_cast<bool>(duration); }
};

/// Known names: phase_z, rz, rx, rzz, rzz_prime, decouple_heisenberg,
/// decouple_ising, decouple_xy. Throws std::invalid_argument otherwise.
GateRecipe recipe(std::string_view name);
std::vector<std::string> recipe_names();

/// R_ZZ on the given Ising labels, for embedding into larger circuits.
GateRecipe rzz_recipe(const std::string& actuator, const std::string& q1, const std::string& q2);

/// Runs the recipe for its own duration, or `duration` for decoupling.
NocoResult realize(const GateRecipe& r, const NoiseRates& rates, double freq_over_h,
                   std::optional<double> duration = std::nullopt);

/// 1 - F of the realized channel against the recipe target.
double gate_infidelity(const GateRecipe& r, const NocoResult& result);

// Ideal gates on explicit layouts.
ComplexMatrix rz_gate(const SystemLayout& one);                          ///< (1 - iZ)/sqrt 2
ComplexMatrix rx_gate(const SystemLayout& one);                          ///< (1 - iX)/sqrt 2
ComplexMatrix rzz_gate(const SystemLayout& two);                         ///< (1 - iZZ)/sqrt 2
ComplexMatrix controlled_z(const SystemLayout& two);                     ///< Lambda_Z
ComplexMatrix rzz_prime_gate(const SystemLayout& two);                   ///< data first

/// ||exp(-i H_XY t) - (1/2)(Z_A Z_C1 + Z_A Z_P2 + Z_C1 Z_P2 - 1) SWAP||_F,
/// aligned over global phase.
double swap_identity_deviation(double t);
/// Deviation at t = pi / (2 sqrt 2).
double swap_identity_check();
double swap_time();

struct IdealTransfer {};
struct FiniteFrequencyTransfer {
  NoiseRates rates;
  double freq_over_h = 1e4;
};
using TransferMode = std::variant<IdealTransfer, FiniteFrequencyTransfer>;

/// Swap evolution, R_ZZ on (C2, P2), swap evolution; induced channel on
/// (C1, C2) for the given initial port and ring-actuator states.
Channel transfer_cphase_circuit(const DensityMatrix& initial_p2, const DensityMatrix& initial_a,
                                const TransferMode& mode);

struct NoiseAdmissibility {
  BlochVector rho_i;  ///< half-normalized, see BlochVector
  BlochVector rho_h;
  BlochVector rho_s;
  double cross_norm = 0.0;  ///< |p_I x p_H|
  double trz_s = 0.0;       ///< Tr(Z rho_S)
  bool pass_c1 = false;
  bool pass_c2 = false;
};

NoiseAdmissibility noise_conditions(const DensityMatrix& rho_i, const DensityMatrix& rho_h,
                                    const DensityMatrix& rho_s);

struct FrozenStates {
  DensityMatrix rho_i;
  DensityMatrix rho_h;
  DensityMatrix rho_s;
};

/// Frozen actuator states under depolarizing noise of rate eps on every op.
FrozenStates depolarizing_frozen_states(double eps);

}  // namespace zenoqc
