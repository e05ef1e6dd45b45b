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

#include "zenoqc/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>

namespace zenoqc {

namespace {

constexpr double kConditionTol = 1e-9;

const Complex kI(0.0, 1.0);

Matrix hadamard2() {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

void require_below_one(double x, const char* what) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw std::invalid_argument(std::string(what) + " rate must lie in [0, 1) for a gate recipe");
  }
}

SystemLayout two_qubit_layout(const std::string& actuator, const std::string& reg) {
  return SystemLayout({{actuator, Role::Actuator}, {reg, Role::Register}});
}

GateRecipe init_gate(std::string name, HermitianOperator h, double quarter_turns,
                     ComplexMatrix target) {
  // Effective coupling (1 - eps_i) J, rotation angle quarter_turns * pi/4.
  auto duration = [quarter_turns](const NoiseRates& r) {
    require_below_one(r.init, "initialization");
    return quarter_turns * kPi / (4.0 * (1.0 - r.init));
  };
  auto cycle = [h](const NoiseRates& r, double f) { return init_cycle(h, r.init, f); };
  return GateRecipe{std::move(name), h, cycle, duration, std::move(target)};
}

GateRecipe decouple_gate(std::string name, HermitianOperator h) {
  const SystemLayout reg = h.layout().select(h.layout().labels_with(Role::Register));
  auto cycle = [h](const NoiseRates&, double f) { return twirl_cycle(h, f); };
  return GateRecipe{std::move(name), h, cycle, {}, ComplexMatrix::identity(reg)};
}

}  // namespace

InteractionKind parse_interaction_kind(std::string_view name) {
  if (name == "heisenberg") return InteractionKind::Heisenberg;
  if (name == "ising3") return InteractionKind::Ising3;
  if (name == "xy") return InteractionKind::XY;
  throw std::invalid_argument("unknown interaction kind '" + std::string(name) + "'");
}

HermitianOperator hamiltonian_catalog(InteractionKind kind) {
  switch (kind) {
    case InteractionKind::Heisenberg:
      return heisenberg("A", "Q");
    case InteractionKind::Ising3:
      return ising3("A", "Q1", "Q2");
    case InteractionKind::XY:
      return xy("A", "C1", "P2");
  }
  throw std::invalid_argument("unknown interaction kind");
}

HermitianOperator heisenberg(const std::string& actuator, const std::string& reg) {
  const SystemLayout l = two_qubit_layout(actuator, reg);
  return HermitianOperator(pauli_product(l, {{actuator, 'x'}, {reg, 'x'}}) +
                           pauli_product(l, {{actuator, 'y'}, {reg, 'y'}}) +
                           pauli_product(l, {{actuator, 'z'}, {reg, 'z'}}));
}

HermitianOperator ising3(const std::string& actuator, const std::string& q1, const std::string& q2) {
  const SystemLayout l({{actuator, Role::Actuator}, {q1, Role::Register}, {q2, Role::Register}});
  return HermitianOperator(pauli_product(l, {{actuator, 'z'}, {q1, 'z'}, {q2, 'z'}}));
}

HermitianOperator xy(const std::string& actuator, const std::string& c, const std::string& p) {
  const SystemLayout l({{actuator, Role::Actuator}, {c, Role::Register}, {p, Role::Register}});
  return HermitianOperator(
      pauli_product(l, {{actuator, 'x'}, {c, 'x'}}) + pauli_product(l, {{actuator, 'x'}, {p, 'x'}}) +
      pauli_product(l, {{actuator, 'y'}, {c, 'y'}}) + pauli_product(l, {{actuator, 'y'}, {p, 'y'}}));
}

HermitianOperator sum_on(const SystemLayout& layout, std::initializer_list<HermitianOperator> terms) {
  ComplexMatrix acc = ComplexMatrix::zero(layout);
  for (const auto& t : terms) {
    for (const auto& q : t.layout().qubits()) {
      if (layout.role_of(q.label) != q.role) {
        throw LayoutError("sum_on: role of '" + q.label + "' differs between layouts");
      }
    }
    acc = acc + embed(t.matrix(), layout);
  }
  return HermitianOperator(acc);
}

// ---------------------------------------------------------------------------
// Ideal gates

ComplexMatrix rz_gate(const SystemLayout& one) {
  return {one, (pauli('i') - kI * pauli('z')) / std::sqrt(2.0)};
}

ComplexMatrix rx_gate(const SystemLayout& one) {
  return {one, (pauli('i') - kI * pauli('x')) / std::sqrt(2.0)};
}

ComplexMatrix rzz_gate(const SystemLayout& two) {
  const auto labels = two.labels();
  const ComplexMatrix zz = pauli_product(two, {{labels[0], 'z'}, {labels[1], 'z'}});
  return Complex(1.0 / std::sqrt(2.0)) * (ComplexMatrix::identity(two) - kI * zz);
}

ComplexMatrix controlled_z(const SystemLayout& two) {
  const auto labels = two.labels();
  const ComplexMatrix id = ComplexMatrix::identity(two);
  const ComplexMatrix z1 = pauli_product(two, {{labels[0], 'z'}});
  const ComplexMatrix z2 = pauli_product(two, {{labels[1], 'z'}});
  return Complex(0.5) * (id + z1) + Complex(0.5) * ((id - z1) * z2);
}

ComplexMatrix rzz_prime_gate(const SystemLayout& two) {
  // (1 - Z_d)/2 - i (1 + Z_d) Z_a / 2, data qubit first.
  const auto labels = two.labels();
  const ComplexMatrix id = ComplexMatrix::identity(two);
  const ComplexMatrix zd = pauli_product(two, {{labels[0], 'z'}});
  const ComplexMatrix za = pauli_product(two, {{labels[1], 'z'}});
  return Complex(0.5) * (id - zd) - Complex(0.0, 0.5) * ((id + zd) * za);
}

// ---------------------------------------------------------------------------
// Recipes

GateRecipe rzz_recipe(const std::string& actuator, const std::string& q1, const std::string& q2) {
  return init_gate("rzz", ising3(actuator, q1, q2), 1.0, rzz_gate(SystemLayout::registers({q1, q2})));
}

std::vector<std::string> recipe_names() {
  return {"phase_z", "rz", "rx", "rzz", "rzz_prime", "decouple_heisenberg", "decouple_ising",
          "decouple_xy"};
}

GateRecipe recipe(std::string_view name) {
  const SystemLayout q = SystemLayout::single("Q");
  if (name == "phase_z") {
    // exp(-i (pi/2) Z) = -i Z
    return init_gate("phase_z", heisenberg("A", "Q"), 2.0, ComplexMatrix(q, -kI * pauli('z')));
  }
  if (name == "rz") return init_gate("rz", heisenberg("A", "Q"), 1.0, rz_gate(q));
  if (name == "rx") {
    const HermitianOperator h = heisenberg("A", "Q");
    auto cycle = [h](const NoiseRates& r, double f) {
      return init_hadamard_cycle(h, r.init, r.hadamard, f);
    };
    auto duration = [](const NoiseRates& r) {
      require_below_one(r.init, "initialization");
      require_below_one(r.hadamard, "Hadamard");
      return kPi / (4.0 * (1.0 - r.init) * (1.0 - r.hadamard));
    };
    return GateRecipe{"rx", h, cycle, duration, rx_gate(q)};
  }
  if (name == "rzz") return rzz_recipe("A", "Q1", "Q2");
  if (name == "rzz_prime") {
    // Triangle actuator T drives R_Z on the ancilla while square actuator S
    // drives R_ZZ on (data, ancilla); both are reset every period.
    const SystemLayout l({{"d", Role::Register},
                          {"a", Role::Register},
                          {"T", Role::Actuator},
                          {"S", Role::Actuator}});
    const HermitianOperator h = sum_on(l, {heisenberg("T", "a"), ising3("S", "d", "a")});
    return init_gate("rzz_prime", h, 1.0, rzz_prime_gate(SystemLayout::registers({"d", "a"})));
  }
  if (name == "decouple_heisenberg") return decouple_gate("decouple_heisenberg", heisenberg("A", "Q"));
  if (name == "decouple_ising") return decouple_gate("decouple_ising", ising3("A", "Q1", "Q2"));
  if (name == "decouple_xy") return decouple_gate("decouple_xy", xy("A", "C1", "P2"));
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

NocoResult realize(const GateRecipe& r, const NoiseRates& rates, double freq_over_h,
                   std::optional<double> duration) {
  double t = 0.0;
  if (duration) {
    t = *duration;
  } else if (r.has_fixed_duration()) {
    t = r.duration(rates);
  } else {
    throw std::invalid_argument("recipe '" + r.name + "' needs an explicit duration");
  }
  return noco_channel(r.cycle(rates, freq_over_h), t);
}

double gate_infidelity(const GateRecipe& r, const NocoResult& result) {
  return 1.0 - entanglement_fidelity(result.realized, r.target);
}

// ---------------------------------------------------------------------------
// Swap identity and the transfer circuit

double swap_time() { return kPi / (2.0 * std::sqrt(2.0)); }

double swap_identity_deviation(double t) {
  const HermitianOperator h = xy("A", "C1", "P2");
  const SystemLayout& l = h.layout();
  const ComplexMatrix u = expm_hermitian(h, t);
  const ComplexMatrix id = ComplexMatrix::identity(l);
  const ComplexMatrix phase =
      Complex(0.5) * (pauli_product(l, {{"A", 'z'}, {"C1", 'z'}}) +
                      pauli_product(l, {{"A", 'z'}, {"P2", 'z'}}) +
                      pauli_product(l, {{"C1", 'z'}, {"P2", 'z'}}) - id);
  const ComplexMatrix swap =
      Complex(0.5) * (pauli_product(l, {{"C1", 'x'}, {"P2", 'x'}}) +
                      pauli_product(l, {{"C1", 'y'}, {"P2", 'y'}}) +
                      pauli_product(l, {{"C1", 'z'}, {"P2", 'z'}}) + id);
  return phase_aligned_distance(u.data(), (phase * swap).data());
}

double swap_identity_check() { return swap_identity_deviation(swap_time()); }

Channel transfer_cphase_circuit(const DensityMatrix& initial_p2, const DensityMatrix& initial_a,
                                const TransferMode& mode) {
  if (initial_p2.layout().num_qubits() != 1 || initial_a.layout().num_qubits() != 1) {
    throw LayoutError("transfer circuit: initial states must be single-qubit");
  }
  const SystemLayout full({{"C1", Role::Register},
                           {"C2", Role::Register},
                           {"P2", Role::Register},
                           {"A", Role::Actuator}});
  const Channel swap_evolution =
      embed(unitary_channel(expm_hermitian(xy("A", "C1", "P2"), swap_time())), full);

  Channel phase_gate = std::visit(
      [&](const auto& m) -> Channel {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, IdealTransfer>) {
          return unitary_channel(rzz_gate(SystemLayout::registers({"C2", "P2"})));
        } else {
          const GateRecipe r = rzz_recipe("S", "C2", "P2");
          return realize(r, m.rates, m.freq_over_h).realized;
        }
      },
      mode);

  const Channel circuit = compose(swap_evolution, compose(embed(phase_gate, full), swap_evolution));
  const DensityMatrix env(kron(ComplexMatrix(SystemLayout::single("P2"), initial_p2.data()),
                               ComplexMatrix(SystemLayout::single("A", Role::Actuator),
                                             initial_a.data())));
  return reduce(circuit, env);
}

// ---------------------------------------------------------------------------
// Noise admissibility

NoiseAdmissibility noise_conditions(const DensityMatrix& rho_i, const DensityMatrix& rho_h,
                                    const DensityMatrix& rho_s) {
  NoiseAdmissibility out;
  out.rho_i = bloch_vector(rho_i);
  out.rho_h = bloch_vector(rho_h);
  out.rho_s = bloch_vector(rho_s);
  const Eigen::Vector3d a(out.rho_i.px, out.rho_i.py, out.rho_i.pz);
  const Eigen::Vector3d b(out.rho_h.px, out.rho_h.py, out.rho_h.pz);
  out.cross_norm = a.cross(b).norm();
  out.trz_s = 2.0 * out.rho_s.pz;
  out.pass_c1 = out.cross_norm > kConditionTol;
  out.pass_c2 = std::abs(out.trz_s) > kConditionTol;
  return out;
}

FrozenStates depolarizing_frozen_states(double eps) {
  const SystemLayout one = SystemLayout::single("A", Role::Actuator);
  const Channel noise = depolarizing(eps, one, "A");
  const DensityMatrix zero = DensityMatrix::basis_state(one, 0);
  DensityMatrix rho_i = apply(noise, zero);
  const ComplexMatrix h(one, hadamard2());
  DensityMatrix rho_h = apply(noise, DensityMatrix::from_numerical(h * rho_i.matrix() * h));
  DensityMatrix rho_s = apply(noise, zero);
  return {std::move(rho_i), std::move(rho_h), std::move(rho_s)};
}

}  // namespace zenoqc
