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

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "zenoqc/gates.hpp"

namespace zenoqc {
namespace {

using testing::Rng;

Vector basis(int dim, int k) {
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  return v;
}

TEST(Catalog, HeisenbergOnZeroOne) {
  const HermitianOperator h = hamiltonian_catalog(InteractionKind::Heisenberg);
  const Vector out = h.data() * basis(4, 1);  // |0_A 1_Q>
  EXPECT_LT((out - (2.0 * basis(4, 2) - basis(4, 1))).norm(), 1e-15);
}

TEST(Catalog, IsingSpectrum) {
  const HermitianOperator h = hamiltonian_catalog(InteractionKind::Ising3);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.data());
  int plus = 0, minus = 0;
  for (Eigen::Index k = 0; k < 8; ++k) {
    if (std::abs(es.eigenvalues()(k) - 1.0) < 1e-12) ++plus;
    if (std::abs(es.eigenvalues()(k) + 1.0) < 1e-12) ++minus;
  }
  EXPECT_EQ(plus, 4);
  EXPECT_EQ(minus, 4);
}

TEST(Catalog, XYTracelessNoDiagonal) {
  const HermitianOperator h = hamiltonian_catalog(InteractionKind::XY);
  EXPECT_NEAR(std::abs(h.data().trace()), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h.data()(0, 0)), 0.0, 1e-15);
}

TEST(Catalog, UnknownKindThrows) { EXPECT_THROW(parse_interaction_kind("dzyaloshinskii"), std::invalid_argument); }

TEST(Recipe, UnknownNameThrows) {
  EXPECT_THROW(recipe("toffoli"), std::invalid_argument);
  for (const auto& n : recipe_names()) EXPECT_NO_THROW(recipe(n));
}

TEST(Recipe, RzNoiselessLimit) {
  const GateRecipe r = recipe("rz");
  EXPECT_LE(gate_infidelity(r, realize(r, NoiseRates::uniform(0.0), 1e6)), 1e-4);
  EXPECT_LT((r.target.data() - rz_gate(SystemLayout::single("Q")).data()).norm(), 1e-15);
}

TEST(Recipe, RzzDuration) {
  EXPECT_NEAR(recipe("rzz").duration(NoiseRates::uniform(0.201)), kPi / (4 * 0.799), 1e-15);
  EXPECT_NEAR(kPi / (4 * 0.799), 0.9829, 1e-4);
}

TEST(Recipe, PhaseGateWorkedExample) {
  const GateRecipe r = recipe("phase_z");
  EXPECT_GE(1.0 - gate_infidelity(r, realize(r, NoiseRates::uniform(0.8), 1.5e4)), 0.99);
}

TEST(Recipe, ConvergesWithFrequency) {
  for (const char* name : {"phase_z", "rz", "rx", "rzz", "rzz_prime"}) {
    const GateRecipe r = recipe(name);
    const double lo = gate_infidelity(r, realize(r, NoiseRates::uniform(0.2), 1e3));
    const double hi = gate_infidelity(r, realize(r, NoiseRates::uniform(0.2), 1e5));
    EXPECT_LT(hi, lo) << name;
  }
}

TEST(Recipe, DecouplingFreezesToZero) {
  for (const char* name : {"decouple_heisenberg", "decouple_ising", "decouple_xy"}) {
    const GateRecipe r = recipe(name);
    EXPECT_FALSE(r.has_fixed_duration());
    const NoisyCycleSpec spec = r.cycle(NoiseRates{}, 1e4);
    const FixedState fs = fixed_state(spec);
    EXPECT_TRUE(fs.twirl_only);
    EXPECT_LT(effective_hamiltonian(spec.interaction(), fs.state).data().norm(), 1e-15) << name;
    EXPECT_THROW(realize(r, NoiseRates{}, 1e4), std::invalid_argument);
  }
}

TEST(Identities, ControlledZFromPhaseGates) {
  const SystemLayout two = SystemLayout::registers({"Q1", "Q2"});
  const SystemLayout q1 = SystemLayout::single("Q1"), q2 = SystemLayout::single("Q2");
  const ComplexMatrix rz1 = embed(rz_gate(q1), two), rz2 = embed(rz_gate(q2), two);
  const Matrix lhs = rz1.data().adjoint() * rz2.data().adjoint() * rzz_gate(two).data();
  EXPECT_LE(phase_aligned_distance(lhs, controlled_z(two).data()), 1e-7);
  const Matrix r4 = rz1.data().adjoint() * rz1.data().adjoint() * rz1.data().adjoint() * rz1.data().adjoint();
  EXPECT_LE(phase_aligned_distance(r4, Matrix::Identity(4, 4)), 1e-7);
}

TEST(Identities, ReadoutGateDisplayedForm) {
  const SystemLayout da = SystemLayout::registers({"d", "a"});
  const Matrix zd = pauli_product(da, {{"d", 'z'}}).data();
  const Matrix za = pauli_product(da, {{"a", 'z'}}).data();
  const Matrix id = Matrix::Identity(4, 4);
  const Matrix expect = 0.5 * (id - zd) - Complex(0, 0.5) * (id + zd) * za;
  EXPECT_LT((rzz_prime_gate(da).data() - expect).norm(), 1e-12);
  const Matrix product = embed(rz_gate(SystemLayout::single("a")), da).data() * rzz_gate(da).data();
  EXPECT_LT(phase_aligned_distance(product, expect), 1e-6);
}

TEST(Swap, IdentityHoldsOnlyAtSwapTime) {
  EXPECT_LE(swap_identity_check(), 1e-10);
  EXPECT_GT(swap_identity_deviation(0.5 * swap_time()), 0.1);
  EXPECT_NEAR(swap_time(), kPi / (2 * std::sqrt(2.0)), 1e-15);
}

TEST(Transfer, IdealIndependentOfAuxiliaryStates) {
  Rng rng(31);
  const SystemLayout p2 = SystemLayout::single("P2");
  const SystemLayout a = SystemLayout::single("A", Role::Actuator);
  const ComplexMatrix target = rzz_gate(SystemLayout::registers({"C1", "C2"}));
  const Channel ref = transfer_cphase_circuit(DensityMatrix::basis_state(p2, 0),
                                              DensityMatrix::pure(a, (basis(2, 0) + basis(2, 1)) / std::sqrt(2.0)),
                                              IdealTransfer{});
  EXPECT_NEAR(entanglement_fidelity(ref, target), 1.0, 1e-12);
  const Channel other =
      transfer_cphase_circuit(DensityMatrix::basis_state(p2, 1), DensityMatrix::basis_state(a, 1), IdealTransfer{});
  EXPECT_LE((other.superop() - ref.superop()).norm(), 1e-10);
  for (int k = 0; k < 4; ++k) {
    const Channel c = transfer_cphase_circuit(rng.state(p2), rng.state(a), IdealTransfer{});
    EXPECT_LE((c.superop() - ref.superop()).norm(), 1e-10);
  }
}

TEST(Transfer, FiniteFrequencyResidualIsSmall) {
  const SystemLayout p2 = SystemLayout::single("P2");
  const SystemLayout a = SystemLayout::single("A", Role::Actuator);
  const FiniteFrequencyTransfer mode{NoiseRates::uniform(0.1), 1e4};
  double worst = 0.0;
  const Channel ref = transfer_cphase_circuit(DensityMatrix::basis_state(p2, 0), DensityMatrix::basis_state(a, 0), mode);
  for (int s : {1, 2, 3}) {
    const Channel c = transfer_cphase_circuit(DensityMatrix::basis_state(p2, s & 1),
                                              DensityMatrix::basis_state(a, s >> 1), mode);
    worst = std::max(worst, (c.superop() - ref.superop()).norm());
  }
  RecordProperty("max_frobenius_residual", std::to_string(worst));
  EXPECT_LT(worst, 0.1);  // reported quantity; only sanity-bounded
  EXPECT_GT(entanglement_fidelity(ref, rzz_gate(SystemLayout::registers({"C1", "C2"}))), 0.99);
}

TEST(Transfer, RejectsMultiQubitInputs) {
  const SystemLayout two = SystemLayout::registers({"P2", "X"});
  const SystemLayout a = SystemLayout::single("A", Role::Actuator);
  EXPECT_THROW(transfer_cphase_circuit(DensityMatrix::maximally_mixed(two), DensityMatrix::maximally_mixed(a),
                                       IdealTransfer{}),
               LayoutError);
}

TEST(Noise, DepolarizingFamily) {
  const FrozenStates s = depolarizing_frozen_states(0.2);
  const NoiseAdmissibility n = noise_conditions(s.rho_i, s.rho_h, s.rho_s);
  EXPECT_NEAR(n.rho_i.pz, 0.4, 1e-12);
  EXPECT_NEAR(n.rho_h.px, 0.32, 1e-12);
  EXPECT_NEAR(n.cross_norm, 0.128, 1e-12);
  EXPECT_NEAR(n.trz_s, 0.8, 1e-12);
  EXPECT_TRUE(n.pass_c1);
  EXPECT_TRUE(n.pass_c2);
  for (int k = 1; k <= 9; ++k) {
    const FrozenStates f = depolarizing_frozen_states(0.1 * k);
    const NoiseAdmissibility m = noise_conditions(f.rho_i, f.rho_h, f.rho_s);
    EXPECT_TRUE(m.pass_c1 && m.pass_c2) << k;
  }
  const FrozenStates one = depolarizing_frozen_states(1.0);
  const NoiseAdmissibility m = noise_conditions(one.rho_i, one.rho_h, one.rho_s);
  EXPECT_FALSE(m.pass_c1);
  EXPECT_FALSE(m.pass_c2);
}

TEST(Noise, ParallelPolarizationFailsC1) {
  const SystemLayout a = SystemLayout::single("A", Role::Actuator);
  const DensityMatrix z = DensityMatrix::basis_state(a, 0);
  const NoiseAdmissibility n = noise_conditions(z, z, z);
  EXPECT_FALSE(n.pass_c1);
  EXPECT_TRUE(n.pass_c2);
}

}  // namespace
}  // namespace zenoqc
