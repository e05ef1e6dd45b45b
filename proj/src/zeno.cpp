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

#include "zenoqc/zeno.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zenoqc/parallel.hpp"

namespace zenoqc {

namespace {

constexpr double kProjectorTol = 1e-10;
constexpr double kChoiNegativeTol = 1e-9;
constexpr double kTraceDefectTol = 1e-10;

void check_rate(double eps, const char* what) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw LayoutError(std::string(what) + " depolarizing rate outside [0, 1]");
  }
}

Matrix hadamard() {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

}  // namespace

ActuatorOp noisy_initialization(const std::string& actuator, double eps) {
  check_rate(eps, "initialization");
  const SystemLayout one = SystemLayout::single(actuator, Role::Actuator);
  return {ActuatorOpKind::Initialization,
          compose(depolarizing(eps, one, actuator), initialization(one, actuator))};
}

ActuatorOp noisy_unitary(const std::string& actuator, const Matrix& u2, double eps) {
  check_rate(eps, "unitary");
  const SystemLayout one = SystemLayout::single(actuator, Role::Actuator);
  return {ActuatorOpKind::Unitary,
          compose(depolarizing(eps, one, actuator), unitary_channel(ComplexMatrix(one, u2)))};
}

ActuatorOp twirl(const std::string& actuator) {
  const SystemLayout one = SystemLayout::single(actuator, Role::Actuator);
  return {ActuatorOpKind::Twirl, depolarizing(1.0, one, actuator)};
}

// ---------------------------------------------------------------------------
// NoisyCycleSpec

NoisyCycleSpec::NoisyCycleSpec(HermitianOperator interaction, std::vector<ActuatorOp> ops,
                               double freq_over_h, CycleRates rates)
    : interaction_(std::move(interaction)), ops_(std::move(ops)), freq_(freq_over_h), rates_(rates) {
  if (!(freq_ > 0.0) || !std::isfinite(freq_)) throw LayoutError("frequency must be positive");
  check_rate(rates_.init, "initialization");
  check_rate(rates_.unitary, "unitary");
  const auto& layout = interaction_.layout();
  if (layout.labels_with(Role::Actuator).empty()) throw LayoutError("cycle has no actuator qubit");
  if (layout.labels_with(Role::Register).empty()) throw LayoutError("cycle has no register qubit");
  for (const auto& op : ops_) {
    for (const auto& q : op.channel.layout().qubits()) {
      if (!layout.contains(q.label) || layout.role_of(q.label) != Role::Actuator) {
        throw LayoutError("actuator op touches non-actuator label '" + q.label + "'");
      }
    }
  }
}

double NoisyCycleSpec::period() const { return 2.0 * kPi / freq_; }

SystemLayout NoisyCycleSpec::actuator_layout() const {
  return layout().select(layout().labels_with(Role::Actuator));
}

SystemLayout NoisyCycleSpec::register_layout() const {
  return layout().select(layout().labels_with(Role::Register));
}

NoisyCycleSpec init_cycle(const HermitianOperator& h, double eps_i, double freq_over_h) {
  std::vector<ActuatorOp> ops;
  for (const auto& a : h.layout().labels_with(Role::Actuator)) {
    ops.push_back(noisy_initialization(a, eps_i));
  }
  return NoisyCycleSpec(h, std::move(ops), freq_over_h, {eps_i, 0.0});
}

NoisyCycleSpec init_hadamard_cycle(const HermitianOperator& h, double eps_i, double eps_h,
                                   double freq_over_h) {
  std::vector<ActuatorOp> ops;
  for (const auto& a : h.layout().labels_with(Role::Actuator)) {
    ops.push_back(noisy_initialization(a, eps_i));
    ops.push_back(noisy_unitary(a, hadamard(), eps_h));
  }
  return NoisyCycleSpec(h, std::move(ops), freq_over_h, {eps_i, eps_h});
}

NoisyCycleSpec twirl_cycle(const HermitianOperator& h, double freq_over_h) {
  std::vector<ActuatorOp> ops;
  for (const auto& a : h.layout().labels_with(Role::Actuator)) ops.push_back(twirl(a));
  return NoisyCycleSpec(h, std::move(ops), freq_over_h, {0.0, 0.0});
}

// ---------------------------------------------------------------------------
// Fixed states and effective Hamiltonians

Channel actuator_period_map(const NoisyCycleSpec& spec) {
  const SystemLayout act = spec.actuator_layout();
  Channel p = Channel::identity(act);
  for (const auto& op : spec.ops()) p = compose(embed(op.channel, act), p);
  return p;
}

FixedState fixed_state(const NoisyCycleSpec& spec) {
  const bool twirl_only = std::all_of(spec.ops().begin(), spec.ops().end(), [](const ActuatorOp& op) {
    return op.kind == ActuatorOpKind::Twirl;
  });
  const SystemLayout act = spec.actuator_layout();
  DensityMatrix rho = apply(actuator_period_map(spec), DensityMatrix::maximally_mixed(act));
  return {std::move(rho), twirl_only};
}

ProjectorCheck verify_projector(const NoisyCycleSpec& spec) {
  const Matrix p = actuator_period_map(spec).superop();
  const double defect = (p * p - p).norm();
  return {defect <= kProjectorTol, defect};
}

HermitianOperator effective_hamiltonian(const HermitianOperator& h, const DensityMatrix& rho_u) {
  const SystemLayout& full = h.layout();
  for (const auto& q : rho_u.layout().qubits()) {
    if (!full.contains(q.label) || full.role_of(q.label) != Role::Actuator) {
      throw LayoutError("effective_hamiltonian: state label '" + q.label +
                        "' is not an actuator of the interaction");
    }
  }
  const std::vector<std::string> act = rho_u.layout().labels();
  if (act.size() != full.labels_with(Role::Actuator).size()) {
    throw LayoutError("effective_hamiltonian: state must cover every actuator");
  }
  const ComplexMatrix product = embed(rho_u.matrix(), full) * h.matrix();
  const ComplexMatrix reduced = partial_trace(product, act);
  // Hermitian up to round-off; symmetrize so long products stay within tolerance.
  const Matrix sym = 0.5 * (reduced.data() + reduced.data().adjoint());
  return HermitianOperator(ComplexMatrix(reduced.layout(), sym));
}

// ---------------------------------------------------------------------------
// Finite-frequency channels

std::uint64_t period_count(double t, double freq_over_h) {
  if (!(t >= 0.0) || !(freq_over_h > 0.0)) throw LayoutError("period_count: bad arguments");
  const double x = t * freq_over_h / (2.0 * kPi);
  return static_cast<std::uint64_t>(std::floor(x * (1.0 + 1e-12)));
}

Channel period_map(const NoisyCycleSpec& spec) {
  const SystemLayout& full = spec.layout();
  Channel m = Channel::identity(full);
  for (const auto& op : spec.ops()) m = compose(embed(op.channel, full), m);
  const Channel free = unitary_channel(expm_hermitian(spec.interaction(), spec.period()));
  return compose(free, m);
}

Channel realize_periods(const NoisyCycleSpec& spec, std::uint64_t periods) {
  const SystemLayout& full = spec.layout();
  const SystemLayout reg = spec.register_layout();
  const DensityMatrix env = DensityMatrix::maximally_mixed(spec.actuator_layout());

  // Right-to-left binary exponentiation, applied to the lifted register basis
  // so only the squarings touch full-size matrices.
  Matrix x = lift_map(reg, env, full);
  Matrix power = period_map(spec).superop();
  std::uint64_t n = periods;
  while (n > 0) {
    if (n & 1u) x = power * x;
    n >>= 1;
    if (n > 0) power = power * power;
  }
  return {reg, trace_map(full, reg) * x};
}

NocoResult noco_channel(const NoisyCycleSpec& spec, double t) {
  if (!(t > 0.0)) throw LayoutError("noco_channel: duration must be positive");
  const std::uint64_t n = period_count(t, spec.freq_over_h());
  if (n == 0) throw LayoutError("noco_channel: duration shorter than one period");

  Channel realized = realize_periods(spec, n);
  // Squaring round-off grows linearly in N; real defects are O(1).
  const double trace_tol = std::max(kTraceDefectTol, 1e-15 * static_cast<double>(n));
  if (realized.trace_preservation_defect() > trace_tol ||
      realized.min_choi_eigenvalue() < -kChoiNegativeTol) {
    throw InvariantError("noco_channel: realized map drifted outside the CPTP set");
  }

  const FixedState fixed = fixed_state(spec);
  const HermitianOperator h_eff = effective_hamiltonian(spec.interaction(), fixed.state);
  ComplexMatrix target = expm_hermitian(h_eff, t);
  Channel ideal = unitary_channel(target);
  Channel error = compose(realized, unitary_channel(target.adjoint()));

  return NocoResult{std::move(realized),
                    std::move(ideal),
                    std::move(error),
                    std::move(target),
                    n,
                    t,
                    static_cast<double>(n) * spec.period()};
}

std::vector<SurfacePoint> infidelity_surface(const CycleFactory& factory,
                                             std::span<const double> eps_grid,
                                             std::span<const double> freq_grid,
                                             const ComplexMatrix& target, std::size_t workers) {
  if (eps_grid.empty() || freq_grid.empty()) throw LayoutError("infidelity_surface: empty grid");
  const std::size_t nf = freq_grid.size();
  return parallel_map(eps_grid.size() * nf, workers, [&](std::size_t k) {
    const double eps = eps_grid[k / nf];
    const double freq = freq_grid[k % nf];
    const auto [spec, t] = factory(eps, freq);
    const NocoResult r = noco_channel(spec, t);
    return SurfacePoint{eps, freq, 1.0 - entanglement_fidelity(r.realized, target), r.periods};
  });
}

}  // namespace zenoqc
