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

#include "zenoqc/channels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace zenoqc {

namespace {

constexpr double kTraceDefectTol = 1e-10;
constexpr double kChoiNegativeTol = 1e-9;
constexpr double kUnitaryTol = 1e-10;
constexpr double kKrausCutoff = 1e-14;

Matrix kron_raw(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return out;
}

Matrix superop_of(const std::vector<Matrix>& ops, Eigen::Index d) {
  Matrix s = Matrix::Zero(d * d, d * d);
  for (const auto& k : ops) s += kron_raw(k.conjugate(), k);
  return s;
}

// Sparse form of an n-qubit Pauli string: P|i> = phase[i] |i ^ flip>.
struct SparsePauli {
  std::size_t flip = 0;
  std::vector<Complex> phase;
};

SparsePauli sparse_pauli(std::size_t index, std::size_t n) {
  const std::size_t d = std::size_t{1} << n;
  SparsePauli p;
  p.phase.assign(d, Complex(1.0));
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t digit = (index >> (2 * (n - 1 - k))) & 3u;
    const std::size_t bit = n - 1 - k;
    if (digit == 1 || digit == 2) p.flip |= std::size_t{1} << bit;
    for (std::size_t i = 0; i < d; ++i) {
      const bool one = (i >> bit) & 1u;
      if (digit == 2) p.phase[i] *= one ? Complex(0, -1) : Complex(0, 1);
      if (digit == 3 && one) p.phase[i] *= -1.0;
    }
  }
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Channel

Channel::Channel(SystemLayout layout, Matrix superop)
    : layout_(std::move(layout)), superop_(std::move(superop)) {
  const auto d2 = static_cast<Eigen::Index>(layout_.dim() * layout_.dim());
  if (superop_.rows() != d2 || superop_.cols() != d2) {
    throw LayoutError("superoperator dimension does not match layout");
  }
  if (!superop_.allFinite()) throw InvariantError("superoperator has non-finite entries");
}

Channel Channel::identity(const SystemLayout& layout) {
  const auto d2 = static_cast<Eigen::Index>(layout.dim() * layout.dim());
  return {layout, Matrix::Identity(d2, d2)};
}

double Channel::trace_preservation_defect() const {
  // Tr E(|i><j|) = sum_a S[a + d a, i + d j] must equal delta_ij.
  const auto d = static_cast<Eigen::Index>(dim());
  double worst = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Complex tr = 0.0;
      for (Eigen::Index a = 0; a < d; ++a) tr += superop_(a + d * a, i + d * j);
      worst = std::max(worst, std::abs(tr - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double Channel::min_choi_eigenvalue() const {
  const ComplexMatrix c = choi(*this);
  const Matrix h = 0.5 * (c.data() + c.data().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed on Choi matrix");
  return es.eigenvalues().minCoeff();
}

void Channel::validate() const {
  const double tp = trace_preservation_defect();
  if (tp > kTraceDefectTol) {
    throw InvariantError("channel not trace preserving (defect " + std::to_string(tp) + ")");
  }
  const double lam = min_choi_eigenvalue();
  if (lam < -kChoiNegativeTol) {
    throw InvariantError("channel not completely positive (Choi eigenvalue " +
                         std::to_string(lam) + ")");
  }
}

KrausSet::KrausSet(SystemLayout layout, std::vector<Matrix> ops)
    : layout_(std::move(layout)), ops_(std::move(ops)) {
  if (ops_.empty()) throw InvariantError("empty Kraus set");
  const auto d = static_cast<Eigen::Index>(layout_.dim());
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& k : ops_) {
    if (k.rows() != d || k.cols() != d) throw LayoutError("Kraus operator dimension");
    sum += k.adjoint() * k;
  }
  if ((sum - Matrix::Identity(d, d)).norm() > kTraceDefectTol) {
    throw InvariantError("Kraus operators do not sum to the identity");
  }
}

PauliErrorDistribution::PauliErrorDistribution(SystemLayout layout, std::vector<double> probs)
    : layout_(std::move(layout)), probs_(std::move(probs)) {
  const std::size_t expected = std::size_t{1} << (2 * layout_.num_qubits());
  if (probs_.size() != expected) throw LayoutError("Pauli distribution has wrong length");
  double total = 0.0;
  for (double p : probs_) {
    if (p < -1e-9) throw InvariantError("negative Pauli probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvariantError("Pauli probabilities do not sum to 1");
}

double PauliErrorDistribution::probability(std::string_view pauli_string) const {
  const std::size_t n = layout_.num_qubits();
  if (pauli_string.size() != n) throw LayoutError("Pauli string length mismatch");
  std::size_t index = 0;
  for (char c : pauli_string) {
    std::size_t digit = 0;
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'I': digit = 0; break;
      case 'X': digit = 1; break;
      case 'Y': digit = 2; break;
      case 'Z': digit = 3; break;
      default: throw LayoutError(std::string("bad Pauli letter '") + c + "'");
    }
    index = index * 4 + digit;
  }
  return probs_[index];
}

std::string PauliErrorDistribution::string_of(std::size_t index) const {
  const std::size_t n = layout_.num_qubits();
  std::string s(n, 'I');
  for (std::size_t k = 0; k < n; ++k) s[k] = "IXYZ"[(index >> (2 * (n - 1 - k))) & 3u];
  return s;
}

// ---------------------------------------------------------------------------
// Constructors

Channel depolarizing(double eps, const SystemLayout& layout, std::string_view target) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw LayoutError("depolarizing rate outside [0, 1]");
  const SystemLayout one = SystemLayout::single(std::string(target), layout.role_of(target));
  std::vector<Matrix> ops;
  ops.push_back(embed(ComplexMatrix(one, std::sqrt(1.0 - 0.75 * eps) * pauli('i')), layout).data());
  if (eps > 0.0) {
    for (char axis : {'x', 'y', 'z'}) {
      ops.push_back(embed(ComplexMatrix(one, std::sqrt(0.25 * eps) * pauli(axis)), layout).data());
    }
  }
  return from_kraus(KrausSet(layout, std::move(ops)));
}

Channel initialization(const SystemLayout& layout, std::string_view target) {
  const SystemLayout one = SystemLayout::single(std::string(target), layout.role_of(target));
  Matrix k0 = Matrix::Zero(2, 2);
  Matrix k1 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;  // |0><0|
  k1(0, 1) = 1.0;  // |0><1|
  return from_kraus(KrausSet(layout, {embed(ComplexMatrix(one, k0), layout).data(),
                                      embed(ComplexMatrix(one, k1), layout).data()}));
}

Channel unitary_channel(const ComplexMatrix& u) {
  const auto d = static_cast<Eigen::Index>(u.dim());
  if ((u.data() * u.data().adjoint() - Matrix::Identity(d, d)).norm() > kUnitaryTol) {
    throw InvariantError("unitary_channel: matrix is not unitary");
  }
  return {u.layout(), kron_raw(u.data().conjugate(), u.data())};
}

Channel from_kraus(const KrausSet& k) {
  return {k.layout(), superop_of(k.ops(), static_cast<Eigen::Index>(k.layout().dim()))};
}

Channel compose(const Channel& a, const Channel& b) {
  if (!(a.layout() == b.layout())) throw LayoutError("compose: layout mismatch");
  return {a.layout(), a.superop() * b.superop()};
}

ComplexMatrix apply(const Channel& e, const ComplexMatrix& m) {
  if (!(e.layout() == m.layout())) throw LayoutError("apply: layout mismatch");
  const auto d = static_cast<Eigen::Index>(m.dim());
  // Eigen storage is column-major, which is exactly column stacking.
  const Eigen::Map<const Vector> v(m.data().data(), d * d);
  Vector out = e.superop() * v;
  return {m.layout(), Eigen::Map<Matrix>(out.data(), d, d)};
}

DensityMatrix apply(const Channel& e, const DensityMatrix& rho) {
  return DensityMatrix::from_numerical(apply(e, rho.matrix()));
}

Channel embed(const Channel& e, const SystemLayout& full) {
  if (e.layout() == full) return e;
  const KrausSet ks = kraus(e);
  std::vector<Matrix> ops;
  ops.reserve(ks.ops().size());
  for (const auto& k : ks.ops()) ops.push_back(embed(ComplexMatrix(e.layout(), k), full).data());
  return {full, superop_of(ops, static_cast<Eigen::Index>(full.dim()))};
}

Matrix lift_map(const SystemLayout& kept, const DensityMatrix& environment,
                const SystemLayout& full) {
  const auto dk = static_cast<Eigen::Index>(kept.dim());
  const auto df = static_cast<Eigen::Index>(full.dim());
  const ComplexMatrix env = embed(environment.matrix(), full);
  Matrix out(df * df, dk * dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Matrix unit = Matrix::Zero(dk, dk);
      unit(i, j) = 1.0;
      // Operators on disjoint labels commute, so this is unit (x) environment.
      const Matrix lifted = embed(ComplexMatrix(kept, unit), full).data() * env.data();
      out.col(i + dk * j) = Eigen::Map<const Vector>(lifted.data(), df * df);
    }
  }
  return out;
}

Matrix trace_map(const SystemLayout& full, const SystemLayout& kept) {
  const auto dk = static_cast<Eigen::Index>(kept.dim());
  const auto df = static_cast<Eigen::Index>(full.dim());
  std::vector<std::string> traced;
  for (const auto& q : full.qubits()) {
    if (!kept.contains(q.label)) traced.push_back(q.label);
  }
  if (full.without(traced).labels() != kept.labels()) {
    throw LayoutError("trace_map: kept labels must appear in the same order as in the full layout");
  }
  Matrix out(dk * dk, df * df);
  for (Eigen::Index x = 0; x < df; ++x) {
    for (Eigen::Index y = 0; y < df; ++y) {
      Matrix unit = Matrix::Zero(df, df);
      unit(x, y) = 1.0;
      const Matrix reduced =
          traced.empty() ? unit : partial_trace(ComplexMatrix(full, unit), traced).data();
      out.col(x + df * y) = Eigen::Map<const Vector>(reduced.data(), dk * dk);
    }
  }
  return out;
}

Channel reduce(const Channel& e, const DensityMatrix& environment) {
  const SystemLayout kept = e.layout().without(environment.layout().labels());
  const Matrix s = trace_map(e.layout(), kept) * e.superop() *
                   lift_map(kept, environment, e.layout());
  return {kept, s};
}

// ---------------------------------------------------------------------------
// Representations

ComplexMatrix choi(const Channel& e) {
  const auto d = static_cast<Eigen::Index>(e.dim());
  const Matrix& s = e.superop();
  Matrix c(d * d, d * d);
  // C[(i,a),(j,b)] = E(|i><j|)[a,b] = S[a + d b, i + d j].
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) c(i * d + a, j * d + b) = s(a + d * b, i + d * j);
      }
    }
  }
  std::vector<Qubit> ref;
  for (const auto& q : e.layout().qubits()) ref.push_back({"ref:" + q.label, q.role});
  return {SystemLayout(std::move(ref)).concat(e.layout()), std::move(c)};
}

Channel from_choi(const ComplexMatrix& choi_matrix, const SystemLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.dim());
  const Matrix& c = choi_matrix.data();
  if (c.rows() != d * d) throw LayoutError("from_choi: dimension mismatch");
  Matrix s(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) s(a + d * b, i + d * j) = c(i * d + a, j * d + b);
      }
    }
  }
  return {layout, std::move(s)};
}

KrausSet kraus(const Channel& e) {
  const auto d = static_cast<Eigen::Index>(e.dim());
  const ComplexMatrix c = choi(e);
  const Matrix h = 0.5 * (c.data() + c.data().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed on Choi matrix");
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<Matrix> ops;
  for (Eigen::Index k = es.eigenvalues().size() - 1; k >= 0; --k) {
    const double lam = es.eigenvalues()(k);
    if (lam <= kKrausCutoff * scale) continue;
    Matrix op(d, d);
    // C = sum_k lam_k v_k v_k^dagger with v indexed (i, a)  =>  K[a, i] = sqrt(lam) v[i d + a].
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index a = 0; a < d; ++a) op(a, i) = std::sqrt(lam) * es.eigenvectors()(i * d + a, k);
    }
    ops.push_back(std::move(op));
  }
  return KrausSet(e.layout(), std::move(ops));
}

// ---------------------------------------------------------------------------
// Metrics

double entanglement_fidelity(const Channel& e, const ComplexMatrix& target) {
  if (!(e.layout() == target.layout())) throw LayoutError("fidelity: layout mismatch");
  const double d = static_cast<double>(e.dim());
  // sum_m |Tr(U^dagger K_m)|^2 / d^2 = Tr(S_U^dagger S) / d^2.
  const Matrix su = kron_raw(target.data().conjugate(), target.data());
  const double f = (su.conjugate().cwiseProduct(e.superop())).sum().real() / (d * d);
  return std::clamp(f, 0.0, 1.0);
}

PauliErrorDistribution pauli_twirl(const Channel& e) {
  const std::size_t n = e.layout().num_qubits();
  const std::size_t d = e.dim();
  const auto di = static_cast<Eigen::Index>(d);
  const std::size_t count = std::size_t{1} << (2 * n);
  const Matrix& s = e.superop();
  std::vector<double> probs(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    const SparsePauli p = sparse_pauli(idx, n);
    // Tr(S_P^dagger S) with S_P = conj(P) kron P, P[i ^ flip, i] = phase[i].
    Complex acc = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const auto a = static_cast<Eigen::Index>(i ^ p.flip);
        const auto b = static_cast<Eigen::Index>(j ^ p.flip);
        const Complex sp = std::conj(p.phase[j]) * p.phase[i];
        acc += std::conj(sp) * s(a + di * b, static_cast<Eigen::Index>(i) + di * static_cast<Eigen::Index>(j));
      }
    }
    probs[idx] = acc.real() / static_cast<double>(d * d);
  }
  return {e.layout(), std::move(probs)};
}

double marginal_error(const PauliErrorDistribution& dist, std::string_view qubit, char axis) {
  const std::size_t n = dist.layout().num_qubits();
  const std::size_t k = dist.layout().index_of(qubit);
  std::size_t own = 0;
  switch (std::tolower(static_cast<unsigned char>(axis))) {
    case 'x': own = 1; break;
    case 'y': own = 2; break;
    case 'z': own = 3; break;
    default: throw LayoutError(std::string("marginal_error: axis must be x, y or z, got '") + axis + "'");
  }
  double total = 0.0;
  const auto& probs = dist.probabilities();
  for (std::size_t idx = 0; idx < probs.size(); ++idx) {
    const std::size_t digit = (idx >> (2 * (n - 1 - k))) & 3u;
    if (digit != 0 && digit != own) total += probs[idx];
  }
  return total;
}

}  // namespace zenoqc
