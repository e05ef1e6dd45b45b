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

#include "zenoqc/qcore.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_set>

#include <Eigen/Eigenvalues>

namespace zenoqc {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kNegativeEigTol = 1e-10;
constexpr double kNumericalTraceDrift = 1e-9;

// Bit position (from the least significant end) of qubit `k` in a layout of
// `n` qubits.
inline std::size_t bit_of(std::size_t k, std::size_t n) { return n - 1 - k; }

// Splits every basis index of `full` into the index over `part` (in `part`'s
// label order) and the index over the remaining labels (in `full`'s order).
struct IndexSplit {
  std::vector<std::size_t> part;
  std::vector<std::size_t> rest;
};

IndexSplit split_indices(const SystemLayout& full, const std::vector<std::string>& part_labels) {
  const std::size_t n = full.num_qubits();
  std::vector<std::size_t> part_pos;
  part_pos.reserve(part_labels.size());
  for (const auto& l : part_labels) part_pos.push_back(full.index_of(l));
  std::vector<std::size_t> rest_pos;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::find(part_pos.begin(), part_pos.end(), k) == part_pos.end()) rest_pos.push_back(k);
  }

  IndexSplit out;
  out.part.resize(full.dim());
  out.rest.resize(full.dim());
  for (std::size_t x = 0; x < full.dim(); ++x) {
    std::size_t p = 0;
    for (std::size_t pos : part_pos) p = (p << 1) | ((x >> bit_of(pos, n)) & 1u);
    std::size_t r = 0;
    for (std::size_t pos : rest_pos) r = (r << 1) | ((x >> bit_of(pos, n)) & 1u);
    out.part[x] = p;
    out.rest[x] = r;
  }
  return out;
}

void check_dim(const SystemLayout& layout, const Matrix& m) {
  const auto d = static_cast<Eigen::Index>(layout.dim());
  if (m.rows() != d || m.cols() != d) {
    throw LayoutError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                      ", layout requires " + std::to_string(d) + "x" + std::to_string(d));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SystemLayout

SystemLayout::SystemLayout(std::vector<Qubit> qubits) : qubits_(std::move(qubits)) {
  if (qubits_.empty()) throw LayoutError("layout needs at least one qubit");
  if (qubits_.size() > 16) throw LayoutError("layout too large for dense simulation");
  std::unordered_set<std::string> seen;
  for (const auto& q : qubits_) {
    if (q.label.empty()) throw LayoutError("empty qubit label");
    if (!seen.insert(q.label).second) throw LayoutError("duplicate qubit label '" + q.label + "'");
  }
}

SystemLayout SystemLayout::registers(std::initializer_list<std::string> labels) {
  std::vector<Qubit> q;
  for (const auto& l : labels) q.push_back({l, Role::Register});
  return SystemLayout(std::move(q));
}

SystemLayout SystemLayout::actuators(std::initializer_list<std::string> labels) {
  std::vector<Qubit> q;
  for (const auto& l : labels) q.push_back({l, Role::Actuator});
  return SystemLayout(std::move(q));
}

SystemLayout SystemLayout::single(std::string label, Role role) {
  return SystemLayout({Qubit{std::move(label), role}});
}

std::vector<std::string> SystemLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(qubits_.size());
  for (const auto& q : qubits_) out.push_back(q.label);
  return out;
}

bool SystemLayout::contains(std::string_view label) const {
  return std::any_of(qubits_.begin(), qubits_.end(),
                     [&](const Qubit& q) { return q.label == label; });
}

std::size_t SystemLayout::index_of(std::string_view label) const {
  for (std::size_t k = 0; k < qubits_.size(); ++k) {
    if (qubits_[k].label == label) return k;
  }
  throw LayoutError("unknown qubit label '" + std::string(label) + "'");
}

Role SystemLayout::role_of(std::string_view label) const { return qubits_[index_of(label)].role; }

SystemLayout SystemLayout::concat(const SystemLayout& other) const {
  std::vector<Qubit> q = qubits_;
  q.insert(q.end(), other.qubits_.begin(), other.qubits_.end());
  return SystemLayout(std::move(q));
}

SystemLayout SystemLayout::select(std::span<const std::string> labels) const {
  for (const auto& l : labels) (void)index_of(l);
  std::vector<Qubit> q;
  for (const auto& qb : qubits_) {
    if (std::find(labels.begin(), labels.end(), qb.label) != labels.end()) q.push_back(qb);
  }
  return SystemLayout(std::move(q));
}

SystemLayout SystemLayout::without(std::span<const std::string> labels) const {
  for (const auto& l : labels) (void)index_of(l);
  std::vector<Qubit> q;
  for (const auto& qb : qubits_) {
    if (std::find(labels.begin(), labels.end(), qb.label) == labels.end()) q.push_back(qb);
  }
  return SystemLayout(std::move(q));
}

std::vector<std::string> SystemLayout::labels_with(Role role) const {
  std::vector<std::string> out;
  for (const auto& q : qubits_) {
    if (q.role == role) out.push_back(q.label);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ComplexMatrix and friends

ComplexMatrix::ComplexMatrix(SystemLayout layout, Matrix data)
    : layout_(std::move(layout)), data_(std::move(data)) {
  check_dim(layout_, data_);
  if (!data_.allFinite()) throw InvariantError("matrix has non-finite entries");
}

ComplexMatrix ComplexMatrix::identity(const SystemLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.dim());
  return {layout, Matrix::Identity(d, d)};
}

ComplexMatrix ComplexMatrix::zero(const SystemLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.dim());
  return {layout, Matrix::Zero(d, d)};
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!(a.layout_ == b.layout_)) throw LayoutError("layout mismatch in product");
  return {a.layout_, a.data_ * b.data_};
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!(a.layout_ == b.layout_)) throw LayoutError("layout mismatch in sum");
  return {a.layout_, a.data_ + b.data_};
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!(a.layout_ == b.layout_)) throw LayoutError("layout mismatch in difference");
  return {a.layout_, a.data_ - b.data_};
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) { return {a.layout_, s * a.data_}; }

HermitianOperator::HermitianOperator(ComplexMatrix h) : h_(std::move(h)) {
  const double defect = (h_.data() - h_.data().adjoint()).norm();
  if (defect > kHermitianTol) {
    throw InvariantError("operator is not Hermitian (defect " + std::to_string(defect) + ")");
  }
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(a.h_ + b.h_);
}

HermitianOperator operator*(double s, const HermitianOperator& a) {
  return HermitianOperator(Complex(s) * a.h_);
}

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
  const Matrix& m = rho_.data();
  if ((m - m.adjoint()).norm() > kHermitianTol) throw InvariantError("density matrix not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw InvariantError("density matrix trace is " + std::to_string(tr.real()));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw InvariantError("eigensolver failed on density matrix");
  if (es.eigenvalues().minCoeff() < -kNegativeEigTol) {
    throw InvariantError("density matrix has negative eigenvalue " +
                         std::to_string(es.eigenvalues().minCoeff()));
  }
}

DensityMatrix DensityMatrix::from_numerical(const ComplexMatrix& rho) {
  const Matrix& m = rho.data();
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kNumericalTraceDrift) {
    throw InvariantError("state trace drifted to " + std::to_string(tr.real()));
  }
  Matrix h = 0.5 * (m + m.adjoint());
  h /= h.trace().real();
  return DensityMatrix(ComplexMatrix(rho.layout(), std::move(h)));
}

DensityMatrix DensityMatrix::maximally_mixed(const SystemLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.dim());
  return DensityMatrix(ComplexMatrix(layout, Matrix::Identity(d, d) / static_cast<double>(d)));
}

DensityMatrix DensityMatrix::basis_state(const SystemLayout& layout, std::size_t index) {
  if (index >= layout.dim()) throw LayoutError("basis index out of range");
  const auto d = static_cast<Eigen::Index>(layout.dim());
  Matrix m = Matrix::Zero(d, d);
  m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
  return DensityMatrix(ComplexMatrix(layout, std::move(m)));
}

DensityMatrix DensityMatrix::pure(const SystemLayout& layout, const Vector& psi) {
  if (psi.size() != static_cast<Eigen::Index>(layout.dim())) throw LayoutError("state vector size");
  const Vector v = psi / psi.norm();
  return DensityMatrix(ComplexMatrix(layout, v * v.adjoint()));
}

// ---------------------------------------------------------------------------
// Operations

Matrix pauli(char axis) {
  Matrix m(2, 2);
  switch (std::tolower(static_cast<unsigned char>(axis))) {
    case 'i':
      m << 1, 0, 0, 1;
      break;
    case 'x':
      m << 0, 1, 1, 0;
      break;
    case 'y':
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 'z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw LayoutError(std::string("unknown Pauli axis '") + axis + "'");
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  SystemLayout layout = a.layout().concat(b.layout());
  const Matrix& x = a.data();
  const Matrix& y = b.data();
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return {std::move(layout), std::move(out)};
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::string> over) {
  const SystemLayout kept = m.layout().without(over);  // throws on unknown label / empty result
  const std::vector<std::string> traced(over.begin(), over.end());
  const IndexSplit split = split_indices(m.layout(), traced);

  const auto d = static_cast<Eigen::Index>(m.dim());
  const auto dk = static_cast<Eigen::Index>(kept.dim());
  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& src = m.data();
  for (Eigen::Index x = 0; x < d; ++x) {
    for (Eigen::Index y = 0; y < d; ++y) {
      if (split.part[x] == split.part[y]) {
        out(static_cast<Eigen::Index>(split.rest[x]), static_cast<Eigen::Index>(split.rest[y])) +=
            src(x, y);
      }
    }
  }
  return {kept, std::move(out)};
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> over) {
  return DensityMatrix::from_numerical(partial_trace(rho.matrix(), over));
}

ComplexMatrix expm_hermitian(const HermitianOperator& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.data());
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const Eigen::VectorXd& w = es.eigenvalues();
  Vector phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phases(k) = std::polar(1.0, -w(k) * t);
  const Matrix& v = es.eigenvectors();
  return {h.layout(), v * phases.asDiagonal() * v.adjoint()};
}

BlochVector bloch_vector(const DensityMatrix& rho) {
  if (rho.layout().num_qubits() != 1) throw LayoutError("bloch_vector needs a single qubit");
  const Matrix& m = rho.data();
  // rho = 1/2 + sum_k p_k sigma_k  =>  p_k = Tr(sigma_k rho) / 2.
  return {
      0.5 * (pauli('x') * m).trace().real(),
      0.5 * (pauli('y') * m).trace().real(),
      0.5 * (pauli('z') * m).trace().real(),
  };
}

DensityMatrix from_bloch(const BlochVector& p, const SystemLayout& layout) {
  if (layout.num_qubits() != 1) throw LayoutError("from_bloch needs a single-qubit layout");
  Matrix m = 0.5 * pauli('i') + p.px * pauli('x') + p.py * pauli('y') + p.pz * pauli('z');
  return DensityMatrix(ComplexMatrix(layout, std::move(m)));
}

ComplexMatrix embed(const ComplexMatrix& op, const SystemLayout& full) {
  const std::vector<std::string> labels = op.layout().labels();
  const IndexSplit split = split_indices(full, labels);
  const auto d = static_cast<Eigen::Index>(full.dim());
  Matrix out = Matrix::Zero(d, d);
  const Matrix& src = op.data();
  for (Eigen::Index x = 0; x < d; ++x) {
    for (Eigen::Index y = 0; y < d; ++y) {
      if (split.rest[x] == split.rest[y]) {
        out(x, y) = src(static_cast<Eigen::Index>(split.part[x]),
                        static_cast<Eigen::Index>(split.part[y]));
      }
    }
  }
  return {full, std::move(out)};
}

ComplexMatrix pauli_product(const SystemLayout& layout,
                            std::initializer_list<std::pair<std::string, char>> factors) {
  ComplexMatrix out = ComplexMatrix::identity(layout);
  for (const auto& [label, axis] : factors) {
    out = out * embed(ComplexMatrix(SystemLayout::single(label, layout.role_of(label)), pauli(axis)),
                      layout);
  }
  return out;
}

double frobenius_distance(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

double phase_aligned_distance(const Matrix& a, const Matrix& b) {
  const double overlap = std::abs((b.adjoint() * a).trace());
  const double sq = a.squaredNorm() + b.squaredNorm() - 2.0 * overlap;
  return std::sqrt(std::max(sq, 0.0));
}

}  // namespace zenoqc
