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
/// Dense complex linear algebra over labeled multi-qubit systems.
///
/// Conventions used throughout the library:
///  - natural units, hbar = 1 and J = 1; a frequency quoted in units of J/h
///    corresponds to a period of 2*pi / f in internal time units;
///  - the order of labels in a SystemLayout is the tensor order, and the
///    leftmost label is the most significant bit of a basis index.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace zenoqc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

/// Thrown for violated preconditions on labels, dimensions and ranges.
class LayoutError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a value fails one of its type invariants.
class InvariantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Role { Register, Actuator };

struct Qubit {
  std::string label;
  Role role = Role::Register;

  bool operator==(const Qubit&) const = default;
};

/// Ordered list of named qubits. Labels are unique and there is at least one.
class SystemLayout {
 public:
  explicit SystemLayout(std::vector<Qubit> qubits);

  /// All-register layout with the given labels.
  static SystemLayout registers(std::initializer_list<std::string> labels);
  static SystemLayout actuators(std::initializer_list<std::string> labels);
  static SystemLayout single(std::string label, Role role = Role::Register);

  std::size_t num_qubits() const { return qubits_.size(); }
  std::size_t dim() const { return std::size_t{1} << qubits_.size(); }
  const std::vector<Qubit>& qubits() const { return qubits_; }
  std::vector<std::string> labels() const;

  bool contains(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;
  Role role_of(std::string_view label) const;

  /// This layout followed by `other`; throws on a label collision.
  SystemLayout concat(const SystemLayout& other) const;
  /// Sub-layout holding `labels`, in this layout's order.
  SystemLayout select(std::span<const std::string> labels) const;
  /// Sub-layout without `labels`, in this layout's order.
  SystemLayout without(std::span<const std::string> labels) const;
  /// Labels carrying `role`, in layout order. May be empty.
  std::vector<std::string> labels_with(Role role) const;

  bool operator==(const SystemLayout&) const = default;

 private:
  std::vector<Qubit> qubits_;
};

/// Square complex matrix acting on a SystemLayout.
class ComplexMatrix {
 public:
  ComplexMatrix(SystemLayout layout, Matrix data);

  static ComplexMatrix identity(const SystemLayout& layout);
  static ComplexMatrix zero(const SystemLayout& layout);

  const SystemLayout& layout() const { return layout_; }
  const Matrix& data() const { return data_; }
  std::size_t dim() const { return layout_.dim(); }

  ComplexMatrix adjoint() const { return {layout_, data_.adjoint()}; }
  Complex trace() const { return data_.trace(); }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  SystemLayout layout_;
  Matrix data_;
};

/// Hermitian operator, ||H - H^dagger||_F <= 1e-12. Energies in units of J.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix h);

  const ComplexMatrix& matrix() const { return h_; }
  const SystemLayout& layout() const { return h_.layout(); }
  const Matrix& data() const { return h_.data(); }

  friend HermitianOperator operator+(const HermitianOperator& a,
                                     const HermitianOperator& b);
  friend HermitianOperator operator*(double s, const HermitianOperator& a);

 private:
  ComplexMatrix h_;
};

/// Positive semidefinite, unit-trace operator.
///
/// The constructor checks: Hermitian to 1e-12, trace 1 to 1e-12, smallest
/// eigenvalue >= -1e-10. `from_numerical` first symmetrizes and renormalizes
/// results of long numerical pipelines whose trace drifted by at most 1e-9.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix rho);
  static DensityMatrix from_numerical(const ComplexMatrix& rho);

  static DensityMatrix maximally_mixed(const SystemLayout& layout);
  /// |index><index| in the computational basis.
  static DensityMatrix basis_state(const SystemLayout& layout, std::size_t index);
  static DensityMatrix pure(const SystemLayout& layout, const Vector& psi);

  const ComplexMatrix& matrix() const { return rho_; }
  const SystemLayout& layout() const { return rho_.layout(); }
  const Matrix& data() const { return rho_.data(); }

 private:
  ComplexMatrix rho_;
};

/// Bloch components of a single-qubit state, normalized as the coefficients
/// in rho = 1/2 + px X + py Y + pz Z, so each lies in [-1/2, 1/2].
/// NOTE: this is half of the usual Tr(sigma rho) convention.
struct BlochVector {
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;
};

/// Pauli matrix for axis 'i', 'x', 'y' or 'z' (upper case accepted).
Matrix pauli(char axis);

/// Tensor product; `a`'s labels precede `b`'s. Throws LayoutError on collision.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace over the qubits named in `over`. At least one qubit must remain.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::string> over);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> over);

/// exp(-i H t) via Hermitian eigendecomposition.
ComplexMatrix expm_hermitian(const HermitianOperator& h, double t);

BlochVector bloch_vector(const DensityMatrix& rho);
DensityMatrix from_bloch(const BlochVector& p, const SystemLayout& layout);

/// Extends `op` to `full` with the identity on every label `op` does not carry.
/// The labels of `op` may appear in `full` in any order.
ComplexMatrix embed(const ComplexMatrix& op, const SystemLayout& full);

/// Product of single-qubit Paulis, e.g. {{"A", 'x'}, {"Q", 'x'}}, identity
/// elsewhere on `layout`.
ComplexMatrix pauli_product(const SystemLayout& layout,
                            std::initializer_list<std::pair<std::string, char>> factors);

double frobenius_distance(const Matrix& a, const Matrix& b);

/// min over phi of ||a - e^{i phi} b||_F.
double phase_aligned_distance(const Matrix& a, const Matrix& b);

}  // namespace zenoqc
