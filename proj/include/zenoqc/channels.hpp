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
/// Quantum channels held as superoperator matrices.
///
/// Vectorization is column stacking: vec(rho)[i + d*j] = rho(i, j), so that
/// vec(A rho B) = (B^T kron A) vec(rho). A channel with Kraus operators K_m
/// has superoperator sum_m conj(K_m) kron K_m.
///
/// The Choi matrix is normalized as sum_{ij} |i><j| (x) E(|i><j|), i.e. it has
/// trace d and its first tensor factor is the reference system.

#include <string>
#include <string_view>
#include <vector>

#include "zenoqc/qcore.hpp"

namespace zenoqc {

/// Completely positive trace-preserving map on a layout.
///
/// Factory functions produce valid channels; the raw constructor only checks
/// dimensions, call `validate()` to check trace preservation (1e-10) and
/// complete positivity (Choi eigenvalues >= -1e-9).
class Channel {
 public:
  Channel(SystemLayout layout, Matrix superop);

  static Channel identity(const SystemLayout& layout);

  const SystemLayout& layout() const { return layout_; }
  const Matrix& superop() const { return superop_; }
  std::size_t dim() const { return layout_.dim(); }

  double trace_preservation_defect() const;
  double min_choi_eigenvalue() const;
  void validate() const;

 private:
  SystemLayout layout_;
  Matrix superop_;
};

/// Kraus operators {K_m} with sum K_m^dagger K_m = 1 to 1e-10.
class KrausSet {
 public:
  KrausSet(SystemLayout layout, std::vector<Matrix> ops);

  const SystemLayout& layout() const { return layout_; }
  const std::vector<Matrix>& ops() const { return ops_; }

 private:
  SystemLayout layout_;
  std::vector<Matrix> ops_;
};

/// Probability for each Pauli string on the layout.
///
/// Strings are indexed in base 4 with the leftmost qubit most significant and
/// digits I=0, X=1, Y=2, Z=3.
class PauliErrorDistribution {
 public:
  PauliErrorDistribution(SystemLayout layout, std::vector<double> probs);

  const SystemLayout& layout() const { return layout_; }
  const std::vector<double>& probabilities() const { return probs_; }

  /// Probability of a string such as "IZ" (one letter per qubit, layout order).
  double probability(std::string_view pauli_string) const;
  std::string string_of(std::size_t index) const;

 private:
  SystemLayout layout_;
  std::vector<double> probs_;
};

Channel depolarizing(double eps, const SystemLayout& layout, std::string_view target);
Channel initialization(const SystemLayout& layout, std::string_view target);
Channel unitary_channel(const ComplexMatrix& u);
Channel from_kraus(const KrausSet& kraus);

/// a after b.
Channel compose(const Channel& a, const Channel& b);
ComplexMatrix apply(const Channel& e, const ComplexMatrix& m);
DensityMatrix apply(const Channel& e, const DensityMatrix& rho);

/// Extends `e` to `full`, acting as the identity on labels `e` does not carry.
Channel embed(const Channel& e, const SystemLayout& full);

/// Matrix of vec(rho) -> vec(rho (x) environment), where rho lives on `kept`
/// and the result on `full` (which carries kept and environment labels).
Matrix lift_map(const SystemLayout& kept, const DensityMatrix& environment,
                const SystemLayout& full);
/// Matrix of vec(X) -> vec(Tr_{full minus kept} X).
Matrix trace_map(const SystemLayout& full, const SystemLayout& kept);
/// Tr_env[E(rho (x) environment)] on the labels of `e` outside `environment`.
Channel reduce(const Channel& e, const DensityMatrix& environment);

ComplexMatrix choi(const Channel& e);
Channel from_choi(const ComplexMatrix& choi_matrix, const SystemLayout& layout);
KrausSet kraus(const Channel& e);

/// <Phi| (id (x) U^dagger o E)(|Phi><Phi|) |Phi>, with |Phi> maximally entangled.
double entanglement_fidelity(const Channel& e, const ComplexMatrix& target);

PauliErrorDistribution pauli_twirl(const Channel& e);

/// Total probability of strings whose factor on `qubit` anticommutes with the
/// Pauli `axis` (for 'x': the Y and Z factors).
double marginal_error(const PauliErrorDistribution& dist, std::string_view qubit, char axis);

}  // namespace zenoqc
