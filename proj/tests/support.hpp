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

// Seeded generators for property tests.

#include <random>
#include <vector>

#include "zenoqc/channels.hpp"
#include "zenoqc/qcore.hpp"

namespace zenoqc::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }

  Matrix gaussian(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(), normal());
    return m;
  }

  // Haar unitary via QR with the phase fix on R's diagonal.
  Matrix unitary(Eigen::Index d) {
    Eigen::HouseholderQR<Matrix> qr(gaussian(d, d));
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR();
    for (Eigen::Index k = 0; k < d; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
    return q;
  }

  DensityMatrix state(const SystemLayout& l) {
    const Matrix g = gaussian(l.dim(), l.dim());
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    return DensityMatrix::from_numerical(ComplexMatrix(l, rho));
  }

  Vector pure_vector(Eigen::Index d) {
    Vector v = gaussian(d, 1);
    return v / v.norm();
  }

  ComplexMatrix operator_on(const SystemLayout& l) { return {l, gaussian(l.dim(), l.dim())}; }

  HermitianOperator hermitian(const SystemLayout& l) {
    const Matrix g = gaussian(l.dim(), l.dim());
    return HermitianOperator(ComplexMatrix(l, 0.5 * (g + g.adjoint())));
  }

  // Random channel from a Stinespring isometry with `kraus_count` outputs.
  Channel channel(const SystemLayout& l, int kraus_count = 3) {
    const Eigen::Index d = static_cast<Eigen::Index>(l.dim());
    const Matrix u = unitary(d * kraus_count);
    std::vector<Matrix> ks;
    for (int k = 0; k < kraus_count; ++k) ks.push_back(u.block(k * d, 0, d, d));
    return from_kraus(KrausSet(l, ks));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace zenoqc::testing
