// Copyright 2026 The leggett-audit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "leggett/bloch.hpp"

namespace leggett {

using Complex = std::complex<double>;

// Construction-time tolerance for norms, traces and Hermiticity checks.
inline constexpr double kConstructionTol = 1e-12;
// Tolerance for derived-quantity and statistical property checks.
inline constexpr double kPropertyTol = 1e-9;
// Eigenvalue floor absorbing round-off in positive-semidefinite checks.
inline constexpr double kPsdFloor = -1e-10;

/// Pauli matrix sigma_i. Index 0 is the identity, 1, 2, 3 are x, y, z.
const Eigen::Matrix2cd &pauli_matrix(int i);

/// Kronecker product with the first factor on the most significant index,
/// so the basis label of qubit 1 is the leftmost bit throughout.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// Normalized pure state of 1..4 qubits.
class PureState {
 public:
  /// Requires a 2^n component vector, n in 1..4, with unit norm within 1e-12.
  explicit PureState(Eigen::VectorXcd amplitudes);

  int num_qubits() const { return num_qubits_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Eigen::VectorXcd &amplitudes() const { return amplitudes_; }

 private:
  Eigen::VectorXcd amplitudes_;
  int num_qubits_;
};

/// Hermitian, positive semidefinite, unit-trace operator on 1..4 qubits.
class DensityOperator {
 public:
  /// Validates Hermiticity and trace within 1e-12 and eigenvalues >= -1e-10.
  explicit DensityOperator(Eigen::MatrixXcd matrix);

  static DensityOperator from_pure(const PureState &psi);

  int num_qubits() const { return num_qubits_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXcd &matrix() const { return matrix_; }

 private:
  Eigen::MatrixXcd matrix_;
  int num_qubits_;
};

/// Full four-qubit Pauli correlation tensor T_{ijkl} with i,j,k,l in 0..3.
/// Index 0 is the identity slot, so lower-weight marginals are embedded.
class CorrelationTensor {
 public:
  /// Entries in row-major (i,j,k,l) order. Validates T_{0000} = 1 within
  /// 1e-12 and every entry within [-1, 1] up to 1e-10.
  explicit CorrelationTensor(std::array<double, 256> entries);

  double entry(int i, int j, int k, int l) const;
  double operator()(int i, int j, int k, int l) const { return entry(i, j, k, l); }
  const std::array<double, 256> &entries() const { return entries_; }

  static int flat_index(int i, int j, int k, int l);

 private:
  std::array<double, 256> entries_;
};

/// Pauli correlation matrix T_{ij} of a two-qubit state. Row and column 0
/// hold the Bloch vectors of the two marginals, T_{00} = 1.
class TwoQubitTensor {
 public:
  explicit TwoQubitTensor(Eigen::Matrix4d entries);

  double entry(int i, int j) const;
  const Eigen::Matrix4d &matrix() const { return entries_; }

  /// Sum of squares of all 16 entries. Equals 4 for every pure state.
  double sum_sq_all() const;
  /// Sum of squares of the 9 correlation entries (i,j >= 1). Lies in [1,3]
  /// for pure states, 1 for products, 3 for maximally entangled states.
  double sum_sq_corr() const;
  /// Sum of absolute values of all 16 entries.
  double sum_abs_all() const;

 private:
  Eigen::Matrix4d entries_;
};

/// GHZ state (|0..0> + |1..1>)/sqrt(2) on n qubits, 2 <= n <= 4.
PureState ghz_state(int n);

/// Haar-random pure state of dimension 2 or 4, deterministic per seed.
PureState haar_pure(int dim, uint64_t seed);

/// Isotropic white-noise admixture (1-p) rho + p I / 2^n. Every
/// correlation-tensor entry of weight >= 1 scales by exactly (1-p).
DensityOperator mix_white_noise(const DensityOperator &rho, double p);

/// Reduced state of the first `keep` qubits.
DensityOperator partial_trace_keep_front(const DensityOperator &rho, int keep);

/// T_{ijkl} = tr(rho sigma_i x sigma_j x sigma_k x sigma_l). Four qubits only.
CorrelationTensor correlation_tensor(const DensityOperator &rho);

/// Rescales all weight >= 1 entries of a tensor by (1-p), the tensor-level
/// image of mix_white_noise.
CorrelationTensor apply_isotropic_noise(const CorrelationTensor &t, double p);

/// Contraction sum_{ijkl} w1_i w2_j w3_k w4_l T_{ijkl} with arbitrary
/// 4-component weights; component 0 multiplies the identity slot.
double contract(const CorrelationTensor &t, const Eigen::Vector4d &w1,
                const Eigen::Vector4d &w2, const Eigen::Vector4d &w3,
                const Eigen::Vector4d &w4);

/// Expectation of a product observable. Each slot is a unit measurement
/// direction or, when empty, the identity.
double expectation(const CorrelationTensor &t,
                   const std::array<std::optional<BlochVector>, 4> &dirs);

/// T_{ij} = <psi| sigma_i x sigma_j |psi> of a two-qubit pure state.
TwoQubitTensor two_qubit_tensor(const PureState &psi);

/// Same via the trace rule, for possibly mixed two-qubit states.
TwoQubitTensor two_qubit_tensor(const DensityOperator &rho);

/// Contraction w1^T T w2 of a two-qubit tensor with 4-component weights.
double pair_contract(const TwoQubitTensor &t, const Eigen::Vector4d &w1,
                     const Eigen::Vector4d &w2);

}  // namespace leggett
