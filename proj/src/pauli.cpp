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

#include "leggett/pauli.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "leggett/rng.hpp"

namespace leggett {

namespace {

constexpr Complex kI = Complex(0.0, 1.0);

int qubit_count_for_dim(Eigen::Index dim, const char *what) {
  for (int n = 1; n <= 4; ++n) {
    if (dim == (Eigen::Index{1} << n)) return n;
  }
  throw std::domain_error(std::string(what) +
                          ": dimension must be 2^n with n in 1..4, got " +
                          std::to_string(dim));
}

void check_pauli_index(int i) {
  if (i < 0 || i > 3) {
    throw std::domain_error("pauli index must be in 0..3, got " + std::to_string(i));
  }
}

// Cached sigma_i x sigma_j blocks for two-qubit expectation values.
const std::array<Eigen::Matrix4cd, 16> &pauli_pairs() {
  static const std::array<Eigen::Matrix4cd, 16> pairs = [] {
    std::array<Eigen::Matrix4cd, 16> out;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        out[i * 4 + j] = kron(pauli_matrix(i), pauli_matrix(j));
      }
    }
    return out;
  }();
  return pairs;
}

}  // namespace

const Eigen::Matrix2cd &pauli_matrix(int i) {
  check_pauli_index(i);
  static const std::array<Eigen::Matrix2cd, 4> sigma = [] {
    std::array<Eigen::Matrix2cd, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -kI, kI, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma[i];
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

BlochVector::BlochVector(double x, double y, double z) : v_(x, y, z) {
  if (std::abs(v_.norm() - 1.0) > 1e-9) {
    throw std::domain_error("BlochVector: direction must have unit norm");
  }
}

BlochVector::BlochVector(const Eigen::Vector3d &v) : BlochVector(v[0], v[1], v[2]) {}

PureState::PureState(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)),
      num_qubits_(qubit_count_for_dim(amplitudes_.size(), "PureState")) {
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > kConstructionTol) {
    throw std::domain_error("PureState: amplitudes must be normalized");
  }
}

DensityOperator::DensityOperator(Eigen::MatrixXcd matrix)
    : matrix_(std::move(matrix)),
      num_qubits_(qubit_count_for_dim(matrix_.rows(), "DensityOperator")) {
  if (matrix_.rows() != matrix_.cols()) {
    throw std::domain_error("DensityOperator: matrix must be square");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kConstructionTol) {
    throw std::domain_error("DensityOperator: matrix must be Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > kConstructionTol) {
    throw std::domain_error("DensityOperator: trace must be 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kPsdFloor) {
    throw std::domain_error("DensityOperator: matrix must be positive semidefinite");
  }
}

DensityOperator DensityOperator::from_pure(const PureState &psi) {
  const Eigen::VectorXcd &v = psi.amplitudes();
  return DensityOperator(v * v.adjoint());
}

int CorrelationTensor::flat_index(int i, int j, int k, int l) {
  check_pauli_index(i);
  check_pauli_index(j);
  check_pauli_index(k);
  check_pauli_index(l);
  return ((i * 4 + j) * 4 + k) * 4 + l;
}

CorrelationTensor::CorrelationTensor(std::array<double, 256> entries)
    : entries_(entries) {
  if (std::abs(entries_[0] - 1.0) > kConstructionTol) {
    throw std::domain_error("CorrelationTensor: identity entry must be 1");
  }
  for (double v : entries_) {
    if (std::abs(v) > 1.0 + 1e-10) {
      throw std::domain_error("CorrelationTensor: entries must lie in [-1, 1]");
    }
  }
}

double CorrelationTensor::entry(int i, int j, int k, int l) const {
  return entries_[static_cast<size_t>(flat_index(i, j, k, l))];
}

TwoQubitTensor::TwoQubitTensor(Eigen::Matrix4d entries) : entries_(entries) {
  if (std::abs(entries_(0, 0) - 1.0) > kConstructionTol) {
    throw std::domain_error("TwoQubitTensor: identity entry must be 1");
  }
  if (entries_.cwiseAbs().maxCoeff() > 1.0 + 1e-10) {
    throw std::domain_error("TwoQubitTensor: entries must lie in [-1, 1]");
  }
}

double TwoQubitTensor::entry(int i, int j) const {
  check_pauli_index(i);
  check_pauli_index(j);
  return entries_(i, j);
}

double TwoQubitTensor::sum_sq_all() const { return entries_.squaredNorm(); }

double TwoQubitTensor::sum_sq_corr() const {
  return entries_.block<3, 3>(1, 1).squaredNorm();
}

double TwoQubitTensor::sum_abs_all() const { return entries_.cwiseAbs().sum(); }

PureState ghz_state(int n) {
  if (n < 2 || n > 4) {
    throw std::domain_error("ghz_state: qubit count must be in 2..4");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  amps[0] = amps[amps.size() - 1] = 1.0 / std::sqrt(2.0);
  return PureState(amps);
}

PureState haar_pure(int dim, uint64_t seed) {
  if (dim != 2 && dim != 4) {
    throw std::domain_error("haar_pure: dimension must be 2 or 4");
  }
  Prng rng(seed);
  Eigen::VectorXcd v;
  double norm2 = 0.0;
  // A fresh Gaussian vector is almost surely nonzero; the loop guards the
  // measure-zero degenerate draw.
  do {
    v = rng.gaussian_complex(dim);
    norm2 = v.squaredNorm();
  } while (norm2 < 1e-24);
  return PureState(v / std::sqrt(norm2));
}

DensityOperator mix_white_noise(const DensityOperator &rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("mix_white_noise: fraction must lie in [0, 1]");
  }
  const Eigen::Index dim = rho.matrix().rows();
  Eigen::MatrixXcd mixed =
      (1.0 - p) * rho.matrix() +
      (p / static_cast<double>(dim)) * Eigen::MatrixXcd::Identity(dim, dim);
  return DensityOperator(mixed);
}

DensityOperator partial_trace_keep_front(const DensityOperator &rho, int keep) {
  const int n = rho.num_qubits();
  if (keep < 1 || keep >= n) {
    throw std::domain_error("partial_trace_keep_front: keep must be in 1..n-1");
  }
  const Eigen::Index kept_dim = Eigen::Index{1} << keep;
  const Eigen::Index rest_dim = Eigen::Index{1} << (n - keep);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
  for (Eigen::Index i = 0; i < kept_dim; ++i) {
    for (Eigen::Index j = 0; j < kept_dim; ++j) {
      Complex sum = 0.0;
      for (Eigen::Index r = 0; r < rest_dim; ++r) {
        sum += rho.matrix()(i * rest_dim + r, j * rest_dim + r);
      }
      out(i, j) = sum;
    }
  }
  return DensityOperator(out);
}

CorrelationTensor correlation_tensor(const DensityOperator &rho) {
  if (rho.num_qubits() != 4) {
    throw std::domain_error("correlation_tensor: state must have 4 qubits");
  }
  const auto &pairs = pauli_pairs();
  std::array<double, 256> entries{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Eigen::Matrix4cd &front = pairs[i * 4 + j];
      for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
          Eigen::MatrixXcd op = kron(front, pairs[k * 4 + l]);
          // tr(rho P) = sum_{rs} rho(r,s) P(s,r); both factors Hermitian, so
          // the trace is real up to round-off.
          Complex tr = (rho.matrix().array() * op.transpose().array()).sum();
          entries[static_cast<size_t>(CorrelationTensor::flat_index(i, j, k, l))] =
              tr.real();
        }
      }
    }
  }
  return CorrelationTensor(entries);
}

CorrelationTensor apply_isotropic_noise(const CorrelationTensor &t, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("apply_isotropic_noise: fraction must lie in [0, 1]");
  }
  std::array<double, 256> entries = t.entries();
  for (size_t idx = 1; idx < entries.size(); ++idx) {
    entries[idx] *= (1.0 - p);
  }
  return CorrelationTensor(entries);
}

double contract(const CorrelationTensor &t, const Eigen::Vector4d &w1,
                const Eigen::Vector4d &w2, const Eigen::Vector4d &w3,
                const Eigen::Vector4d &w4) {
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (w1[i] == 0.0) continue;
    for (int j = 0; j < 4; ++j) {
      if (w2[j] == 0.0) continue;
      const double wij = w1[i] * w2[j];
      for (int k = 0; k < 4; ++k) {
        if (w3[k] == 0.0) continue;
        for (int l = 0; l < 4; ++l) {
          if (w4[l] == 0.0) continue;
          total += wij * w3[k] * w4[l] * t.entry(i, j, k, l);
        }
      }
    }
  }
  return total;
}

double expectation(const CorrelationTensor &t,
                   const std::array<std::optional<BlochVector>, 4> &dirs) {
  std::array<Eigen::Vector4d, 4> weights;
  for (int q = 0; q < 4; ++q) {
    if (dirs[q].has_value()) {
      const Eigen::Vector3d &v = dirs[q]->vec();
      weights[q] = Eigen::Vector4d(0.0, v[0], v[1], v[2]);
    } else {
      weights[q] = Eigen::Vector4d(1.0, 0.0, 0.0, 0.0);
    }
  }
  return contract(t, weights[0], weights[1], weights[2], weights[3]);
}

TwoQubitTensor two_qubit_tensor(const PureState &psi) {
  if (psi.num_qubits() != 2) {
    throw std::domain_error("two_qubit_tensor: state must have 2 qubits");
  }
  const auto &pairs = pauli_pairs();
  const Eigen::Vector4cd v = psi.amplitudes();
  Eigen::Matrix4d out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out(i, j) = v.dot(pairs[i * 4 + j] * v).real();
    }
  }
  return TwoQubitTensor(out);
}

TwoQubitTensor two_qubit_tensor(const DensityOperator &rho) {
  if (rho.num_qubits() != 2) {
    throw std::domain_error("two_qubit_tensor: state must have 2 qubits");
  }
  const auto &pairs = pauli_pairs();
  Eigen::Matrix4d out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Complex tr = (rho.matrix().array() * pairs[i * 4 + j].transpose().array()).sum();
      out(i, j) = tr.real();
    }
  }
  return TwoQubitTensor(out);
}

double pair_contract(const TwoQubitTensor &t, const Eigen::Vector4d &w1,
                     const Eigen::Vector4d &w2) {
  return w1.dot(t.matrix() * w2);
}

}  // namespace leggett
