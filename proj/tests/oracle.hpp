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

// Reference implementations used to cross-check the library. Everything
// here works from explicit 2x2 Pauli entries and bitwise index arithmetic,
// with no Kronecker products or library code, so agreement with the
// library is evidence rather than tautology.

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;

// Entry (r, c) of sigma_i; index 0 is the identity.
inline C pauli_elem(int i, int r, int c) {
  switch (i) {
    case 0:
      return r == c ? C(1.0) : C(0.0);
    case 1:
      return r != c ? C(1.0) : C(0.0);
    case 2:
      if (r == c) return C(0.0);
      return r == 0 ? C(0.0, -1.0) : C(0.0, 1.0);
    default:
      if (r != c) return C(0.0);
      return r == 0 ? C(1.0) : C(-1.0);
  }
}

// Entry (r, c) of the observable d . sigma for an arbitrary 3-vector d.
inline C direction_elem(const Eigen::Vector3d &d, int r, int c) {
  return d[0] * pauli_elem(1, r, c) + d[1] * pauli_elem(2, r, c) +
         d[2] * pauli_elem(3, r, c);
}

// Entry (r, c) of a Pauli string; qubit 0 owns the most significant bit.
inline C pauli_string_elem(const std::vector<int> &idx, int r, int c) {
  const int n = static_cast<int>(idx.size());
  C elem = 1.0;
  for (int q = 0; q < n; ++q) {
    const int shift = n - 1 - q;
    elem *= pauli_elem(idx[q], (r >> shift) & 1, (c >> shift) & 1);
  }
  return elem;
}

// <psi| sigma_{idx_0} x ... x sigma_{idx_{n-1}} |psi>, direct double sum.
inline double pure_expectation(const Eigen::VectorXcd &amps,
                               const std::vector<int> &idx) {
  const int dim = static_cast<int>(amps.size());
  C total = 0.0;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      total += std::conj(amps[r]) * pauli_string_elem(idx, r, c) * amps[c];
    }
  }
  return total.real();
}

// tr(rho O) for a Pauli string O, via tr(rho O) = sum_{r,c} rho(c,r) O(r,c).
inline double rho_expectation(const Eigen::MatrixXcd &rho,
                              const std::vector<int> &idx) {
  const int dim = static_cast<int>(rho.rows());
  C total = 0.0;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      total += rho(c, r) * pauli_string_elem(idx, r, c);
    }
  }
  return total.real();
}

// Expectation of a product of per-qubit direction observables; an empty
// slot contributes the identity.
inline double direction_expectation(
    const Eigen::VectorXcd &amps,
    const std::vector<std::optional<Eigen::Vector3d>> &dirs) {
  const int n = static_cast<int>(dirs.size());
  const int dim = static_cast<int>(amps.size());
  C total = 0.0;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      C elem = 1.0;
      for (int q = 0; q < n; ++q) {
        const int shift = n - 1 - q;
        const int rb = (r >> shift) & 1;
        const int cb = (c >> shift) & 1;
        elem *= dirs[q] ? direction_elem(*dirs[q], rb, cb)
                        : pauli_elem(0, rb, cb);
      }
      total += std::conj(amps[r]) * elem * amps[c];
    }
  }
  return total.real();
}

// Kronecker product of state vectors, first factor most significant.
inline Eigen::VectorXcd kron_vec(const Eigen::VectorXcd &a,
                                 const Eigen::VectorXcd &b) {
  Eigen::VectorXcd out(a.size() * b.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) {
      out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

}  // namespace oracle
