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

#include <Eigen/Dense>

namespace leggett {

/// Measurement direction on the Bloch sphere. Unit Euclidean norm within
/// 1e-9 is enforced at construction; projective qubit measurements are
/// only defined for unit directions.
class BlochVector {
 public:
  BlochVector(double x, double y, double z);
  explicit BlochVector(const Eigen::Vector3d &v);

  const Eigen::Vector3d &vec() const { return v_; }
  double operator[](int i) const { return v_[i]; }

 private:
  Eigen::Vector3d v_;
};

/// Difference of two directions. The result is generally not unit length,
/// so it is returned as a plain vector.
inline Eigen::Vector3d operator-(const BlochVector &lhs, const BlochVector &rhs) {
  return lhs.vec() - rhs.vec();
}

inline Eigen::Vector3d operator+(const BlochVector &lhs, const BlochVector &rhs) {
  return lhs.vec() + rhs.vec();
}

}  // namespace leggett
