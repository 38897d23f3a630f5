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
#include <optional>

#include <Eigen/Dense>

#include "leggett/bloch.hpp"

namespace leggett {

/// Basis direction e_i for i in 1..3.
Eigen::Vector3d bloch_axis(int i);

/// One measurement context for the four qubits: a tilted pair (a, a') on
/// qubit 1, a direction b (optionally a pair b, b') on qubit 2, and fixed
/// directions c, d on qubits 3 and 4.
struct SettingSet {
  BlochVector a;
  BlochVector a_prime;
  BlochVector b;
  std::optional<BlochVector> b_prime;
  BlochVector c;
  BlochVector d;
  int family_id = 0;   // 1..3 first family, 4..7 second family
  double alpha = 0.0;  // tilt angle in radians
  bool swapped = false;

  bool has_b_prime() const { return b_prime.has_value(); }
};

/// First setting family, sets 1..3. Set i tilts qubit 1 in the plane
/// (e_i, e_j) with j the cyclic successor of i:
///   a  = cos(2a) e_i + sin(2a) e_j,   a' = cos(2a) e_i - sin(2a) e_j,
///   b = -e_i,   c = d = e_i.
std::array<SettingSet, 3> family_one(double alpha);

/// Second setting family, sets 4..7, with m = cos(a) and n = sin(a) so all
/// directions stay unit length (see README on the constant conventions).
/// Both qubits 1 and 2 carry tilted pairs; c and d are fixed axes.
std::array<SettingSet, 4> family_two(double alpha);

/// Side-swap variant of a first-family set: qubit 1 takes the fixed vector
/// -e_i and qubit 2 takes the tilted pair, while c and d stay unchanged.
/// Only defined for family-one sets.
SettingSet triangle_swap(const SettingSet &s);

/// Norm defect |cos(a)^2 + sin(2a)^2 - 1| of the literal second-family
/// table values with n = sin(2a). Nonzero defect means those directions
/// are not unit vectors, which is why n = sin(a) is used instead.
double literal_norm_defect(double alpha);

}  // namespace leggett
