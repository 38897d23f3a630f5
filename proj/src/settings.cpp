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

#include "leggett/settings.hpp"

#include <cmath>
#include <stdexcept>

namespace leggett {

namespace {

// Tilted pair (m u + n v, m u - n v) for orthogonal unit axes u, v.
std::pair<BlochVector, BlochVector> tilted_pair(const Eigen::Vector3d &u,
                                                const Eigen::Vector3d &v,
                                                double m, double n) {
  return {BlochVector(m * u + n * v), BlochVector(m * u - n * v)};
}

}  // namespace

Eigen::Vector3d bloch_axis(int i) {
  if (i < 1 || i > 3) {
    throw std::domain_error("bloch_axis: index must be in 1..3");
  }
  Eigen::Vector3d e = Eigen::Vector3d::Zero();
  e[i - 1] = 1.0;
  return e;
}

std::array<SettingSet, 3> family_one(double alpha) {
  if (!std::isfinite(alpha)) {
    throw std::domain_error("family_one: alpha must be finite");
  }
  const double m = std::cos(2.0 * alpha);
  const double n = std::sin(2.0 * alpha);
  std::array<SettingSet, 3> sets = {{
      {BlochVector(1, 0, 0), BlochVector(1, 0, 0), BlochVector(-1, 0, 0),
       std::nullopt, BlochVector(1, 0, 0), BlochVector(1, 0, 0), 1, alpha, false},
      {BlochVector(0, 1, 0), BlochVector(0, 1, 0), BlochVector(0, -1, 0),
       std::nullopt, BlochVector(0, 1, 0), BlochVector(0, 1, 0), 2, alpha, false},
      {BlochVector(0, 0, 1), BlochVector(0, 0, 1), BlochVector(0, 0, -1),
       std::nullopt, BlochVector(0, 0, 1), BlochVector(0, 0, 1), 3, alpha, false},
  }};
  for (int i = 1; i <= 3; ++i) {
    const int j = i % 3 + 1;  // cyclic successor 1->2->3->1
    SettingSet &s = sets[static_cast<size_t>(i - 1)];
    auto [plus, minus] = tilted_pair(bloch_axis(i), bloch_axis(j), m, n);
    s.a = plus;
    s.a_prime = minus;
  }
  return sets;
}

std::array<SettingSet, 4> family_two(double alpha) {
  if (!std::isfinite(alpha)) {
    throw std::domain_error("family_two: alpha must be finite");
  }
  const double m = std::cos(alpha);
  const double n = std::sin(alpha);
  const Eigen::Vector3d e1 = bloch_axis(1);
  const Eigen::Vector3d e2 = bloch_axis(2);
  const Eigen::Vector3d e3 = bloch_axis(3);

  auto [a4, a4p] = tilted_pair(e1, e2, m, n);
  auto [a5, a5p] = tilted_pair(e1, e3, m, n);
  auto [b6, b6p] = tilted_pair(e2, e1, m, n);
  auto [a7, a7p] = tilted_pair(e2, e3, m, n);

  return {{
      {a4, a4p, a4, a4p, BlochVector(-e1), BlochVector(e1), 4, alpha, false},
      {a5, a5p, a5, a5p, BlochVector(e2), BlochVector(e2), 5, alpha, false},
      {a4, a4p, b6, b6p, BlochVector(e2), BlochVector(e1), 6, alpha, false},
      {a7, a7p, a7, a7p, BlochVector(-e2), BlochVector(e2), 7, alpha, false},
  }};
}

SettingSet triangle_swap(const SettingSet &s) {
  if (s.family_id < 1 || s.family_id > 3) {
    throw std::domain_error("triangle_swap: only defined for family-one sets");
  }
  if (s.swapped) {
    throw std::domain_error("triangle_swap: set is already swapped");
  }
  SettingSet out = s;
  out.a = s.b;
  out.a_prime = s.b;
  out.b = s.a;
  out.b_prime = s.a_prime;
  out.swapped = true;
  return out;
}

double literal_norm_defect(double alpha) {
  const double m = std::cos(alpha);
  const double n_literal = std::sin(2.0 * alpha);
  return std::abs(m * m + n_literal * n_literal - 1.0);
}

}  // namespace leggett
