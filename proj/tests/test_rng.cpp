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

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include <doctest.h>

#include "leggett/rng.hpp"

namespace {

using leggett::Prng;
using leggett::derive_seed;
using leggett::splitmix64;

TEST_CASE("splitmix64 matches the published reference sequence") {
  // First three outputs for state 1234567, from the reference C code.
  uint64_t state = 1234567;
  CHECK(splitmix64(state) == UINT64_C(6457827717110365317));
  CHECK(splitmix64(state) == UINT64_C(3203168211198807973));
  CHECK(splitmix64(state) == UINT64_C(9817491932198370423));
}

TEST_CASE("derive_seed is deterministic and spreads nearby indices") {
  CHECK(derive_seed(42, 0) == derive_seed(42, 0));
  std::set<uint64_t> seen;
  for (uint64_t i = 0; i < 1000; ++i) {
    seen.insert(derive_seed(42, i));
  }
  CHECK(seen.size() == 1000);
  CHECK(derive_seed(42, 7) != derive_seed(43, 7));
}

TEST_CASE("uniform01 stays in [0, 1) and is reproducible") {
  Prng a(99);
  Prng b(99);
  for (int i = 0; i < 10000; ++i) {
    const double x = a.uniform01();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    CHECK(x == b.uniform01());
  }
}

TEST_CASE("normal has near-zero mean and near-unit variance") {
  Prng prng(2024);
  const int n = 200000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = prng.normal();
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(var - 1.0) < 0.03);
}

TEST_CASE("unit_vector lies on the sphere with balanced components") {
  Prng prng(7);
  const int n = 50000;
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  double mean_z_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d v = prng.unit_vector();
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    mean += v;
    mean_z_sq += v[2] * v[2];
  }
  mean /= n;
  // Uniform measure on the sphere: zero mean, <z^2> = 1/3.
  CHECK(mean.norm() < 0.02);
  CHECK(std::abs(mean_z_sq / n - 1.0 / 3.0) < 0.01);
}

TEST_CASE("gaussian_complex returns the requested dimension") {
  Prng prng(5);
  const Eigen::VectorXcd v = prng.gaussian_complex(6);
  REQUIRE(v.size() == 6);
  Prng again(5);
  const Eigen::VectorXcd w = again.gaussian_complex(6);
  for (int i = 0; i < 6; ++i) {
    CHECK(v[i] == w[i]);
  }
}

}  // namespace
