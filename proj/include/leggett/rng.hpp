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

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace leggett {

/// Advances `state` and returns the next value of the splitmix64 sequence.
uint64_t splitmix64(uint64_t &state);

/// Stateless mix of a base seed with a stream index.
///
/// Every parallelizable loop in this project draws one derived seed per
/// iteration instead of sharing a generator, so results are independent of
/// iteration order and batch size.
uint64_t derive_seed(uint64_t base, uint64_t index);

/// Deterministic pseudo-random source with platform-independent output.
///
/// std::mt19937_64 produces a bit-exact sequence on every conforming
/// implementation, but the standard distributions do not, so all mappings
/// from raw words to doubles are done here by hand.
class Prng {
 public:
  explicit Prng(uint64_t seed);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal via the Marsaglia polar method.
  double normal();

  /// Uniform point on the unit 2-sphere.
  Eigen::Vector3d unit_vector();

  /// Vector of `dim` standard complex Gaussians (real and imaginary parts
  /// independent N(0, 1)). Building block for Haar-random pure states.
  Eigen::VectorXcd gaussian_complex(int dim);

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace leggett
