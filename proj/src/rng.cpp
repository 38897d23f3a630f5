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

#include "leggett/rng.hpp"

#include <cmath>

namespace leggett {

uint64_t splitmix64(uint64_t &state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t base, uint64_t index) {
  uint64_t s = index;
  uint64_t t = base ^ splitmix64(s);
  return splitmix64(t);
}

Prng::Prng(uint64_t seed) {
  uint64_t s = seed;
  engine_.seed(splitmix64(s));
}

double Prng::uniform01() {
  // Top 53 bits of the word, scaled into [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Prng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double scale = std::sqrt(-2.0 * std::log(s) / s);
  cached_normal_ = v * scale;
  has_cached_normal_ = true;
  return u * scale;
}

Eigen::Vector3d Prng::unit_vector() {
  double z = 2.0 * uniform01() - 1.0;
  double phi = 2.0 * M_PI * uniform01();
  double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

Eigen::VectorXcd Prng::gaussian_complex(int dim) {
  Eigen::VectorXcd out(dim);
  for (int i = 0; i < dim; ++i) {
    double re = normal();
    double im = normal();
    out[i] = std::complex<double>(re, im);
  }
  return out;
}

}  // namespace leggett
