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
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "leggett/pauli.hpp"
#include "leggett/settings.hpp"

namespace leggett {

// Slack below this is a genuine chain-inequality violation, above it is
// round-off.
inline constexpr double kSlackTol = -1e-10;
// Outcome probabilities may undershoot zero by at most this much.
inline constexpr double kPositivityTol = -1e-12;
// Tolerance on margins deciding the "violated" flag.
inline constexpr double kViolationTol = 1e-9;

enum class LambdaModel { kA, kB };

/// One hidden-variable value. Model A assigns an independent unit Bloch
/// vector to each of the four qubits; model B assigns a pure two-qubit
/// state to the (1,2) pair and another to the (3,4) pair.
struct LambdaAssignment {
  LambdaModel model = LambdaModel::kA;
  std::array<Eigen::Vector3d, 4> bloch{};  // model A payload
  Eigen::Vector4cd pair12 = Eigen::Vector4cd::Zero();  // model B payload
  Eigen::Vector4cd pair34 = Eigen::Vector4cd::Zero();

  /// Requires all four vectors unit length within 1e-9.
  static LambdaAssignment make_a(const std::array<Eigen::Vector3d, 4> &u);

  /// Normalizes both amplitude vectors; rejects near-zero input. The
  /// unconstrained-then-normalize convention keeps the optimizer chart free
  /// of explicit constraints.
  static LambdaAssignment make_b(const Eigen::Vector4cd &pair12,
                                 const Eigen::Vector4cd &pair34);

  PureState pair12_state() const;
  PureState pair34_state() const;
};

/// Uniform sample: Bloch vectors uniform on the sphere for model A,
/// Haar-random pure pair states for model B. Deterministic per seed.
LambdaAssignment sample_lambda(LambdaModel model, uint64_t seed);

/// Per-qubit observable choice when reading an average out of a
/// CorrelationSet: absent from the product, the plain direction, or the
/// primed direction.
enum class Pick : int { kSkip = 0, kPlain = 1, kPrimed = 2 };

/// All product averages of one hidden-variable value under one setting
/// set: every combination of skip/plain/primed per qubit that the set
/// defines (qubits 3 and 4 have no primed directions).
class CorrelationSet {
 public:
  /// Averages of a hidden-variable value. Model A averages factor into
  /// four Bloch projections; model B averages factor across the (1,2) and
  /// (3,4) pairs.
  static CorrelationSet from_lambda(const LambdaAssignment &lambda,
                                    const SettingSet &s);

  /// Same, with the pair tensors precomputed by the caller. Only valid for
  /// model B; campaigns hoist the tensor computation out of per-set loops.
  static CorrelationSet from_pair_tensors(const TwoQubitTensor &t12,
                                          const TwoQubitTensor &t34,
                                          const SettingSet &s);

  /// Builds a set directly from the 16 unprimed averages, indexed by a
  /// bitmask with bit 0 for qubit 1 through bit 3 for qubit 4. Entry 0 must
  /// be 1. Intended for hand-crafted (possibly unphysical) statistics.
  static CorrelationSet from_unprimed_averages(const std::array<double, 16> &by_mask);

  /// Average of the product over the non-skipped qubits. Throws on primed
  /// picks the underlying setting set does not define.
  double avg(Pick q1, Pick q2, Pick q3, Pick q4) const;

  /// Unprimed average by qubit bitmask (bit 0 = qubit 1, ..., bit 3 = qubit 4).
  double unprimed(int mask) const;

  bool has_primed_a() const { return has_primed_a_; }
  bool has_primed_b() const { return has_primed_b_; }

 private:
  CorrelationSet() = default;

  static int index(Pick q1, Pick q2, Pick q3, Pick q4);
  void fill_from_factors(const std::array<std::array<double, 3>, 4> &factors);
  void validate() const;

  std::array<double, 81> table_{};
  bool has_primed_a_ = false;
  bool has_primed_b_ = false;
};

/// The 16-term expansion of the probability of one outcome pattern
/// (signs +-1 per qubit) from the product averages. Sums to 1 over all 16
/// patterns; may be negative for hand-crafted non-physical statistics.
double outcome_probability(const CorrelationSet &cs, int a, int b, int c, int d);

struct PositivityVerdict {
  bool ok = false;
  double min_probability = 0.0;
};

/// Checks all 16 outcome probabilities against the positivity floor.
PositivityVerdict check_positivity(const CorrelationSet &cs);

/// Slacks of the per-lambda inequality chain, each in "value >= 0" form.
/// The optional entries exist only when the correlation set defines the
/// primed direction they read (primed_quad needs A', the tilts need B').
struct ChainReport {
  // <ABCD> + <AB> + <CD> + 1 - |<A> + <B> + <ACD> + <BCD>|
  double quad_pair_sum = 0.0;
  // <ABCD> - <AB> - <CD> + 1 - |<A> - <B> - <ACD> + <BCD>|
  double quad_pair_diff = 0.0;
  // <ABCD> + 1 - |<A> + <BCD>|
  double quad_single = 0.0;
  // <ABCD> + <A'BCD> + 2 - |<A> - <A'>|
  std::optional<double> primed_quad;
  // <ABCD> + 1 - |<AB> + <CD>|
  double pair_sum_bound = 0.0;
  // <(A+A')(B+B')CD> + 4 - |<(A+A')(B-B')>|
  std::optional<double> tilt_minus;
  // <(A+A')(B+B')CD> + 4 - |<(A-A')(B+B')>|
  std::optional<double> tilt_plus;

  double min_slack() const;
};

/// Evaluates the chain for one hidden-variable value under one setting set.
ChainReport check_chain(const LambdaAssignment &lambda, const SettingSet &s);

/// Same from precomputed averages.
ChainReport check_chain(const CorrelationSet &cs);

/// Sum of the 14 first-order moduli over both setting families at tilt
/// angle alpha: |<A - A'>| per plain first-family set, |<B - B'>| per
/// swapped one, and |<(A+A')(B-B')>| + |<(A-A')(B+B')>| per second-family
/// set. Model B only. For every pure pair state the sum is bounded below
/// by 4 |sin 2a|.
double moduli_sum(const LambdaAssignment &lambda, double alpha);

/// Same from the correlation tensor of the first pair state. The fourteen
/// moduli only probe qubits 1 and 2, so the tensor determines them all.
double moduli_sum(const TwoQubitTensor &t12, double alpha);

/// L1 norm of a unit vector; at least 1 for every unit input.
double taxi_norm(const Eigen::Vector3d &v);

}  // namespace leggett
