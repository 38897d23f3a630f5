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
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "leggett/lambda_models.hpp"
#include "leggett/settings.hpp"

namespace leggett {

/// One sampled hidden-variable value that broke a per-lambda requirement,
/// kept verbatim so the failure can be replayed.
struct Counterexample {
  std::string kind;  // "chain", "positivity", or "integrand"
  LambdaAssignment lambda;
  SettingSet set;  // context the failure was observed in
  ChainReport chain;
  double min_probability = 0.0;
  double integrand_slack = 0.0;
};

/// Aggregate of a random-sampling audit of the per-lambda constraints at
/// one tilt angle. All minima run over every sampled lambda and every
/// setting set the model is audited against.
struct CampaignReport {
  LambdaModel model = LambdaModel::kA;
  double alpha = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  double min_chain_slack = 0.0;
  double min_integrand_slack = 0.0;
  double min_outcome_probability = 0.0;
  long chain_failures = 0;
  long positivity_failures = 0;
  long integrand_failures = 0;
  std::vector<Counterexample> counterexamples;  // capped at kMaxCounterexamples

  long failures() const {
    return chain_failures + positivity_failures + integrand_failures;
  }
};

inline constexpr int kMaxCounterexamples = 3;

/// Samples `samples` hidden-variable values (per-sample seeds derived from
/// `seed`, so a longer run extends a shorter one) and audits each against
/// the chain slacks, outcome positivity, and the first-order-moduli floor.
/// Model A is audited on the three first-family sets, model B additionally
/// on their side-swapped variants and the four second-family sets.
CampaignReport run_campaign(LambdaModel model, double alpha, int samples,
                            std::uint64_t seed);

/// One additive piece of the per-lambda floor behind an inequality bound:
/// a signed combination of product averages minus first-order moduli, with
/// a proven constant lower bound (see `constant`). Summing the constants
/// over `bound_pieces` reproduces the inequality's additive constant.
struct BoundPiece {
  std::string name;
  int which = 2;  // 1 = single-pair inequality, 2 = full chain
  LambdaModel model = LambdaModel::kB;
  double alpha = 0.0;
  double constant = 0.0;                 // proven floor of `evaluate`
  std::vector<SettingSet> sets;          // contexts entering the combination

  /// Piece value at one hidden-variable assignment. The model of the
  /// assignment must match the piece's model.
  double evaluate(const LambdaAssignment &lambda) const;
};

/// Decomposition of the per-lambda floor for inequality 1 (three model-A
/// pieces, floor -2 each) or inequality 2 (three first-family model-B
/// pieces with floor -4 plus four second-family pieces with floor -8).
std::vector<BoundPiece> bound_pieces(int which, double alpha);

/// Outcome of the derivative-free minimization of one piece.
struct PieceResult {
  std::string name;
  double constant = 0.0;
  double min_value = 0.0;
  long evaluations = 0;
  LambdaAssignment argmin;
};

/// Numerical certificate that no hidden-variable assignment pushes the
/// inequality's left-hand side below its additive constant. `value` is the
/// sum of the per-piece minima; soundness of the constants requires
/// value >= constant_sum, and the bound is attained when alpha = 0.
struct BoundCertificate {
  int which = 2;
  double alpha = 0.0;
  int restarts = 0;
  std::uint64_t seed = 0;
  double value = 0.0;         // sum of numerically found piece minima
  double constant_sum = 0.0;  // sum of proven per-piece floors
  double bound = 0.0;         // full bound including the moduli integral
  std::vector<PieceResult> pieces;
};

/// Minimizes every piece with Nelder-Mead restarts (analytic warm starts
/// first, then random charts; per-restart seeds derived from `seed`) and
/// sums the minima. Deterministic; ties between restarts resolve to the
/// earliest index.
BoundCertificate certify_bound(int which, double alpha, int restarts,
                               std::uint64_t seed);

/// One named block of property checks with its worst-case statistics.
struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::map<std::string, double> metrics;
};

/// Results of the full property-suite run backing the `verify` command.
struct VerifyReport {
  int samples_per_model = 0;
  std::uint64_t seed = 0;
  bool all_passed = false;
  std::vector<SuiteResult> suites;
};

/// Runs the five property suites: chain audits for both models over a
/// 50-point tilt grid spending about `samples_per_model` lambdas each,
/// purity identities over Haar-random pair states, the L1-norm floor over
/// random unit vectors, and structural checks of the setting families.
VerifyReport run_verification(int samples_per_model, std::uint64_t seed);

}  // namespace leggett
