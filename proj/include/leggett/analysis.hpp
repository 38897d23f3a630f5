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

#include <string>
#include <vector>

#include "leggett/inequalities.hpp"
#include "leggett/pauli.hpp"

namespace leggett {

struct SweepRow {
  double alpha_rad = 0.0;
  double alpha_over_pi = 0.0;
  double lhs = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool violated = false;

  bool operator==(const SweepRow &) const = default;
};

/// Inequality evaluation over a strictly increasing tilt-angle grid for a
/// fixed state and mode.
struct SweepResult {
  int which = 1;
  Mode mode = Mode::kPaper;
  std::string state_label;
  double noise = 0.0;
  std::vector<SweepRow> rows;

  bool operator==(const SweepResult &) const = default;
};

/// Evaluates the chosen inequality on an inclusive grid of `steps` angles
/// from `lo` to `hi`. Pure function of its inputs.
SweepResult sweep_alpha(const CorrelationTensor &tensor,
                        const std::string &state_label, double noise,
                        int which, Mode mode, double lo, double hi, int steps);

/// A scalar located by bisection, together with the final bracket. The
/// margin changes sign across [bracket_lo, bracket_hi] and the bracket
/// width is at most `tolerance`.
struct ThresholdResult {
  std::string quantity;  // "alpha-endpoint" or "noise-p"
  int which = 1;
  Mode mode = Mode::kPaper;
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  double tolerance = 0.0;

  bool operator==(const ThresholdResult &) const = default;
};

/// Upper endpoint of the violation window: the tilt angle in (0, pi/4]
/// where the margin returns to zero. Requires an actual violation window;
/// throws when the margin never goes positive or never changes sign.
ThresholdResult violation_range(const CorrelationTensor &tensor, int which,
                                Mode mode, double tol = 1e-10);

/// Location and height of the margin maximum over [0, pi/4].
struct MaxViolation {
  int which = 1;
  Mode mode = Mode::kPaper;
  double alpha_star = 0.0;
  double alpha_star_over_pi = 0.0;
  double margin_star = 0.0;
};

/// Golden-section maximization of the margin. The margin of every state
/// handled here is of the form a + b cos 2x + c sin 2x on [0, pi/4], which
/// is unimodal, so the search is exact up to `tol`.
MaxViolation max_violation(const CorrelationTensor &tensor, int which,
                           Mode mode, double tol = 1e-10);

/// Critical white-noise admixture for the four-qubit GHZ state: the p
/// where the maximal margin over the tilt angle crosses zero. Bisection
/// over p in [0, 0.1] with an inner golden-section maximization.
ThresholdResult noise_threshold(int which, Mode mode, double tol = 1e-8);

/// Closed-form endpoint arctan(sin_coeff / cos_coeff) of the ideal-state
/// violation window, from the margin's trigonometric coefficients.
double closed_form_endpoint(int which, Mode mode);

/// Closed-form margin maximum for the ideal state: the margin peaks at
/// constant + hypot(cos_coeff, sin_coeff), at the angle where
/// tan 2a = sin_coeff / cos_coeff.
MaxViolation closed_form_max(int which, Mode mode);

}  // namespace leggett
