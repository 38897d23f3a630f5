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
#include <stdexcept>

#include <doctest.h>

#include "leggett/analysis.hpp"

namespace {

using leggett::CorrelationTensor;
using leggett::MaxViolation;
using leggett::Mode;
using leggett::SweepResult;
using leggett::ThresholdResult;

CorrelationTensor ghz_tensor(double noise = 0.0) {
  const leggett::DensityOperator rho =
      leggett::DensityOperator::from_pure(leggett::ghz_state(4));
  return leggett::correlation_tensor(
      noise == 0.0 ? rho : leggett::mix_white_noise(rho, noise));
}

CorrelationTensor mixed_tensor() {
  std::array<double, 256> entries{};
  entries[0] = 1.0;
  return CorrelationTensor(entries);
}

TEST_CASE("sweeps produce the requested inclusive grid") {
  const SweepResult sweep = leggett::sweep_alpha(
      ghz_tensor(), "ghz", 0.0, 2, Mode::kPaper, 0.0, M_PI / 4.0, 65);
  REQUIRE(sweep.rows.size() == 65);
  CHECK(sweep.rows.front().alpha_rad == 0.0);
  CHECK(std::abs(sweep.rows.back().alpha_rad - M_PI / 4.0) < 1e-15);
  CHECK(sweep.which == 2);
  CHECK(sweep.state_label == "ghz");
  for (size_t i = 0; i < sweep.rows.size(); ++i) {
    const auto &row = sweep.rows[i];
    if (i > 0) CHECK(row.alpha_rad > sweep.rows[i - 1].alpha_rad);
    CHECK(std::abs(row.alpha_over_pi - row.alpha_rad / M_PI) < 1e-15);
    CHECK(std::abs(row.margin - (row.bound - row.lhs)) < 1e-12);
    const auto direct =
        leggett::verdict(ghz_tensor(), row.alpha_rad, 2, Mode::kPaper);
    CHECK(row.lhs == direct.lhs);
    CHECK(row.violated == direct.violated);
  }
}

TEST_CASE("sweep argument validation") {
  const CorrelationTensor t = ghz_tensor();
  CHECK_THROWS_AS(
      leggett::sweep_alpha(t, "ghz", 0.0, 1, Mode::kPaper, 0.0, 1.0, 1),
      std::domain_error);
  CHECK_THROWS_AS(
      leggett::sweep_alpha(t, "ghz", 0.0, 1, Mode::kPaper, 0.5, 0.5, 10),
      std::domain_error);
  CHECK_THROWS_AS(
      leggett::sweep_alpha(t, "ghz", 0.0, 3, Mode::kPaper, 0.0, 1.0, 10),
      std::domain_error);
}

TEST_CASE("violation endpoints match the closed forms for every inequality") {
  const CorrelationTensor t = ghz_tensor();
  const struct {
    int which;
    Mode mode;
    double tangent;
  } cases[] = {
      {1, Mode::kPaper, 1.0 / 3.0},
      {2, Mode::kPaper, 1.0 / 11.0},
      {2, Mode::kRederived, 1.0 / 7.0},
  };
  for (const auto &c : cases) {
    const ThresholdResult r = leggett::violation_range(t, c.which, c.mode);
    const double expected = std::atan(c.tangent);
    CHECK(r.quantity == "alpha-endpoint");
    CHECK(r.which == c.which);
    CHECK(std::abs(r.value - expected) < 1e-8);
    CHECK(std::abs(r.value - leggett::closed_form_endpoint(c.which, c.mode)) <
          1e-8);
    CHECK(r.bracket_hi - r.bracket_lo <= r.tolerance * (1.0 + 1e-12));
    CHECK(r.bracket_lo <= r.value);
    CHECK(r.value <= r.bracket_hi);
    CHECK(r.iterations > 10);
  }
}

TEST_CASE("violation_range rejects states without a violation window") {
  CHECK_THROWS_AS(leggett::violation_range(mixed_tensor(), 1, Mode::kPaper),
                  std::runtime_error);
  // 10% white noise kills the second-inequality window entirely.
  CHECK_THROWS_AS(
      leggett::violation_range(ghz_tensor(0.10), 2, Mode::kPaper),
      std::runtime_error);
}

TEST_CASE("margin maxima agree with the exact trigonometric peak") {
  const CorrelationTensor t = ghz_tensor();
  const struct {
    int which;
    Mode mode;
    double peak;
  } cases[] = {
      {1, Mode::kPaper, 2.0 * std::sqrt(10.0) - 6.0},
      {2, Mode::kPaper, 4.0 * std::sqrt(122.0) - 44.0},
      {2, Mode::kRederived, 20.0 * std::sqrt(2.0) - 28.0},
  };
  for (const auto &c : cases) {
    const MaxViolation found = leggett::max_violation(t, c.which, c.mode);
    const MaxViolation closed = leggett::closed_form_max(c.which, c.mode);
    CHECK(std::abs(found.margin_star - c.peak) < 1e-10);
    CHECK(std::abs(closed.margin_star - c.peak) < 1e-12);
    CHECK(std::abs(found.alpha_star - closed.alpha_star) < 1e-7);
    CHECK(std::abs(found.alpha_star_over_pi - found.alpha_star / M_PI) <
          1e-15);
  }
}

TEST_CASE("max_violation reports a nonpositive peak for the mixed state") {
  const MaxViolation flat = leggett::max_violation(mixed_tensor(), 2,
                                                   Mode::kRederived);
  CHECK(flat.margin_star < 0.0);
}

TEST_CASE("noise thresholds solve the closed-form quadratic") {
  // Write the quantum side as -(L0 + L1 cos 2a) and the bound as
  // B0 + S sin 2a. Admixture p scales only the quantum side, so
  //   margin(q, a) = B0 + q L0 + q L1 cos 2a + S sin 2a,  q = 1 - p,
  // whose peak over a is B0 + q L0 + hypot(q L1, S). Setting the peak to
  // zero and squaring gives
  //   q^2 (L1^2 - L0^2) - 2 B0 L0 q + S^2 - B0^2 = 0.
  const struct {
    int which;
    Mode mode;
    double bound_at_zero;
  } cases[] = {
      {1, Mode::kPaper, leggett::leggett1_bound(0.0)},
      {2, Mode::kPaper, leggett::leggett2_bound(0.0, Mode::kPaper)},
      {2, Mode::kRederived, leggett::leggett2_bound(0.0, Mode::kRederived)},
  };
  for (const auto &c : cases) {
    const auto mc = leggett::ghz_margin_coefficients(c.which, c.mode);
    const double b0 = c.bound_at_zero;
    const double l1 = mc.cos_coeff;
    const double l0 = -b0 - l1;  // margin vanishes at a = 0
    const double s = mc.sin_coeff;
    const double qa = l1 * l1 - l0 * l0;
    const double qb = -2.0 * b0 * l0;
    const double qc = s * s - b0 * b0;
    const double q = (-qb + std::sqrt(qb * qb - 4.0 * qa * qc)) / (2.0 * qa);
    const double expected = 1.0 - q;
    const ThresholdResult r = leggett::noise_threshold(c.which, c.mode);
    CHECK(r.quantity == "noise-p");
    CHECK(std::abs(r.value - expected) < 1e-6);
    CHECK(r.bracket_hi - r.bracket_lo <= r.tolerance * (1.0 + 1e-12));
  }
}

TEST_CASE("first-inequality noise threshold equals 1 - 2 sqrt(2)/3") {
  const ThresholdResult r = leggett::noise_threshold(1, Mode::kPaper);
  CHECK(std::abs(r.value - (1.0 - 2.0 * std::sqrt(2.0) / 3.0)) < 1e-6);
}

TEST_CASE("closed-form endpoint values") {
  CHECK(std::abs(leggett::closed_form_endpoint(1, Mode::kPaper) -
                 std::atan(1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(leggett::closed_form_endpoint(2, Mode::kPaper) -
                 std::atan(1.0 / 11.0)) < 1e-15);
  CHECK(std::abs(leggett::closed_form_endpoint(2, Mode::kRederived) -
                 std::atan(1.0 / 7.0)) < 1e-15);
}

}  // namespace
