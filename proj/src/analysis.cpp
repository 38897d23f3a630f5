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

#include "leggett/analysis.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace leggett {
namespace {

constexpr double kPi = std::numbers::pi;

// Margin must exceed this at the peak for a violation window to exist.
constexpr double kWindowTol = 1e-9;

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section maximization of a unimodal function on [lo, hi].
GoldenResult golden_max(const std::function<double(double)> &f, double lo,
                        double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int guard = 0;
  while (b - a > tol && ++guard < 500) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  GoldenResult result;
  result.x = 0.5 * (a + b);
  result.value = f(result.x);
  return result;
}

void require_tolerance(double tol, const char *where) {
  if (!(tol > 0.0)) {
    throw std::domain_error(std::string(where) + ": tolerance must be positive");
  }
}

}  // namespace

SweepResult sweep_alpha(const CorrelationTensor &tensor,
                        const std::string &state_label, double noise,
                        int which, Mode mode, double lo, double hi, int steps) {
  if (steps < 2) {
    throw std::domain_error("sweep_alpha: grid needs at least 2 steps");
  }
  if (!(lo < hi)) {
    throw std::domain_error("sweep_alpha: grid must satisfy lo < hi");
  }
  SweepResult result;
  result.which = which;
  result.mode = mode;
  result.state_label = state_label;
  result.noise = noise;
  result.rows.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double alpha = lo + (hi - lo) * k / (steps - 1);
    const InequalityVerdict v = verdict(tensor, alpha, which, mode);
    result.rows.push_back(
        {alpha, alpha / kPi, v.lhs, v.bound, v.margin, v.violated});
  }
  return result;
}

ThresholdResult violation_range(const CorrelationTensor &tensor, int which,
                                Mode mode, double tol) {
  require_tolerance(tol, "violation_range");
  const auto margin_at = [&](double alpha) {
    return verdict(tensor, alpha, which, mode).margin;
  };
  const GoldenResult peak = golden_max(margin_at, 0.0, kPi / 4.0, 1e-12);
  if (peak.value <= kWindowTol) {
    throw std::runtime_error(
        "violation_range: margin never goes positive, no violation window");
  }
  double lo = peak.x;
  double hi = kPi / 4.0;
  if (margin_at(hi) > 0.0) {
    throw std::runtime_error(
        "violation_range: margin does not change sign before pi/4");
  }
  int iterations = 0;
  while (hi - lo > tol) {
    ++iterations;
    const double mid = 0.5 * (lo + hi);
    (margin_at(mid) > 0.0 ? lo : hi) = mid;
  }

  ThresholdResult result;
  result.quantity = "alpha-endpoint";
  result.which = which;
  result.mode = mode;
  result.value = 0.5 * (lo + hi);
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.iterations = iterations;
  result.tolerance = tol;
  return result;
}

MaxViolation max_violation(const CorrelationTensor &tensor, int which,
                           Mode mode, double tol) {
  require_tolerance(tol, "max_violation");
  const auto margin_at = [&](double alpha) {
    return verdict(tensor, alpha, which, mode).margin;
  };
  const GoldenResult peak = golden_max(margin_at, 0.0, kPi / 4.0, tol);
  MaxViolation result;
  result.which = which;
  result.mode = mode;
  result.alpha_star = peak.x;
  result.alpha_star_over_pi = peak.x / kPi;
  result.margin_star = peak.value;
  return result;
}

ThresholdResult noise_threshold(int which, Mode mode, double tol) {
  require_tolerance(tol, "noise_threshold");
  const CorrelationTensor ideal =
      correlation_tensor(DensityOperator::from_pure(ghz_state(4)));
  const auto max_margin_at = [&](double p) {
    const CorrelationTensor noisy = apply_isotropic_noise(ideal, p);
    const auto margin_at = [&](double alpha) {
      return verdict(noisy, alpha, which, mode).margin;
    };
    return golden_max(margin_at, 0.0, kPi / 4.0, 1e-12).value;
  };

  double lo = 0.0;
  double hi = 0.1;
  if (max_margin_at(lo) <= kWindowTol) {
    throw std::runtime_error("noise_threshold: no violation at zero noise");
  }
  if (max_margin_at(hi) > 0.0) {
    throw std::runtime_error(
        "noise_threshold: violation persists at the 10% noise bracket end");
  }
  int iterations = 0;
  while (hi - lo > tol) {
    ++iterations;
    const double mid = 0.5 * (lo + hi);
    (max_margin_at(mid) > 0.0 ? lo : hi) = mid;
  }

  ThresholdResult result;
  result.quantity = "noise-p";
  result.which = which;
  result.mode = mode;
  result.value = 0.5 * (lo + hi);
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.iterations = iterations;
  result.tolerance = tol;
  return result;
}

double closed_form_endpoint(int which, Mode mode) {
  const MarginCoefficients mc = ghz_margin_coefficients(which, mode);
  return std::atan(mc.sin_coeff / mc.cos_coeff);
}

MaxViolation closed_form_max(int which, Mode mode) {
  const MarginCoefficients mc = ghz_margin_coefficients(which, mode);
  MaxViolation result;
  result.which = which;
  result.mode = mode;
  result.alpha_star = 0.5 * std::atan(mc.sin_coeff / mc.cos_coeff);
  result.alpha_star_over_pi = result.alpha_star / kPi;
  result.margin_star = mc.constant + std::hypot(mc.cos_coeff, mc.sin_coeff);
  return result;
}

}  // namespace leggett
