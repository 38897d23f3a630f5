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

#include "leggett/inequalities.hpp"

#include <cmath>
#include <stdexcept>

#include "leggett/settings.hpp"

namespace leggett {

namespace {

double quad(const CorrelationTensor &t, const BlochVector &a, const BlochVector &b,
            const BlochVector &c, const BlochVector &d) {
  return expectation(t, {a, b, c, d});
}

void check_which(int which) {
  if (which != 1 && which != 2) {
    throw std::domain_error("inequality selector must be 1 or 2");
  }
}

}  // namespace

Mode parse_mode(std::string_view name) {
  if (name == "paper") return Mode::kPaper;
  if (name == "rederived") return Mode::kRederived;
  throw std::domain_error("mode must be 'paper' or 'rederived'");
}

std::string to_string(Mode mode) {
  return mode == Mode::kPaper ? "paper" : "rederived";
}

double leggett1_lhs(const CorrelationTensor &t, double alpha) {
  double total = 0.0;
  for (const SettingSet &s : family_one(alpha)) {
    total += quad(t, s.a, s.b, s.c, s.d) + quad(t, s.a_prime, s.b, s.c, s.d);
  }
  return total;
}

double leggett1_bound(double alpha) {
  return -6.0 + 2.0 * std::abs(std::sin(2.0 * alpha));
}

double leggett2_lhs(const CorrelationTensor &t, double alpha, Mode mode) {
  double family_one_part = 0.0;
  for (const SettingSet &s : family_one(alpha)) {
    family_one_part += quad(t, s.a, s.b, s.c, s.d) + quad(t, s.a_prime, s.b, s.c, s.d);
    const SettingSet sw = triangle_swap(s);
    family_one_part += quad(t, sw.a, sw.b, sw.c, sw.d) + quad(t, sw.a, *sw.b_prime, sw.c, sw.d);
  }
  double family_two_sum = 0.0;
  for (const SettingSet &s : family_two(alpha)) {
    family_two_sum += quad(t, s.a, s.b, s.c, s.d) + quad(t, s.a, *s.b_prime, s.c, s.d) +
                      quad(t, s.a_prime, s.b, s.c, s.d) +
                      quad(t, s.a_prime, *s.b_prime, s.c, s.d);
  }
  const double weight = (mode == Mode::kPaper) ? 4.0 : 2.0;
  return family_one_part + weight * family_two_sum;
}

double leggett2_bound(double alpha, Mode mode) {
  const double constant = (mode == Mode::kPaper) ? -76.0 : -44.0;
  return constant + 4.0 * std::abs(std::sin(2.0 * alpha));
}

InequalityVerdict verdict(const CorrelationTensor &t, double alpha, int which,
                          Mode mode) {
  check_which(which);
  InequalityVerdict v;
  v.which = which;
  v.mode = mode;
  v.alpha = alpha;
  if (which == 1) {
    v.lhs = leggett1_lhs(t, alpha);
    v.bound = leggett1_bound(alpha);
  } else {
    v.lhs = leggett2_lhs(t, alpha, mode);
    v.bound = leggett2_bound(alpha, mode);
  }
  v.margin = v.bound - v.lhs;
  v.violated = v.margin > kViolationTol;
  return v;
}

InequalityVerdict verdict(const DensityOperator &state, double alpha, int which,
                          Mode mode) {
  return verdict(correlation_tensor(state), alpha, which, mode);
}

MarginCoefficients ghz_margin_coefficients(int which, Mode mode) {
  check_which(which);
  if (which == 1) {
    return {-6.0, 6.0, 2.0};
  }
  if (mode == Mode::kPaper) {
    return {-44.0, 44.0, 4.0};
  }
  return {-28.0, 28.0, 4.0};
}

}  // namespace leggett
