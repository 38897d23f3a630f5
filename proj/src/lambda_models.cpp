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

#include "leggett/lambda_models.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "leggett/rng.hpp"

namespace leggett {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

Eigen::Vector4d pick_weight(Pick p, const BlochVector &plain,
                            const std::optional<BlochVector> &primed) {
  switch (p) {
    case Pick::kSkip:
      return Eigen::Vector4d(1.0, 0.0, 0.0, 0.0);
    case Pick::kPlain:
      return Eigen::Vector4d(0.0, plain[0], plain[1], plain[2]);
    case Pick::kPrimed:
      if (!primed.has_value()) {
        return Eigen::Vector4d::Constant(kNan);
      }
      return Eigen::Vector4d(0.0, (*primed)[0], (*primed)[1], (*primed)[2]);
  }
  return Eigen::Vector4d::Constant(kNan);
}

}  // namespace

LambdaAssignment LambdaAssignment::make_a(const std::array<Eigen::Vector3d, 4> &u) {
  for (const auto &v : u) {
    if (std::abs(v.norm() - 1.0) > 1e-9) {
      throw std::domain_error("LambdaAssignment: model A vectors must be unit length");
    }
  }
  LambdaAssignment out;
  out.model = LambdaModel::kA;
  out.bloch = u;
  return out;
}

LambdaAssignment LambdaAssignment::make_b(const Eigen::Vector4cd &pair12,
                                          const Eigen::Vector4cd &pair34) {
  const double n12 = pair12.norm();
  const double n34 = pair34.norm();
  if (n12 < 1e-12 || n34 < 1e-12) {
    throw std::domain_error("LambdaAssignment: model B amplitudes must be nonzero");
  }
  LambdaAssignment out;
  out.model = LambdaModel::kB;
  out.pair12 = pair12 / n12;
  out.pair34 = pair34 / n34;
  return out;
}

PureState LambdaAssignment::pair12_state() const {
  if (model != LambdaModel::kB) {
    throw std::domain_error("LambdaAssignment: pair states only exist for model B");
  }
  return PureState(pair12);
}

PureState LambdaAssignment::pair34_state() const {
  if (model != LambdaModel::kB) {
    throw std::domain_error("LambdaAssignment: pair states only exist for model B");
  }
  return PureState(pair34);
}

LambdaAssignment sample_lambda(LambdaModel model, uint64_t seed) {
  Prng rng(seed);
  if (model == LambdaModel::kA) {
    std::array<Eigen::Vector3d, 4> u;
    for (auto &v : u) v = rng.unit_vector();
    return LambdaAssignment::make_a(u);
  }
  Eigen::Vector4cd p12 = rng.gaussian_complex(4);
  Eigen::Vector4cd p34 = rng.gaussian_complex(4);
  return LambdaAssignment::make_b(p12, p34);
}

int CorrelationSet::index(Pick q1, Pick q2, Pick q3, Pick q4) {
  return ((static_cast<int>(q1) * 3 + static_cast<int>(q2)) * 3 +
          static_cast<int>(q3)) * 3 + static_cast<int>(q4);
}

void CorrelationSet::fill_from_factors(
    const std::array<std::array<double, 3>, 4> &factors) {
  for (int p1 = 0; p1 < 3; ++p1) {
    for (int p2 = 0; p2 < 3; ++p2) {
      for (int p3 = 0; p3 < 3; ++p3) {
        for (int p4 = 0; p4 < 3; ++p4) {
          const int idx = ((p1 * 3 + p2) * 3 + p3) * 3 + p4;
          table_[static_cast<size_t>(idx)] =
              factors[0][static_cast<size_t>(p1)] * factors[1][static_cast<size_t>(p2)] *
              factors[2][static_cast<size_t>(p3)] * factors[3][static_cast<size_t>(p4)];
        }
      }
    }
  }
}

void CorrelationSet::validate() const {
  for (double v : table_) {
    if (!std::isnan(v) && std::abs(v) > 1.0 + kPropertyTol) {
      throw std::domain_error("CorrelationSet: product averages must lie in [-1, 1]");
    }
  }
}

CorrelationSet CorrelationSet::from_lambda(const LambdaAssignment &lambda,
                                           const SettingSet &s) {
  if (lambda.model == LambdaModel::kB) {
    return from_pair_tensors(two_qubit_tensor(lambda.pair12_state()),
                             two_qubit_tensor(lambda.pair34_state()), s);
  }
  CorrelationSet out;
  out.has_primed_a_ = true;
  out.has_primed_b_ = s.has_b_prime();
  std::array<std::array<double, 3>, 4> factors{};
  factors[0] = {1.0, lambda.bloch[0].dot(s.a.vec()), lambda.bloch[0].dot(s.a_prime.vec())};
  factors[1] = {1.0, lambda.bloch[1].dot(s.b.vec()),
                s.has_b_prime() ? lambda.bloch[1].dot(s.b_prime->vec()) : kNan};
  factors[2] = {1.0, lambda.bloch[2].dot(s.c.vec()), kNan};
  factors[3] = {1.0, lambda.bloch[3].dot(s.d.vec()), kNan};
  out.fill_from_factors(factors);
  out.validate();
  return out;
}

CorrelationSet CorrelationSet::from_pair_tensors(const TwoQubitTensor &t12,
                                                 const TwoQubitTensor &t34,
                                                 const SettingSet &s) {
  CorrelationSet out;
  out.has_primed_a_ = true;
  out.has_primed_b_ = s.has_b_prime();

  std::array<Eigen::Vector4d, 3> w1, w2, w3, w4;
  for (int p = 0; p < 3; ++p) {
    const Pick pick = static_cast<Pick>(p);
    w1[static_cast<size_t>(p)] = pick_weight(pick, s.a, s.a_prime);
    w2[static_cast<size_t>(p)] = pick_weight(pick, s.b, s.b_prime);
    w3[static_cast<size_t>(p)] = pick_weight(pick, s.c, std::nullopt);
    w4[static_cast<size_t>(p)] = pick_weight(pick, s.d, std::nullopt);
  }

  // Product split: every average factors into a (1,2)-pair contraction times
  // a (3,4)-pair contraction.
  double front[3][3];
  double back[3][3];
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) {
      front[p][q] = pair_contract(t12, w1[static_cast<size_t>(p)], w2[static_cast<size_t>(q)]);
      back[p][q] = pair_contract(t34, w3[static_cast<size_t>(p)], w4[static_cast<size_t>(q)]);
    }
  }
  for (int p1 = 0; p1 < 3; ++p1) {
    for (int p2 = 0; p2 < 3; ++p2) {
      for (int p3 = 0; p3 < 3; ++p3) {
        for (int p4 = 0; p4 < 3; ++p4) {
          const int idx = ((p1 * 3 + p2) * 3 + p3) * 3 + p4;
          out.table_[static_cast<size_t>(idx)] = front[p1][p2] * back[p3][p4];
        }
      }
    }
  }
  out.validate();
  return out;
}

CorrelationSet CorrelationSet::from_unprimed_averages(
    const std::array<double, 16> &by_mask) {
  if (std::abs(by_mask[0] - 1.0) > kConstructionTol) {
    throw std::domain_error("CorrelationSet: the empty-product average must be 1");
  }
  CorrelationSet out;
  out.has_primed_a_ = false;
  out.has_primed_b_ = false;
  out.table_.fill(kNan);
  for (int mask = 0; mask < 16; ++mask) {
    const Pick q1 = (mask & 1) ? Pick::kPlain : Pick::kSkip;
    const Pick q2 = (mask & 2) ? Pick::kPlain : Pick::kSkip;
    const Pick q3 = (mask & 4) ? Pick::kPlain : Pick::kSkip;
    const Pick q4 = (mask & 8) ? Pick::kPlain : Pick::kSkip;
    out.table_[static_cast<size_t>(index(q1, q2, q3, q4))] =
        by_mask[static_cast<size_t>(mask)];
  }
  out.validate();
  return out;
}

double CorrelationSet::avg(Pick q1, Pick q2, Pick q3, Pick q4) const {
  const double v = table_[static_cast<size_t>(index(q1, q2, q3, q4))];
  if (std::isnan(v)) {
    throw std::domain_error("CorrelationSet: requested average is not defined");
  }
  return v;
}

double CorrelationSet::unprimed(int mask) const {
  if (mask < 0 || mask > 15) {
    throw std::domain_error("CorrelationSet: mask must be in 0..15");
  }
  return avg((mask & 1) ? Pick::kPlain : Pick::kSkip,
             (mask & 2) ? Pick::kPlain : Pick::kSkip,
             (mask & 4) ? Pick::kPlain : Pick::kSkip,
             (mask & 8) ? Pick::kPlain : Pick::kSkip);
}

double outcome_probability(const CorrelationSet &cs, int a, int b, int c, int d) {
  if (std::abs(a) != 1 || std::abs(b) != 1 || std::abs(c) != 1 || std::abs(d) != 1) {
    throw std::domain_error("outcome_probability: outcomes must be +-1");
  }
  const double sign[4] = {static_cast<double>(a), static_cast<double>(b),
                          static_cast<double>(c), static_cast<double>(d)};
  double total = 0.0;
  for (int mask = 0; mask < 16; ++mask) {
    double coeff = 1.0;
    for (int q = 0; q < 4; ++q) {
      if (mask & (1 << q)) coeff *= sign[q];
    }
    total += coeff * cs.unprimed(mask);
  }
  return total / 16.0;
}

PositivityVerdict check_positivity(const CorrelationSet &cs) {
  PositivityVerdict verdict;
  verdict.min_probability = std::numeric_limits<double>::infinity();
  for (int a = -1; a <= 1; a += 2) {
    for (int b = -1; b <= 1; b += 2) {
      for (int c = -1; c <= 1; c += 2) {
        for (int d = -1; d <= 1; d += 2) {
          verdict.min_probability =
              std::min(verdict.min_probability, outcome_probability(cs, a, b, c, d));
        }
      }
    }
  }
  verdict.ok = verdict.min_probability >= kPositivityTol;
  return verdict;
}

double ChainReport::min_slack() const {
  double m = std::min({quad_pair_sum, quad_pair_diff, quad_single, pair_sum_bound});
  if (primed_quad.has_value()) m = std::min(m, *primed_quad);
  if (tilt_minus.has_value()) m = std::min(m, *tilt_minus);
  if (tilt_plus.has_value()) m = std::min(m, *tilt_plus);
  return m;
}

ChainReport check_chain(const LambdaAssignment &lambda, const SettingSet &s) {
  return check_chain(CorrelationSet::from_lambda(lambda, s));
}

ChainReport check_chain(const CorrelationSet &cs) {
  const Pick S = Pick::kSkip;
  const Pick P = Pick::kPlain;
  const Pick R = Pick::kPrimed;

  const double quad = cs.avg(P, P, P, P);
  const double ab = cs.avg(P, P, S, S);
  const double cd = cs.avg(S, S, P, P);
  const double a1 = cs.avg(P, S, S, S);
  const double b1 = cs.avg(S, P, S, S);
  const double acd = cs.avg(P, S, P, P);
  const double bcd = cs.avg(S, P, P, P);

  ChainReport report;
  report.quad_pair_sum = quad + ab + cd + 1.0 - std::abs(a1 + b1 + acd + bcd);
  report.quad_pair_diff = quad - ab - cd + 1.0 - std::abs(a1 - b1 - acd + bcd);
  report.quad_single = quad + 1.0 - std::abs(a1 + bcd);
  report.pair_sum_bound = quad + 1.0 - std::abs(ab + cd);

  if (cs.has_primed_a()) {
    const double ap = cs.avg(R, S, S, S);
    const double ap_quad = cs.avg(R, P, P, P);
    report.primed_quad = quad + ap_quad + 2.0 - std::abs(a1 - ap);
  }

  if (cs.has_primed_b()) {
    const double sum4 = quad + cs.avg(P, R, P, P) + cs.avg(R, P, P, P) + cs.avg(R, R, P, P);
    const double abp = cs.avg(P, R, S, S);
    const double apb = cs.avg(R, P, S, S);
    const double apbp = cs.avg(R, R, S, S);
    const double plus_minus = ab - abp + apb - apbp;   // <(A+A')(B-B')>
    const double minus_plus = ab + abp - apb - apbp;   // <(A-A')(B+B')>
    report.tilt_minus = sum4 + 4.0 - std::abs(plus_minus);
    report.tilt_plus = sum4 + 4.0 - std::abs(minus_plus);
  }
  return report;
}

double moduli_sum(const LambdaAssignment &lambda, double alpha) {
  if (lambda.model != LambdaModel::kB) {
    throw std::domain_error("moduli_sum: defined for model B assignments only");
  }
  return moduli_sum(two_qubit_tensor(lambda.pair12_state()), alpha);
}

double moduli_sum(const TwoQubitTensor &t12, double alpha) {
  const auto weight = [](const BlochVector &d) {
    return Eigen::Vector4d(0.0, d[0], d[1], d[2]);
  };
  const Eigen::Vector4d identity(1.0, 0.0, 0.0, 0.0);

  double total = 0.0;
  for (const SettingSet &plain : family_one(alpha)) {
    const Eigen::Vector4d da = weight(plain.a) - weight(plain.a_prime);
    total += std::abs(pair_contract(t12, da, identity));
    const SettingSet swapped = triangle_swap(plain);
    const Eigen::Vector4d db = weight(*swapped.b_prime) - weight(swapped.b);
    total += std::abs(pair_contract(t12, identity, db));
  }
  for (const SettingSet &s : family_two(alpha)) {
    const Eigen::Vector4d sa = weight(s.a) + weight(s.a_prime);
    const Eigen::Vector4d da = weight(s.a) - weight(s.a_prime);
    const Eigen::Vector4d sb = weight(s.b) + weight(*s.b_prime);
    const Eigen::Vector4d db = weight(s.b) - weight(*s.b_prime);
    total += std::abs(pair_contract(t12, sa, db)) + std::abs(pair_contract(t12, da, sb));
  }
  return total;
}

double taxi_norm(const Eigen::Vector3d &v) {
  if (std::abs(v.norm() - 1.0) > 1e-9) {
    throw std::domain_error("taxi_norm: input must be a unit vector");
  }
  return std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]);
}

}  // namespace leggett
