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

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "leggett/lambda_models.hpp"
#include "leggett/rng.hpp"
#include "oracle.hpp"

namespace {

using leggett::ChainReport;
using leggett::CorrelationSet;
using leggett::LambdaAssignment;
using leggett::LambdaModel;
using leggett::Pick;
using leggett::SettingSet;

// The ten setting sets a hidden-variable audit touches at one angle.
std::vector<SettingSet> audit_sets(double alpha) {
  std::vector<SettingSet> sets;
  for (const SettingSet &s : leggett::family_one(alpha)) {
    sets.push_back(s);
    sets.push_back(leggett::triangle_swap(s));
  }
  for (const SettingSet &s : leggett::family_two(alpha)) {
    sets.push_back(s);
  }
  return sets;
}

std::vector<Pick> picks_for(bool primed_defined) {
  if (primed_defined) return {Pick::kSkip, Pick::kPlain, Pick::kPrimed};
  return {Pick::kSkip, Pick::kPlain};
}

TEST_CASE("make_a requires unit vectors and make_b normalizes") {
  std::array<Eigen::Vector3d, 4> u = {
      Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0),
      Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(0.6, 0.8, 0)};
  CHECK(LambdaAssignment::make_a(u).model == LambdaModel::kA);
  u[3] *= 2.0;
  CHECK_THROWS_AS(LambdaAssignment::make_a(u), std::domain_error);

  Eigen::Vector4cd raw;
  raw << 2.0, 0.0, 0.0, 2.0;
  const LambdaAssignment b = LambdaAssignment::make_b(raw, raw);
  CHECK(b.model == LambdaModel::kB);
  CHECK(std::abs(b.pair12.norm() - 1.0) < 1e-12);
  CHECK_THROWS_AS(
      LambdaAssignment::make_b(Eigen::Vector4cd::Zero(), raw),
      std::domain_error);
}

TEST_CASE("sample_lambda is deterministic and produces valid payloads") {
  const LambdaAssignment a1 = leggett::sample_lambda(LambdaModel::kA, 5);
  const LambdaAssignment a2 = leggett::sample_lambda(LambdaModel::kA, 5);
  for (int q = 0; q < 4; ++q) {
    CHECK((a1.bloch[q] - a2.bloch[q]).norm() == 0.0);
    CHECK(std::abs(a1.bloch[q].norm() - 1.0) < 1e-12);
  }
  const LambdaAssignment b1 = leggett::sample_lambda(LambdaModel::kB, 5);
  const LambdaAssignment b2 = leggett::sample_lambda(LambdaModel::kB, 6);
  CHECK(std::abs(b1.pair12.norm() - 1.0) < 1e-12);
  CHECK(std::abs(b1.pair34.norm() - 1.0) < 1e-12);
  CHECK((b1.pair12 - b2.pair12).norm() > 1e-6);
}

TEST_CASE("model A averages factor into Bloch projections") {
  leggett::Prng prng(17);
  std::array<Eigen::Vector3d, 4> u;
  for (auto &v : u) v = prng.unit_vector();
  const LambdaAssignment lambda = LambdaAssignment::make_a(u);

  const SettingSet s = leggett::family_one(0.2)[1];
  const CorrelationSet cs = CorrelationSet::from_lambda(lambda, s);

  const double ea = u[0].dot(s.a.vec());
  const double eap = u[0].dot(s.a_prime.vec());
  const double eb = u[1].dot(s.b.vec());
  const double ec = u[2].dot(s.c.vec());
  const double ed = u[3].dot(s.d.vec());

  CHECK(std::abs(cs.avg(Pick::kPlain, Pick::kPlain, Pick::kPlain, Pick::kPlain) -
                 ea * eb * ec * ed) < 1e-12);
  CHECK(std::abs(cs.avg(Pick::kPrimed, Pick::kSkip, Pick::kSkip, Pick::kSkip) -
                 eap) < 1e-12);
  CHECK(std::abs(cs.avg(Pick::kSkip, Pick::kPlain, Pick::kPlain, Pick::kSkip) -
                 eb * ec) < 1e-12);
  CHECK(std::abs(cs.avg(Pick::kSkip, Pick::kSkip, Pick::kSkip, Pick::kSkip) -
                 1.0) < 1e-12);

  // The first family defines no primed direction on qubit 2.
  CHECK_FALSE(cs.has_primed_b());
  CHECK_THROWS_AS(
      cs.avg(Pick::kPlain, Pick::kPrimed, Pick::kPlain, Pick::kPlain),
      std::domain_error);
}

TEST_CASE("model B averages equal product-state expectations of the joint state") {
  const LambdaAssignment lambda = leggett::sample_lambda(LambdaModel::kB, 23);
  const Eigen::VectorXcd joint =
      oracle::kron_vec(lambda.pair12, lambda.pair34);

  for (const SettingSet &s : audit_sets(0.37)) {
    const CorrelationSet cs = CorrelationSet::from_lambda(lambda, s);
    for (Pick p1 : picks_for(true)) {
      for (Pick p2 : picks_for(cs.has_primed_b())) {
        for (Pick p3 : picks_for(false)) {
          for (Pick p4 : picks_for(false)) {
            std::vector<std::optional<Eigen::Vector3d>> dirs(4);
            if (p1 == Pick::kPlain) dirs[0] = s.a.vec();
            if (p1 == Pick::kPrimed) dirs[0] = s.a_prime.vec();
            if (p2 == Pick::kPlain) dirs[1] = s.b.vec();
            if (p2 == Pick::kPrimed) dirs[1] = s.b_prime->vec();
            if (p3 == Pick::kPlain) dirs[2] = s.c.vec();
            if (p4 == Pick::kPlain) dirs[3] = s.d.vec();
            const double ref = oracle::direction_expectation(joint, dirs);
            CHECK(std::abs(cs.avg(p1, p2, p3, p4) - ref) < 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("precomputed pair tensors give identical correlation sets") {
  const LambdaAssignment lambda = leggett::sample_lambda(LambdaModel::kB, 29);
  const leggett::TwoQubitTensor t12 =
      leggett::two_qubit_tensor(lambda.pair12_state());
  const leggett::TwoQubitTensor t34 =
      leggett::two_qubit_tensor(lambda.pair34_state());

  for (const SettingSet &s : audit_sets(0.11)) {
    const CorrelationSet direct = CorrelationSet::from_lambda(lambda, s);
    const CorrelationSet hoisted =
        CorrelationSet::from_pair_tensors(t12, t34, s);
    for (Pick p1 : picks_for(true)) {
      for (Pick p2 : picks_for(direct.has_primed_b())) {
        for (Pick p3 : picks_for(false)) {
          for (Pick p4 : picks_for(false)) {
            CHECK(std::abs(direct.avg(p1, p2, p3, p4) -
                           hoisted.avg(p1, p2, p3, p4)) < 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("unprimed masks agree with explicit pick combinations") {
  const LambdaAssignment lambda = leggett::sample_lambda(LambdaModel::kA, 31);
  const SettingSet s = leggett::family_two(0.4)[2];
  const CorrelationSet cs = CorrelationSet::from_lambda(lambda, s);
  for (int mask = 0; mask < 16; ++mask) {
    const auto pick = [mask](int bit) {
      return (mask >> bit) & 1 ? Pick::kPlain : Pick::kSkip;
    };
    CHECK(cs.unprimed(mask) ==
          cs.avg(pick(0), pick(1), pick(2), pick(3)));
  }
}

TEST_CASE("hand-crafted statistics round-trip and forbid primed reads") {
  std::array<double, 16> by_mask{};
  by_mask[0] = 1.0;
  by_mask[5] = 0.25;   // qubits 1 and 3
  by_mask[15] = -0.5;  // full product
  const CorrelationSet cs = CorrelationSet::from_unprimed_averages(by_mask);
  CHECK(cs.unprimed(5) == 0.25);
  CHECK(cs.unprimed(15) == -0.5);
  CHECK_FALSE(cs.has_primed_b());
  CHECK_THROWS_AS(
      cs.avg(Pick::kPrimed, Pick::kSkip, Pick::kSkip, Pick::kSkip),
      std::domain_error);

  by_mask[0] = 0.5;
  CHECK_THROWS_AS(CorrelationSet::from_unprimed_averages(by_mask),
                  std::domain_error);
}

TEST_CASE("outcome probabilities of product assignments match the closed form") {
  leggett::Prng prng(37);
  std::array<Eigen::Vector3d, 4> u;
  for (auto &v : u) v = prng.unit_vector();
  const LambdaAssignment lambda = LambdaAssignment::make_a(u);
  const SettingSet s = leggett::family_one(0.15)[0];
  const CorrelationSet cs = CorrelationSet::from_lambda(lambda, s);

  const std::array<Eigen::Vector3d, 4> dirs = {s.a.vec(), s.b.vec(),
                                               s.c.vec(), s.d.vec()};
  double total = 0.0;
  for (int pattern = 0; pattern < 16; ++pattern) {
    const auto sign = [pattern](int q) {
      return (pattern >> q) & 1 ? -1 : 1;
    };
    double expected = 1.0;
    for (int q = 0; q < 4; ++q) {
      expected *= 0.5 * (1.0 + sign(q) * u[q].dot(dirs[q]));
    }
    const double p =
        leggett::outcome_probability(cs, sign(0), sign(1), sign(2), sign(3));
    CHECK(std::abs(p - expected) < 1e-12);
    total += p;
  }
  CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("outcome probabilities sum to one for both models") {
  for (int k = 0; k < 50; ++k) {
    const LambdaModel model = k % 2 == 0 ? LambdaModel::kA : LambdaModel::kB;
    const LambdaAssignment lambda = leggett::sample_lambda(model, 1000 + k);
    for (const SettingSet &s : audit_sets(0.21)) {
      const CorrelationSet cs = CorrelationSet::from_lambda(lambda, s);
      double total = 0.0;
      for (int pattern = 0; pattern < 16; ++pattern) {
        const int a = pattern & 1 ? -1 : 1;
        const int b = pattern & 2 ? -1 : 1;
        const int c = pattern & 4 ? -1 : 1;
        const int d = pattern & 8 ? -1 : 1;
        total += leggett::outcome_probability(cs, a, b, c, d);
      }
      CHECK(std::abs(total - 1.0) < 1e-10);
      CHECK(leggett::check_positivity(cs).ok);
    }
  }
  const CorrelationSet cs = CorrelationSet::from_lambda(
      leggett::sample_lambda(LambdaModel::kA, 3), leggett::family_one(0.1)[0]);
  CHECK_THROWS_AS(leggett::outcome_probability(cs, 1, 1, 1, 0),
                  std::domain_error);
}

TEST_CASE("chain slacks are nonnegative for sampled hidden variables") {
  const auto sets = audit_sets(0.19);
  for (int k = 0; k < 1000; ++k) {
    const LambdaModel model = k % 2 == 0 ? LambdaModel::kA : LambdaModel::kB;
    const LambdaAssignment lambda = leggett::sample_lambda(model, 40000 + k);
    for (const SettingSet &s : sets) {
      const ChainReport r = leggett::check_chain(lambda, s);
      CHECK(r.min_slack() >= leggett::kSlackTol);
      CHECK(r.primed_quad.has_value());
      CHECK(r.tilt_minus.has_value() == s.has_b_prime());
      CHECK(r.tilt_plus.has_value() == s.has_b_prime());
    }
  }
}

TEST_CASE("non-physical statistics break the chain and positivity together") {
  std::array<double, 16> by_mask{};
  by_mask[0] = 1.0;
  by_mask[1] = 1.0;    // <A>
  by_mask[14] = 1.0;   // <BCD>
  by_mask[15] = -1.0;  // <ABCD>
  const CorrelationSet cs = CorrelationSet::from_unprimed_averages(by_mask);
  CHECK_FALSE(cs.has_primed_a());
  const ChainReport r = leggett::check_chain(cs);
  CHECK_FALSE(r.primed_quad.has_value());
  CHECK(r.quad_single == -2.0);
  CHECK(r.min_slack() <= -2.0);
  const leggett::PositivityVerdict v = leggett::check_positivity(cs);
  CHECK_FALSE(v.ok);
  CHECK(v.min_probability < -0.1);
}

TEST_CASE("moduli sum hits the floor exactly for separable pair states") {
  // |00> leaves only the two first-family probes along the shared z marginal.
  Eigen::Vector4cd zz = Eigen::Vector4cd::Zero();
  zz[0] = 1.0;
  const LambdaAssignment lambda = LambdaAssignment::make_b(zz, zz);
  for (double alpha : {0.0, 0.1, 0.35, M_PI / 4.0}) {
    const double expected = 4.0 * std::abs(std::sin(2.0 * alpha));
    CHECK(std::abs(leggett::moduli_sum(lambda, alpha) - expected) < 1e-12);
  }
}

TEST_CASE("moduli sum of maximally entangled pair states") {
  // The Bell state (|00> + |11>)/sqrt(2) also sits exactly on the floor;
  // its marginals vanish and only one second-family set fires.
  Eigen::Vector4cd bell = Eigen::Vector4cd::Zero();
  bell[0] = bell[3] = 1.0;
  const LambdaAssignment lb = LambdaAssignment::make_b(bell, bell);

  // (|00> + |10> + |01> - |11>)/2 correlates x with z in both orders and
  // lands strictly above the floor, at 6 |sin 2a|.
  Eigen::Vector4cd rot;
  rot << 1.0, 1.0, 1.0, -1.0;
  const LambdaAssignment lr = LambdaAssignment::make_b(rot, rot);

  for (double alpha : {0.05, 0.2, 0.6}) {
    const double s2 = std::abs(std::sin(2.0 * alpha));
    CHECK(std::abs(leggett::moduli_sum(lb, alpha) - 4.0 * s2) < 1e-12);
    CHECK(std::abs(leggett::moduli_sum(lr, alpha) - 6.0 * s2) < 1e-12);
  }
}

TEST_CASE("moduli sum stays above the model B floor on random states") {
  for (double alpha : {0.08, 0.25, 0.7}) {
    const double floor = 4.0 * std::abs(std::sin(2.0 * alpha));
    for (int k = 0; k < 3000; ++k) {
      const LambdaAssignment lambda =
          leggett::sample_lambda(LambdaModel::kB, 70000 + k);
      CHECK(leggett::moduli_sum(lambda, alpha) >= floor - leggett::kViolationTol);
    }
  }
  CHECK_THROWS_AS(
      leggett::moduli_sum(leggett::sample_lambda(LambdaModel::kA, 1), 0.1),
      std::domain_error);
}

TEST_CASE("taxi norm of unit vectors is at least one") {
  CHECK(leggett::taxi_norm(Eigen::Vector3d(1, 0, 0)) == 1.0);
  const double diag = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(leggett::taxi_norm(Eigen::Vector3d(diag, diag, diag)) -
                 std::sqrt(3.0)) < 1e-12);
  leggett::Prng prng(91);
  for (int k = 0; k < 10000; ++k) {
    CHECK(leggett::taxi_norm(prng.unit_vector()) >= 1.0 - 1e-12);
  }
  CHECK_THROWS_AS(leggett::taxi_norm(Eigen::Vector3d(2, 0, 0)),
                  std::domain_error);
}

}  // namespace
