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

#include "leggett/hv_search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "leggett/inequalities.hpp"
#include "leggett/rng.hpp"

namespace leggett {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Objective value returned for charts outside the state manifold.
constexpr double kChartPenalty = 1e100;

// Nelder-Mead budget per restart.
constexpr double kSimplexDiameterTol = 1e-8;
constexpr long kMaxEvaluationsPerRestart = 10000;
constexpr double kInitialStep = 0.5;

// At most this many catalog-derived starts per piece; the rest are random.
constexpr int kWarmStartCap = 8;

// Seed-space stride separating the restart streams of different pieces.
constexpr std::uint64_t kRestartStride = std::uint64_t{1} << 20;

std::vector<SettingSet> audit_sets(LambdaModel model, double alpha) {
  std::vector<SettingSet> sets;
  for (const SettingSet &s : family_one(alpha)) sets.push_back(s);
  if (model == LambdaModel::kB) {
    for (const SettingSet &s : family_one(alpha)) {
      sets.push_back(triangle_swap(s));
    }
    for (const SettingSet &s : family_two(alpha)) sets.push_back(s);
  }
  return sets;
}

}  // namespace

CampaignReport run_campaign(LambdaModel model, double alpha, int samples,
                            std::uint64_t seed) {
  if (samples < 1) {
    throw std::domain_error("run_campaign: samples must be at least 1");
  }
  const std::vector<SettingSet> sets = audit_sets(model, alpha);
  const double integrand_floor =
      (model == LambdaModel::kA ? 2.0 : 4.0) * std::abs(std::sin(2.0 * alpha));

  CampaignReport report;
  report.model = model;
  report.alpha = alpha;
  report.samples = samples;
  report.seed = seed;
  report.min_chain_slack = kInf;
  report.min_integrand_slack = kInf;
  report.min_outcome_probability = kInf;

  for (int idx = 0; idx < samples; ++idx) {
    const LambdaAssignment lam =
        sample_lambda(model, derive_seed(seed, static_cast<std::uint64_t>(idx)));

    std::optional<TwoQubitTensor> t12;
    std::optional<TwoQubitTensor> t34;
    double integrand = 0.0;
    if (model == LambdaModel::kB) {
      t12 = two_qubit_tensor(lam.pair12_state());
      t34 = two_qubit_tensor(lam.pair34_state());
      integrand = moduli_sum(*t12, alpha);
    }

    for (const SettingSet &s : sets) {
      const CorrelationSet cs = model == LambdaModel::kB
                                    ? CorrelationSet::from_pair_tensors(*t12, *t34, s)
                                    : CorrelationSet::from_lambda(lam, s);
      const ChainReport chain = check_chain(cs);
      const double slack = chain.min_slack();
      const PositivityVerdict pos = check_positivity(cs);

      report.min_chain_slack = std::min(report.min_chain_slack, slack);
      report.min_outcome_probability =
          std::min(report.min_outcome_probability, pos.min_probability);

      const bool chain_bad = slack < kSlackTol;
      if (chain_bad) ++report.chain_failures;
      if (!pos.ok) ++report.positivity_failures;
      if ((chain_bad || !pos.ok) &&
          static_cast<int>(report.counterexamples.size()) < kMaxCounterexamples) {
        report.counterexamples.push_back(
            {chain_bad ? "chain" : "positivity", lam, s, chain,
             pos.min_probability, 0.0});
      }

      if (model == LambdaModel::kA) {
        const double plain =
            cs.avg(Pick::kPlain, Pick::kSkip, Pick::kSkip, Pick::kSkip);
        const double primed =
            cs.avg(Pick::kPrimed, Pick::kSkip, Pick::kSkip, Pick::kSkip);
        integrand += std::abs(plain - primed);
      }
    }

    const double integrand_slack = integrand - integrand_floor;
    report.min_integrand_slack =
        std::min(report.min_integrand_slack, integrand_slack);
    if (integrand_slack < -kPropertyTol) {
      ++report.integrand_failures;
      if (static_cast<int>(report.counterexamples.size()) < kMaxCounterexamples) {
        report.counterexamples.push_back({"integrand", lam, sets.front(),
                                          check_chain(lam, sets.front()), 0.0,
                                          integrand_slack});
      }
    }
  }
  return report;
}

namespace {

Eigen::Matrix2cd direction_matrix(const Eigen::Vector3d &d) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  for (int k = 0; k < 3; ++k) m += d[k] * pauli_matrix(k + 1);
  return m;
}

Eigen::Matrix4cd pair_observable(const Eigen::Vector3d &f, const Eigen::Vector3d &g) {
  return kron(direction_matrix(f), direction_matrix(g));
}

Eigen::Matrix4cd slot1_observable(const Eigen::Vector3d &f) {
  return kron(direction_matrix(f), Eigen::Matrix2cd::Identity());
}

Eigen::Matrix4cd slot2_observable(const Eigen::Vector3d &g) {
  return kron(Eigen::Matrix2cd::Identity(), direction_matrix(g));
}

// Model-B piece precompiled to pair observables: a signed sum of
// coeff * <front>_12 * <back>_34 terms minus |<m>_12| moduli.
struct FastPiece {
  struct QuadTerm {
    double coeff;
    Eigen::Matrix4cd front;
    Eigen::Matrix4cd back;
  };
  std::vector<QuadTerm> quads;
  std::vector<Eigen::Matrix4cd> moduli;

  double value(const Eigen::Vector4cd &p12, const Eigen::Vector4cd &p34) const {
    double total = 0.0;
    for (const QuadTerm &q : quads) {
      total += q.coeff * p12.dot(q.front * p12).real() *
               p34.dot(q.back * p34).real();
    }
    for (const Eigen::Matrix4cd &m : moduli) {
      total -= std::abs(p12.dot(m * p12).real());
    }
    return total;
  }
};

FastPiece compile_piece(const BoundPiece &piece) {
  FastPiece fast;
  if (piece.sets.size() == 2) {
    // First family: plain set plus its side-swapped variant.
    const SettingSet &plain = piece.sets[0];
    const SettingSet &sw = piece.sets[1];
    fast.quads.push_back({1.0,
                          pair_observable(plain.a + plain.a_prime, plain.b.vec()),
                          pair_observable(plain.c.vec(), plain.d.vec())});
    fast.moduli.push_back(slot1_observable(plain.a - plain.a_prime));
    fast.quads.push_back({1.0,
                          pair_observable(sw.a.vec(), sw.b + *sw.b_prime),
                          pair_observable(sw.c.vec(), sw.d.vec())});
    fast.moduli.push_back(slot2_observable(sw.b - *sw.b_prime));
    return fast;
  }
  const SettingSet &s = piece.sets.front();
  const Eigen::Vector3d sa = s.a + s.a_prime;
  const Eigen::Vector3d da = s.a - s.a_prime;
  const Eigen::Vector3d sb = s.b + *s.b_prime;
  const Eigen::Vector3d db = s.b - *s.b_prime;
  fast.quads.push_back({2.0, pair_observable(sa, sb),
                        pair_observable(s.c.vec(), s.d.vec())});
  fast.moduli.push_back(pair_observable(sa, db));
  fast.moduli.push_back(pair_observable(da, sb));
  return fast;
}

}  // namespace

double BoundPiece::evaluate(const LambdaAssignment &lambda) const {
  if (lambda.model != model) {
    throw std::domain_error("BoundPiece::evaluate: assignment model mismatch");
  }
  if (model == LambdaModel::kA) {
    const SettingSet &s = sets.front();
    const Eigen::Vector3d tilt_sum = s.a + s.a_prime;
    const Eigen::Vector3d tilt_diff = s.a - s.a_prime;
    const std::array<Eigen::Vector3d, 4> &u = lambda.bloch;
    const double quad = u[0].dot(tilt_sum) * u[1].dot(s.b.vec()) *
                        u[2].dot(s.c.vec()) * u[3].dot(s.d.vec());
    return quad - std::abs(u[0].dot(tilt_diff));
  }
  const FastPiece fast = compile_piece(*this);
  const Eigen::Vector4cd p12 = lambda.pair12_state().amplitudes();
  const Eigen::Vector4cd p34 = lambda.pair34_state().amplitudes();
  return fast.value(p12, p34);
}

std::vector<BoundPiece> bound_pieces(int which, double alpha) {
  if (which != 1 && which != 2) {
    throw std::domain_error("bound_pieces: inequality selector must be 1 or 2");
  }
  std::vector<BoundPiece> pieces;
  const std::array<SettingSet, 3> fam1 = family_one(alpha);
  if (which == 1) {
    for (int i = 0; i < 3; ++i) {
      BoundPiece p;
      p.name = "first-family-set-" + std::to_string(i + 1);
      p.which = 1;
      p.model = LambdaModel::kA;
      p.alpha = alpha;
      p.constant = -2.0;
      p.sets = {fam1[i]};
      pieces.push_back(std::move(p));
    }
    return pieces;
  }
  for (int i = 0; i < 3; ++i) {
    BoundPiece p;
    p.name = "first-family-set-" + std::to_string(i + 1);
    p.which = 2;
    p.model = LambdaModel::kB;
    p.alpha = alpha;
    p.constant = -4.0;
    p.sets = {fam1[i], triangle_swap(fam1[i])};
    pieces.push_back(std::move(p));
  }
  for (const SettingSet &s : family_two(alpha)) {
    BoundPiece p;
    p.name = "second-family-set-" + std::to_string(s.family_id);
    p.which = 2;
    p.model = LambdaModel::kB;
    p.alpha = alpha;
    p.constant = -8.0;
    p.sets = {s};
    pieces.push_back(std::move(p));
  }
  return pieces;
}

namespace {

struct SimplexOutcome {
  Eigen::VectorXd best_x;
  double best_value = kChartPenalty;
  long evaluations = 0;
};

// Nelder-Mead downhill simplex with standard coefficients; stops on simplex
// diameter below kSimplexDiameterTol or the evaluation budget.
SimplexOutcome nelder_mead(const std::function<double(const Eigen::VectorXd &)> &f,
                           const Eigen::VectorXd &start) {
  const int n = static_cast<int>(start.size());
  long evaluations = 0;
  const auto eval = [&](const Eigen::VectorXd &x) {
    ++evaluations;
    return f(x);
  };

  std::vector<Eigen::VectorXd> xs;
  std::vector<double> fs;
  xs.reserve(n + 1);
  fs.reserve(n + 1);
  xs.push_back(start);
  fs.push_back(eval(start));
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd x = start;
    x[k] += kInitialStep;
    xs.push_back(std::move(x));
    fs.push_back(eval(xs.back()));
  }

  std::vector<int> order(n + 1);
  while (evaluations < kMaxEvaluationsPerRestart) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fs[a] < fs[b]; });
    std::vector<Eigen::VectorXd> sorted_xs(n + 1);
    std::vector<double> sorted_fs(n + 1);
    for (int k = 0; k <= n; ++k) {
      sorted_xs[k] = xs[order[k]];
      sorted_fs[k] = fs[order[k]];
    }
    xs.swap(sorted_xs);
    fs.swap(sorted_fs);

    double diameter = 0.0;
    for (int k = 1; k <= n; ++k) {
      diameter = std::max(diameter, (xs[k] - xs[0]).norm());
    }
    if (diameter < kSimplexDiameterTol) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < n; ++k) centroid += xs[k];
    centroid /= n;

    const Eigen::VectorXd reflected = centroid + (centroid - xs[n]);
    const double fr = eval(reflected);
    if (fr < fs[0]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - xs[n]);
      const double fe = eval(expanded);
      if (fe < fr) {
        xs[n] = expanded;
        fs[n] = fe;
      } else {
        xs[n] = reflected;
        fs[n] = fr;
      }
      continue;
    }
    if (fr < fs[n - 1]) {
      xs[n] = reflected;
      fs[n] = fr;
      continue;
    }
    Eigen::VectorXd contracted;
    if (fr < fs[n]) {
      contracted = centroid + 0.5 * (reflected - centroid);
    } else {
      contracted = centroid + 0.5 * (xs[n] - centroid);
    }
    const double fc = eval(contracted);
    if (fc < std::min(fr, fs[n])) {
      xs[n] = contracted;
      fs[n] = fc;
      continue;
    }
    for (int k = 1; k <= n; ++k) {
      xs[k] = xs[0] + 0.5 * (xs[k] - xs[0]);
      fs[k] = eval(xs[k]);
    }
  }

  SimplexOutcome out;
  const auto best = std::min_element(fs.begin(), fs.end());
  const auto best_index = static_cast<std::size_t>(best - fs.begin());
  out.best_x = xs[best_index];
  out.best_value = *best;
  out.evaluations = evaluations;
  return out;
}

// Chart for model A: polar and azimuthal angle per Bloch vector.
std::array<Eigen::Vector3d, 4> bloch_from_chart(const Eigen::VectorXd &x) {
  std::array<Eigen::Vector3d, 4> u;
  for (int k = 0; k < 4; ++k) {
    const double theta = x[2 * k];
    const double phi = x[2 * k + 1];
    u[k] = Eigen::Vector3d(std::sin(theta) * std::cos(phi),
                           std::sin(theta) * std::sin(phi), std::cos(theta));
  }
  return u;
}

Eigen::VectorXd chart_from_bloch(const std::array<Eigen::Vector3d, 4> &u) {
  Eigen::VectorXd x(8);
  for (int k = 0; k < 4; ++k) {
    x[2 * k] = std::acos(std::clamp(u[k][2], -1.0, 1.0));
    x[2 * k + 1] = std::atan2(u[k][1], u[k][0]);
  }
  return x;
}

// Chart for model B: interleaved real and imaginary parts of both pair
// states, normalized on evaluation.
bool states_from_chart(const Eigen::VectorXd &x, Eigen::Vector4cd *p12,
                       Eigen::Vector4cd *p34) {
  for (int k = 0; k < 4; ++k) {
    (*p12)[k] = Complex(x[2 * k], x[2 * k + 1]);
    (*p34)[k] = Complex(x[8 + 2 * k], x[8 + 2 * k + 1]);
  }
  const double n12 = p12->norm();
  const double n34 = p34->norm();
  if (n12 < 1e-6 || n34 < 1e-6) return false;
  *p12 /= n12;
  *p34 /= n34;
  return true;
}

Eigen::VectorXd chart_from_states(const Eigen::Vector4cd &p12,
                                  const Eigen::Vector4cd &p34) {
  Eigen::VectorXd x(16);
  for (int k = 0; k < 4; ++k) {
    x[2 * k] = p12[k].real();
    x[2 * k + 1] = p12[k].imag();
    x[8 + 2 * k] = p34[k].real();
    x[8 + 2 * k + 1] = p34[k].imag();
  }
  return x;
}

Eigen::Vector2cd axis_spinor(int axis, int sign) {
  const double inv = 1.0 / std::sqrt(2.0);
  Eigen::Vector2cd v;
  if (axis == 1) {
    v << Complex(inv, 0.0), Complex(sign > 0 ? inv : -inv, 0.0);
  } else if (axis == 2) {
    v << Complex(inv, 0.0), Complex(0.0, sign > 0 ? inv : -inv);
  } else if (sign > 0) {
    v << Complex(1.0, 0.0), Complex(0.0, 0.0);
  } else {
    v << Complex(0.0, 0.0), Complex(1.0, 0.0);
  }
  return v;
}

Eigen::Vector4cd kron_pair(const Eigen::Vector2cd &p, const Eigen::Vector2cd &q) {
  Eigen::Vector4cd out;
  out << p[0] * q[0], p[0] * q[1], p[1] * q[0], p[1] * q[1];
  return out;
}

// cos(theta) |v+ v+> + e^{i phi} sin(theta) |v- v-> in the eigenbasis of
// the given axis.
Eigen::Vector4cd schmidt_pair(int axis, double theta, double phi) {
  const Eigen::Vector2cd plus = axis_spinor(axis, +1);
  const Eigen::Vector2cd minus = axis_spinor(axis, -1);
  return std::cos(theta) * kron_pair(plus, plus) +
         std::polar(1.0, phi) * std::sin(theta) * kron_pair(minus, minus);
}

// Pair states whose correlation matrices hit the extremal patterns the
// pieces reward: Schmidt states along all three axes with phases and
// Schmidt angles offset by the tilt angle, plus the exchange-antisymmetric
// states the single-axis families miss.
std::vector<Eigen::Vector4cd> pair_state_catalog(double alpha) {
  std::vector<Eigen::Vector4cd> states;
  const double quarter = kPi / 4.0;
  const double phis[] = {0.0,
                         kPi,
                         0.5 * kPi,
                         -0.5 * kPi,
                         alpha,
                         -alpha,
                         kPi - alpha,
                         kPi + alpha,
                         0.5 * kPi + alpha,
                         0.5 * kPi - alpha,
                         -0.5 * kPi + alpha,
                         -0.5 * kPi - alpha};
  for (int axis = 1; axis <= 3; ++axis) {
    for (const double phi : phis) {
      states.push_back(schmidt_pair(axis, quarter, phi));
    }
    for (const double dt : {alpha, -alpha}) {
      states.push_back(schmidt_pair(axis, quarter + dt, 0.0));
      states.push_back(schmidt_pair(axis, quarter + dt, kPi));
    }
    states.push_back(schmidt_pair(axis, 0.0, 0.0));
  }
  const double inv = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v;
  v << 0.0, inv, inv, 0.0;
  states.push_back(v);
  v << 0.0, inv, -inv, 0.0;
  states.push_back(v);
  v << 0.0, Complex(inv, 0.0), Complex(0.0, inv), 0.0;
  states.push_back(v);
  v << 0.0, Complex(inv, 0.0), Complex(0.0, -inv), 0.0;
  states.push_back(v);
  return states;
}

std::vector<Eigen::VectorXd> model_b_warm_starts(const FastPiece &fast,
                                                 double alpha,
                                                 long *evaluations) {
  const std::vector<Eigen::Vector4cd> catalog = pair_state_catalog(alpha);
  const int count = static_cast<int>(catalog.size());
  std::vector<std::pair<double, std::pair<int, int>>> scored;
  scored.reserve(static_cast<std::size_t>(count) * count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      scored.push_back({fast.value(catalog[i], catalog[j]), {i, j}});
      ++*evaluations;
    }
  }
  const int take = std::min<int>(kWarmStartCap, static_cast<int>(scored.size()));
  std::partial_sort(scored.begin(), scored.begin() + take, scored.end());
  std::vector<Eigen::VectorXd> starts;
  starts.reserve(take);
  for (int k = 0; k < take; ++k) {
    const auto [i, j] = scored[k].second;
    starts.push_back(chart_from_states(catalog[i], catalog[j]));
  }
  return starts;
}

std::vector<Eigen::VectorXd> model_a_warm_starts(const BoundPiece &piece,
                                                 long *evaluations) {
  const SettingSet &s = piece.sets.front();
  std::vector<Eigen::Vector3d> u1s = {s.a.vec(), s.a_prime.vec()};
  for (int i = 1; i <= 3; ++i) {
    u1s.push_back(bloch_axis(i));
    u1s.push_back(-bloch_axis(i));
  }
  const Eigen::Vector3d axis = s.c.vec();
  std::vector<std::pair<double, std::array<Eigen::Vector3d, 4>>> scored;
  for (const Eigen::Vector3d &u1 : u1s) {
    for (const double s2 : {1.0, -1.0}) {
      for (const double s3 : {1.0, -1.0}) {
        for (const double s4 : {1.0, -1.0}) {
          const std::array<Eigen::Vector3d, 4> u = {u1, s2 * axis, s3 * axis,
                                                    s4 * axis};
          scored.push_back({piece.evaluate(LambdaAssignment::make_a(u)), u});
          ++*evaluations;
        }
      }
    }
  }
  const int take = std::min<int>(kWarmStartCap, static_cast<int>(scored.size()));
  std::partial_sort(scored.begin(), scored.begin() + take, scored.end(),
                    [](const auto &a, const auto &b) { return a.first < b.first; });
  std::vector<Eigen::VectorXd> starts;
  starts.reserve(take);
  for (int k = 0; k < take; ++k) {
    starts.push_back(chart_from_bloch(scored[k].second));
  }
  return starts;
}

PieceResult minimize_piece(const BoundPiece &piece, int restarts,
                           std::uint64_t seed, int piece_index) {
  PieceResult result;
  result.name = piece.name;
  result.constant = piece.constant;

  std::optional<FastPiece> fast;
  std::function<double(const Eigen::VectorXd &)> objective;
  std::vector<Eigen::VectorXd> warm;
  if (piece.model == LambdaModel::kA) {
    objective = [&piece](const Eigen::VectorXd &x) {
      return piece.evaluate(LambdaAssignment::make_a(bloch_from_chart(x)));
    };
    warm = model_a_warm_starts(piece, &result.evaluations);
  } else {
    fast = compile_piece(piece);
    objective = [fp = &*fast](const Eigen::VectorXd &x) {
      Eigen::Vector4cd p12;
      Eigen::Vector4cd p34;
      if (!states_from_chart(x, &p12, &p34)) return kChartPenalty;
      return fp->value(p12, p34);
    };
    warm = model_b_warm_starts(*fast, piece.alpha, &result.evaluations);
  }

  double best_value = kInf;
  Eigen::VectorXd best_x;
  for (int r = 0; r < restarts; ++r) {
    Eigen::VectorXd start;
    if (r < static_cast<int>(warm.size())) {
      start = warm[r];
    } else {
      Prng prng(derive_seed(seed, kRestartStride * static_cast<std::uint64_t>(piece_index) +
                                      static_cast<std::uint64_t>(r)));
      if (piece.model == LambdaModel::kA) {
        std::array<Eigen::Vector3d, 4> u;
        for (auto &v : u) v = prng.unit_vector();
        start = chart_from_bloch(u);
      } else {
        start = Eigen::VectorXd(16);
        for (int k = 0; k < 16; ++k) start[k] = prng.normal();
      }
    }
    const SimplexOutcome out = nelder_mead(objective, start);
    result.evaluations += out.evaluations;
    if (out.best_value < best_value) {
      best_value = out.best_value;
      best_x = out.best_x;
    }
  }

  result.min_value = best_value;
  if (piece.model == LambdaModel::kA) {
    result.argmin = LambdaAssignment::make_a(bloch_from_chart(best_x));
  } else {
    Eigen::Vector4cd p12;
    Eigen::Vector4cd p34;
    states_from_chart(best_x, &p12, &p34);
    result.argmin = LambdaAssignment::make_b(p12, p34);
  }
  return result;
}

}  // namespace

BoundCertificate certify_bound(int which, double alpha, int restarts,
                               std::uint64_t seed) {
  if (restarts < 1) {
    throw std::domain_error("certify_bound: restarts must be at least 1");
  }
  const std::vector<BoundPiece> pieces = bound_pieces(which, alpha);

  BoundCertificate cert;
  cert.which = which;
  cert.alpha = alpha;
  cert.restarts = restarts;
  cert.seed = seed;
  cert.bound = which == 1 ? leggett1_bound(alpha)
                          : leggett2_bound(alpha, Mode::kRederived);
  for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
    PieceResult piece_result =
        minimize_piece(pieces[pi], restarts, seed, static_cast<int>(pi));
    cert.constant_sum += pieces[pi].constant;
    cert.value += piece_result.min_value;
    cert.pieces.push_back(std::move(piece_result));
  }
  return cert;
}

namespace {

SuiteResult chain_suite(LambdaModel model, int samples, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = model == LambdaModel::kA ? "chain-model-a" : "chain-model-b";
  constexpr int kGridPoints = 50;
  const int per_point = std::max(1, samples / kGridPoints);
  const long sets_count = model == LambdaModel::kA ? 3 : 10;

  double min_chain = kInf;
  double min_integrand = kInf;
  double min_probability = kInf;
  for (int g = 0; g < kGridPoints; ++g) {
    const double alpha = -0.5 * kPi + kPi * g / (kGridPoints - 1);
    const CampaignReport report =
        run_campaign(model, alpha, per_point, derive_seed(seed, g));
    min_chain = std::min(min_chain, report.min_chain_slack);
    min_integrand = std::min(min_integrand, report.min_integrand_slack);
    min_probability = std::min(min_probability, report.min_outcome_probability);
    suite.failures += report.failures();
    suite.checks += static_cast<long>(report.samples) * (2 * sets_count + 1);
  }
  suite.metrics["min_chain_slack"] = min_chain;
  suite.metrics["min_integrand_slack"] = min_integrand;
  suite.metrics["min_outcome_probability"] = min_probability;
  return suite;
}

SuiteResult purity_suite(std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "purity";
  constexpr int kHaarSamples = 10000;
  constexpr int kProductSamples = 1000;

  double max_sum_sq_dev = 0.0;
  double min_corr_sum = kInf;
  double max_corr_sum = -kInf;
  double min_abs_gap = kInf;
  for (int k = 0; k < kHaarSamples; ++k) {
    const PureState psi = haar_pure(4, derive_seed(seed, k));
    const TwoQubitTensor t = two_qubit_tensor(psi);
    const double sq_dev = std::abs(t.sum_sq_all() - 4.0);
    const double corr = t.sum_sq_corr();
    const double abs_gap = t.sum_abs_all() - t.sum_sq_all();
    max_sum_sq_dev = std::max(max_sum_sq_dev, sq_dev);
    min_corr_sum = std::min(min_corr_sum, corr);
    max_corr_sum = std::max(max_corr_sum, corr);
    min_abs_gap = std::min(min_abs_gap, abs_gap);
    suite.checks += 3;
    if (sq_dev > kPropertyTol) ++suite.failures;
    if (corr < 1.0 - kPropertyTol || corr > 3.0 + kPropertyTol) ++suite.failures;
    if (abs_gap < -kPropertyTol) ++suite.failures;
  }

  double max_product_corr_dev = 0.0;
  for (int k = 0; k < kProductSamples; ++k) {
    const PureState front = haar_pure(2, derive_seed(seed, 1000000 + 2 * k));
    const PureState back = haar_pure(2, derive_seed(seed, 1000001 + 2 * k));
    const Eigen::Vector2cd f = front.amplitudes();
    const Eigen::Vector2cd b = back.amplitudes();
    const PureState product{Eigen::VectorXcd(kron_pair(f, b))};
    const double corr = two_qubit_tensor(product).sum_sq_corr();
    max_product_corr_dev = std::max(max_product_corr_dev, std::abs(corr - 1.0));
    suite.checks += 1;
    if (std::abs(corr - 1.0) > kPropertyTol) ++suite.failures;
  }

  const double bell_corr_sum = two_qubit_tensor(ghz_state(2)).sum_sq_corr();
  suite.checks += 1;
  if (std::abs(bell_corr_sum - 3.0) > kPropertyTol) ++suite.failures;
  Eigen::VectorXcd basis00 = Eigen::VectorXcd::Zero(4);
  basis00[0] = 1.0;
  const double basis_corr_sum = two_qubit_tensor(PureState{basis00}).sum_sq_corr();
  suite.checks += 1;
  if (std::abs(basis_corr_sum - 1.0) > kPropertyTol) ++suite.failures;

  suite.metrics["max_sum_sq_dev"] = max_sum_sq_dev;
  suite.metrics["min_corr_sum"] = min_corr_sum;
  suite.metrics["max_corr_sum"] = max_corr_sum;
  suite.metrics["min_abs_gap"] = min_abs_gap;
  suite.metrics["max_product_corr_dev"] = max_product_corr_dev;
  suite.metrics["bell_corr_sum"] = bell_corr_sum;
  return suite;
}

SuiteResult taxi_suite(std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "taxi";
  constexpr int kSamples = 10000;
  constexpr double kUnitTol = 1e-12;

  Prng prng(seed);
  double min_taxi = kInf;
  for (int k = 0; k < kSamples; ++k) {
    const double taxi = taxi_norm(prng.unit_vector());
    min_taxi = std::min(min_taxi, taxi);
    suite.checks += 1;
    if (taxi < 1.0 - kUnitTol) ++suite.failures;
  }
  for (int i = 1; i <= 3; ++i) {
    suite.checks += 1;
    if (std::abs(taxi_norm(bloch_axis(i)) - 1.0) > kUnitTol) ++suite.failures;
  }
  const Eigen::Vector3d diagonal = Eigen::Vector3d(1.0, 1.0, 1.0).normalized();
  suite.checks += 1;
  if (std::abs(taxi_norm(diagonal) - std::sqrt(3.0)) > 1e-12) ++suite.failures;

  suite.metrics["min_taxi_norm"] = min_taxi;
  return suite;
}

// Records which (row, column) slots of the first pair's tensor the moduli
// probe; the union must be every slot except (0,0) and (3,3).
bool moduli_cover_expected_pairs(double alpha) {
  bool covered[4][4] = {};
  const auto mark = [&covered](const Eigen::Vector3d &f, const Eigen::Vector3d &g) {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(f[i]) < 1e-9) continue;
      for (int j = 0; j < 3; ++j) {
        if (std::abs(g[j]) >= 1e-9) covered[i + 1][j + 1] = true;
      }
    }
  };
  for (const SettingSet &s : family_one(alpha)) {
    const Eigen::Vector3d da = s.a - s.a_prime;
    for (int i = 0; i < 3; ++i) {
      if (std::abs(da[i]) >= 1e-9) covered[i + 1][0] = true;
    }
    const SettingSet sw = triangle_swap(s);
    const Eigen::Vector3d db = sw.b - *sw.b_prime;
    for (int j = 0; j < 3; ++j) {
      if (std::abs(db[j]) >= 1e-9) covered[0][j + 1] = true;
    }
  }
  for (const SettingSet &s : family_two(alpha)) {
    const Eigen::Vector3d sa = s.a + s.a_prime;
    const Eigen::Vector3d da = s.a - s.a_prime;
    const Eigen::Vector3d sb = s.b + *s.b_prime;
    const Eigen::Vector3d db = s.b - *s.b_prime;
    mark(sa, db);
    mark(da, sb);
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool expected = !((i == 0 && j == 0) || (i == 3 && j == 3));
      if (covered[i][j] != expected) return false;
    }
  }
  return true;
}

SuiteResult settings_suite() {
  SuiteResult suite;
  suite.name = "settings";
  constexpr int kGridPoints = 601;
  constexpr double kUnitTol = 1e-12;

  double max_norm_defect = 0.0;
  double max_diff_dev = 0.0;
  const auto norm_defect = [](const BlochVector &v) {
    return std::abs(v.vec().norm() - 1.0);
  };
  for (int g = 0; g < kGridPoints; ++g) {
    const double alpha = -0.5 * kPi + kPi * g / (kGridPoints - 1);
    const double fam1_diff = 2.0 * std::abs(std::sin(2.0 * alpha));
    const double fam2_diff = 2.0 * std::abs(std::sin(alpha));
    for (const SettingSet &s : family_one(alpha)) {
      double defect = std::max({norm_defect(s.a), norm_defect(s.a_prime),
                                norm_defect(s.b), norm_defect(s.c),
                                norm_defect(s.d)});
      max_norm_defect = std::max(max_norm_defect, defect);
      suite.checks += 1;
      if (defect > kUnitTol) ++suite.failures;

      const double diff_dev = std::abs((s.a - s.a_prime).norm() - fam1_diff);
      max_diff_dev = std::max(max_diff_dev, diff_dev);
      suite.checks += 1;
      if (diff_dev > kUnitTol) ++suite.failures;

      const SettingSet sw = triangle_swap(s);
      const double swap_dev =
          std::max({(sw.a - s.b).norm(), (sw.b - s.a).norm(),
                    (*sw.b_prime - s.a_prime).norm(), (sw.c - s.c).norm(),
                    (sw.d - s.d).norm()});
      suite.checks += 1;
      if (swap_dev > 0.0 || !sw.swapped) ++suite.failures;
    }
    for (const SettingSet &s : family_two(alpha)) {
      double defect = std::max({norm_defect(s.a), norm_defect(s.a_prime),
                                norm_defect(s.b), norm_defect(*s.b_prime),
                                norm_defect(s.c), norm_defect(s.d)});
      max_norm_defect = std::max(max_norm_defect, defect);
      suite.checks += 1;
      if (defect > kUnitTol) ++suite.failures;

      const double dev_a = std::abs((s.a - s.a_prime).norm() - fam2_diff);
      const double dev_b = std::abs((s.b - *s.b_prime).norm() - fam2_diff);
      max_diff_dev = std::max({max_diff_dev, dev_a, dev_b});
      suite.checks += 2;
      if (dev_a > kUnitTol) ++suite.failures;
      if (dev_b > kUnitTol) ++suite.failures;
    }
  }

  const bool coverage_ok = moduli_cover_expected_pairs(kPi / 8.0);
  suite.checks += 1;
  if (!coverage_ok) ++suite.failures;

  suite.metrics["max_norm_defect"] = max_norm_defect;
  suite.metrics["max_diff_identity_dev"] = max_diff_dev;
  suite.metrics["pair_coverage_ok"] = coverage_ok ? 1.0 : 0.0;
  return suite;
}

}  // namespace

VerifyReport run_verification(int samples_per_model, std::uint64_t seed) {
  if (samples_per_model < 1) {
    throw std::domain_error("run_verification: samples_per_model must be at least 1");
  }
  VerifyReport report;
  report.samples_per_model = samples_per_model;
  report.seed = seed;
  report.suites.push_back(
      chain_suite(LambdaModel::kA, samples_per_model, derive_seed(seed, 101)));
  report.suites.push_back(
      chain_suite(LambdaModel::kB, samples_per_model, derive_seed(seed, 102)));
  report.suites.push_back(purity_suite(derive_seed(seed, 103)));
  report.suites.push_back(taxi_suite(derive_seed(seed, 104)));
  report.suites.push_back(settings_suite());
  report.all_passed =
      std::all_of(report.suites.begin(), report.suites.end(),
                  [](const SuiteResult &s) { return s.failures == 0; });
  return report;
}

}  // namespace leggett
