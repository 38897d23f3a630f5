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

#include "leggett/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace leggett {
namespace {

std::string fmt(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

Json bloch_json(const Eigen::Vector3d &v) {
  return Json::array({v[0], v[1], v[2]});
}

Json amplitudes_json(const Eigen::Vector4cd &v) {
  Json out = Json::array();
  for (int k = 0; k < 4; ++k) {
    out.push_back(Json::array({v[k].real(), v[k].imag()}));
  }
  return out;
}

const char *model_label(LambdaModel model) {
  return model == LambdaModel::kA ? "A" : "B";
}

Json lambda_json(const LambdaAssignment &lambda) {
  Json out;
  out["model"] = model_label(lambda.model);
  if (lambda.model == LambdaModel::kA) {
    Json bloch = Json::array();
    for (const Eigen::Vector3d &u : lambda.bloch) bloch.push_back(bloch_json(u));
    out["bloch"] = bloch;
  } else {
    out["pair12"] = amplitudes_json(lambda.pair12);
    out["pair34"] = amplitudes_json(lambda.pair34);
  }
  return out;
}

Json setting_set_json(const SettingSet &s) {
  Json out;
  out["family_id"] = s.family_id;
  out["alpha"] = s.alpha;
  out["swapped"] = s.swapped;
  out["a"] = bloch_json(s.a.vec());
  out["a_prime"] = bloch_json(s.a_prime.vec());
  out["b"] = bloch_json(s.b.vec());
  out["b_prime"] = s.has_b_prime() ? bloch_json(s.b_prime->vec()) : Json();
  out["c"] = bloch_json(s.c.vec());
  out["d"] = bloch_json(s.d.vec());
  return out;
}

// Product averages keyed by readable labels: A/A' for qubit 1, B/B' for
// qubit 2, C and D for the fixed qubits, "1" for the empty product.
Json averages_json(const CorrelationSet &cs) {
  Json out = Json::object();
  constexpr std::array<Pick, 3> kPicks = {Pick::kSkip, Pick::kPlain,
                                          Pick::kPrimed};
  const char *q1_label[] = {"", "A", "A'"};
  const char *q2_label[] = {"", "B", "B'"};
  const char *q3_label[] = {"", "C"};
  const char *q4_label[] = {"", "D"};
  const int q2_options = cs.has_primed_b() ? 3 : 2;
  for (int p1 = 0; p1 < 3; ++p1) {
    for (int p2 = 0; p2 < q2_options; ++p2) {
      for (int p3 = 0; p3 < 2; ++p3) {
        for (int p4 = 0; p4 < 2; ++p4) {
          std::string label = std::string(q1_label[p1]) + q2_label[p2] +
                              q3_label[p3] + q4_label[p4];
          if (label.empty()) label = "1";
          out[label] = cs.avg(kPicks[p1], kPicks[p2], kPicks[p3], kPicks[p4]);
        }
      }
    }
  }
  return out;
}

Json slacks_json(const ChainReport &chain) {
  Json out;
  out["quad_pair_sum"] = chain.quad_pair_sum;
  out["quad_pair_diff"] = chain.quad_pair_diff;
  out["quad_single"] = chain.quad_single;
  if (chain.primed_quad) out["primed_quad"] = *chain.primed_quad;
  out["pair_sum_bound"] = chain.pair_sum_bound;
  if (chain.tilt_minus) out["tilt_minus"] = *chain.tilt_minus;
  if (chain.tilt_plus) out["tilt_plus"] = *chain.tilt_plus;
  out["min_slack"] = chain.min_slack();
  return out;
}

Json counterexample_json(const Counterexample &ce) {
  Json out;
  out["kind"] = ce.kind;
  out["lambda"] = lambda_json(ce.lambda);
  out["setting_set"] = setting_set_json(ce.set);
  out["averages"] = averages_json(CorrelationSet::from_lambda(ce.lambda, ce.set));
  out["slacks"] = slacks_json(ce.chain);
  out["min_probability"] = ce.min_probability;
  out["integrand_slack"] = ce.integrand_slack;
  return out;
}

}  // namespace

Json tensor_report(const CorrelationTensor &t, const std::string &state_label,
                   double noise) {
  Json entries = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json level_j = Json::array();
    for (int j = 0; j < 4; ++j) {
      Json level_k = Json::array();
      for (int k = 0; k < 4; ++k) {
        Json level_l = Json::array();
        for (int l = 0; l < 4; ++l) level_l.push_back(t.entry(i, j, k, l));
        level_k.push_back(std::move(level_l));
      }
      level_j.push_back(std::move(level_k));
    }
    entries.push_back(std::move(level_j));
  }
  Json out;
  out["schema"] = "tensor";
  out["version"] = 1;
  out["state"] = state_label;
  out["noise"] = noise;
  out["qubits"] = 4;
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const SweepResult &sweep) {
  Json rows = Json::array();
  for (const SweepRow &row : sweep.rows) {
    Json r;
    r["alpha_rad"] = row.alpha_rad;
    r["alpha_over_pi"] = row.alpha_over_pi;
    r["lhs"] = row.lhs;
    r["bound"] = row.bound;
    r["margin"] = row.margin;
    r["violated"] = row.violated;
    rows.push_back(std::move(r));
  }
  Json out;
  out["schema"] = "sweep";
  out["version"] = 1;
  out["which"] = sweep.which;
  out["mode"] = to_string(sweep.mode);
  out["state"] = sweep.state_label;
  out["noise"] = sweep.noise;
  out["rows"] = std::move(rows);
  return out;
}

SweepResult sweep_from_json(const Json &j) {
  SweepResult sweep;
  sweep.which = j.at("which").get<int>();
  sweep.mode = parse_mode(j.at("mode").get<std::string>());
  sweep.state_label = j.at("state").get<std::string>();
  sweep.noise = j.at("noise").get<double>();
  for (const Json &r : j.at("rows")) {
    SweepRow row;
    row.alpha_rad = r.at("alpha_rad").get<double>();
    row.alpha_over_pi = r.at("alpha_over_pi").get<double>();
    row.lhs = r.at("lhs").get<double>();
    row.bound = r.at("bound").get<double>();
    row.margin = r.at("margin").get<double>();
    row.violated = r.at("violated").get<bool>();
    sweep.rows.push_back(row);
  }
  return sweep;
}

Json to_json(const ThresholdResult &threshold) {
  Json out;
  out["schema"] = "threshold";
  out["version"] = 1;
  out["quantity"] = threshold.quantity;
  out["which"] = threshold.which;
  out["mode"] = to_string(threshold.mode);
  out["value"] = threshold.value;
  if (threshold.quantity == "alpha-endpoint") {
    out["value_over_pi"] = threshold.value / std::numbers::pi;
  }
  out["bracket_lo"] = threshold.bracket_lo;
  out["bracket_hi"] = threshold.bracket_hi;
  out["iterations"] = threshold.iterations;
  out["tolerance"] = threshold.tolerance;
  return out;
}

ThresholdResult threshold_from_json(const Json &j) {
  ThresholdResult threshold;
  threshold.quantity = j.at("quantity").get<std::string>();
  threshold.which = j.at("which").get<int>();
  threshold.mode = parse_mode(j.at("mode").get<std::string>());
  threshold.value = j.at("value").get<double>();
  threshold.bracket_lo = j.at("bracket_lo").get<double>();
  threshold.bracket_hi = j.at("bracket_hi").get<double>();
  threshold.iterations = j.at("iterations").get<int>();
  threshold.tolerance = j.at("tolerance").get<double>();
  return threshold;
}

Json to_json(const MaxViolation &mv) {
  Json out;
  out["schema"] = "max_violation";
  out["version"] = 1;
  out["which"] = mv.which;
  out["mode"] = to_string(mv.mode);
  out["alpha_star"] = mv.alpha_star;
  out["alpha_star_over_pi"] = mv.alpha_star_over_pi;
  out["margin_star"] = mv.margin_star;
  return out;
}

Json to_json(const CampaignReport &report) {
  Json counterexamples = Json::array();
  for (const Counterexample &ce : report.counterexamples) {
    counterexamples.push_back(counterexample_json(ce));
  }
  Json out;
  out["schema"] = "campaign";
  out["version"] = 1;
  out["model"] = model_label(report.model);
  out["alpha"] = report.alpha;
  out["samples"] = report.samples;
  out["seed"] = report.seed;
  out["min_chain_slack"] = report.min_chain_slack;
  out["min_integrand_slack"] = report.min_integrand_slack;
  out["min_outcome_probability"] = report.min_outcome_probability;
  out["chain_failures"] = report.chain_failures;
  out["positivity_failures"] = report.positivity_failures;
  out["integrand_failures"] = report.integrand_failures;
  out["failures"] = report.failures();
  out["counterexamples"] = std::move(counterexamples);
  return out;
}

Json to_json(const BoundCertificate &cert) {
  Json pieces = Json::array();
  for (const PieceResult &piece : cert.pieces) {
    Json p;
    p["name"] = piece.name;
    p["constant"] = piece.constant;
    p["min_value"] = piece.min_value;
    p["evaluations"] = piece.evaluations;
    p["argmin"] = lambda_json(piece.argmin);
    pieces.push_back(std::move(p));
  }
  Json out;
  out["schema"] = "certificate";
  out["version"] = 1;
  out["which"] = cert.which;
  out["alpha"] = cert.alpha;
  out["restarts"] = cert.restarts;
  out["seed"] = cert.seed;
  out["value"] = cert.value;
  out["constant_sum"] = cert.constant_sum;
  out["bound"] = cert.bound;
  out["pieces"] = std::move(pieces);
  return out;
}

Json to_json(const VerifyReport &report) {
  Json suites = Json::array();
  for (const SuiteResult &suite : report.suites) {
    Json s;
    s["name"] = suite.name;
    s["checks"] = suite.checks;
    s["failures"] = suite.failures;
    s["metrics"] = Json(suite.metrics);
    suites.push_back(std::move(s));
  }
  Json out;
  out["schema"] = "verify";
  out["version"] = 1;
  out["samples_per_model"] = report.samples_per_model;
  out["seed"] = report.seed;
  out["all_passed"] = report.all_passed;
  out["suites"] = std::move(suites);
  return out;
}

std::string sweep_csv(const SweepResult &sweep) {
  std::string out = "alpha_rad,alpha_over_pi,lhs,bound,margin,violated\n";
  for (const SweepRow &row : sweep.rows) {
    out += fmt(row.alpha_rad) + "," + fmt(row.alpha_over_pi) + "," +
           fmt(row.lhs) + "," + fmt(row.bound) + "," + fmt(row.margin) + "," +
           (row.violated ? "1" : "0") + "\n";
  }
  return out;
}

std::string tensor_csv(const CorrelationTensor &t) {
  std::string out = "i,j,k,l,value\n";
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
          out += std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + "," + std::to_string(l) + "," +
                 fmt(t.entry(i, j, k, l)) + "\n";
        }
      }
    }
  }
  return out;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

void write_output(const std::string &path, const std::string &content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("write_output: cannot open " + path);
  }
  file << content;
  if (!file) {
    throw std::runtime_error("write_output: write failed for " + path);
  }
}

}  // namespace leggett
