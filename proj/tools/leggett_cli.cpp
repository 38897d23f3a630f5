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

#include <cstdint>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "leggett/analysis.hpp"
#include "leggett/hv_search.hpp"
#include "leggett/inequalities.hpp"
#include "leggett/pauli.hpp"
#include "leggett/report.hpp"
#include "leggett/settings.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPropertyFailure = 2;

constexpr double kPi = std::numbers::pi;

// Numerically certified piece minima may undershoot their proven floor by
// round-off only; anything worse is a soundness failure.
constexpr double kCertTol = 1e-6;

leggett::CorrelationTensor build_state_tensor(const std::string &state,
                                              double noise) {
  const leggett::DensityOperator ghz =
      leggett::DensityOperator::from_pure(leggett::ghz_state(4));
  if (state == "ghz") return leggett::correlation_tensor(ghz);
  return leggett::correlation_tensor(leggett::mix_white_noise(ghz, noise));
}

void print_literal_diagnostics(double alpha) {
  std::fprintf(stderr,
               "second-family literal n=sin(2a) norm defect at alpha=%.6f: "
               "%.6g (unit directions require n=sin(a))\n",
               alpha, leggett::literal_norm_defect(alpha));
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Simulation and audit toolkit for two-qubit hidden-variable "
               "models of a four-qubit GHZ state"};
  app.require_subcommand(1);

  int ineq = 2;
  std::string mode_name = "paper";
  std::string state = "ghz";
  double noise = 0.0;
  int samples = 100000;
  std::uint64_t seed = 12345;
  std::string format = "json";
  std::string out_path = "-";
  bool paper_literal = false;

  app.add_option("--ineq", ineq, "Inequality selector")
      ->check(CLI::IsMember({1, 2}));
  app.add_option("--mode", mode_name,
                 "Constant convention for inequality 2: published additive "
                 "constants or the recounted ones")
      ->check(CLI::IsMember({"paper", "rederived"}));
  app.add_option("--state", state, "State family")
      ->check(CLI::IsMember({"ghz", "noisy-ghz"}));
  app.add_option("--noise", noise, "White-noise admixture for noisy-ghz")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--samples", samples, "Sample count for verify/campaign")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Base seed for all randomized commands");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "Output path, '-' for stdout");
  app.add_flag("--paper-literal", paper_literal,
               "Print normalization diagnostics of the literal second-family "
               "settings table to stderr");

  CLI::App *cmd_tensor =
      app.add_subcommand("tensor", "Dump the state's correlation tensor");
  CLI::App *cmd_verify =
      app.add_subcommand("verify", "Run all property suites");
  CLI::App *cmd_sweep =
      app.add_subcommand("sweep", "Evaluate the inequality over a tilt grid");
  CLI::App *cmd_range = app.add_subcommand(
      "range", "Bisect the upper endpoint of the violation window");
  CLI::App *cmd_max = app.add_subcommand(
      "max-violation", "Locate the margin maximum over the tilt angle");
  CLI::App *cmd_noise = app.add_subcommand(
      "noise-threshold", "Bisect the critical white-noise admixture");
  CLI::App *cmd_campaign = app.add_subcommand(
      "campaign", "Sample hidden-variable values and audit the per-lambda "
                  "constraints");
  CLI::App *cmd_optimize = app.add_subcommand(
      "optimize", "Minimize the per-lambda bound pieces and certify the "
                  "re-derived additive constant");

  double alpha = 0.0;
  double alpha_pi = 0.0;
  double lo = 0.0;
  double hi = kPi / 4.0;
  double lo_pi = 0.0;
  double hi_pi = 0.25;
  int steps = 101;
  double tol_range = 1e-10;
  double tol_max = 1e-10;
  double tol_noise = 1e-8;
  int restarts = 64;
  std::string model_name = "B";

  for (CLI::App *sub : {cmd_tensor, cmd_verify, cmd_sweep, cmd_range, cmd_max,
                        cmd_noise, cmd_campaign, cmd_optimize}) {
    sub->fallthrough();
  }

  CLI::Option *sweep_lo = cmd_sweep->add_option("--lo", lo, "Grid start in radians");
  CLI::Option *sweep_hi = cmd_sweep->add_option("--hi", hi, "Grid end in radians");
  cmd_sweep->add_option("--lo-pi", lo_pi, "Grid start as a fraction of pi")
      ->excludes(sweep_lo);
  cmd_sweep->add_option("--hi-pi", hi_pi, "Grid end as a fraction of pi")
      ->excludes(sweep_hi);
  cmd_sweep->add_option("--steps", steps, "Grid size")->check(CLI::Range(2, 100000000));

  cmd_range->add_option("--tol", tol_range, "Bisection tolerance on alpha");
  cmd_max->add_option("--tol", tol_max, "Golden-section tolerance on alpha");
  cmd_noise->add_option("--tol", tol_noise, "Bisection tolerance on p");

  CLI::Option *campaign_alpha =
      cmd_campaign->add_option("--alpha", alpha, "Tilt angle in radians");
  cmd_campaign->add_option("--alpha-pi", alpha_pi, "Tilt angle as a fraction of pi")
      ->excludes(campaign_alpha);
  cmd_campaign->add_option("--model", model_name, "Hidden-variable model")
      ->check(CLI::IsMember({"A", "B"}));

  CLI::Option *optimize_alpha =
      cmd_optimize->add_option("--alpha", alpha, "Tilt angle in radians");
  cmd_optimize->add_option("--alpha-pi", alpha_pi, "Tilt angle as a fraction of pi")
      ->excludes(optimize_alpha);
  cmd_optimize->add_option("--restarts", restarts, "Simplex restarts per piece")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const leggett::Mode mode = leggett::parse_mode(mode_name);
    if (state == "ghz" && noise != 0.0) {
      std::fprintf(stderr, "error: --noise requires --state noisy-ghz\n");
      return kExitUsage;
    }
    if (cmd_campaign->count("--alpha-pi") || cmd_optimize->count("--alpha-pi")) {
      alpha = alpha_pi * kPi;
    }
    if (cmd_sweep->count("--lo-pi")) lo = lo_pi * kPi;
    if (cmd_sweep->count("--hi-pi")) hi = hi_pi * kPi;

    if (*cmd_tensor) {
      const leggett::CorrelationTensor tensor = build_state_tensor(state, noise);
      const std::string content =
          format == "csv"
              ? leggett::tensor_csv(tensor)
              : leggett::dump(leggett::tensor_report(tensor, state, noise));
      leggett::write_output(out_path, content);
      return kExitSuccess;
    }

    if (format == "csv" && !*cmd_sweep) {
      std::fprintf(stderr, "error: --format csv is only available for the "
                           "tensor and sweep commands\n");
      return kExitUsage;
    }

    if (*cmd_verify) {
      const leggett::VerifyReport report = leggett::run_verification(samples, seed);
      leggett::write_output(out_path, leggett::dump(leggett::to_json(report)));
      return report.all_passed ? kExitSuccess : kExitPropertyFailure;
    }

    if (*cmd_sweep) {
      if (paper_literal) {
        print_literal_diagnostics(lo);
        print_literal_diagnostics(0.5 * (lo + hi));
        print_literal_diagnostics(hi);
      }
      const leggett::CorrelationTensor tensor = build_state_tensor(state, noise);
      const leggett::SweepResult sweep = leggett::sweep_alpha(
          tensor, state, noise, ineq, mode, lo, hi, steps);
      const std::string content = format == "csv"
                                      ? leggett::sweep_csv(sweep)
                                      : leggett::dump(leggett::to_json(sweep));
      leggett::write_output(out_path, content);
      return kExitSuccess;
    }

    if (*cmd_range) {
      const leggett::CorrelationTensor tensor = build_state_tensor(state, noise);
      const leggett::ThresholdResult result =
          leggett::violation_range(tensor, ineq, mode, tol_range);
      leggett::write_output(out_path, leggett::dump(leggett::to_json(result)));
      return kExitSuccess;
    }

    if (*cmd_max) {
      const leggett::CorrelationTensor tensor = build_state_tensor(state, noise);
      const leggett::MaxViolation result =
          leggett::max_violation(tensor, ineq, mode, tol_max);
      leggett::write_output(out_path, leggett::dump(leggett::to_json(result)));
      return kExitSuccess;
    }

    if (*cmd_noise) {
      const leggett::ThresholdResult result =
          leggett::noise_threshold(ineq, mode, tol_noise);
      leggett::write_output(out_path, leggett::dump(leggett::to_json(result)));
      return kExitSuccess;
    }

    if (*cmd_campaign) {
      if (paper_literal) print_literal_diagnostics(alpha);
      const leggett::LambdaModel model = model_name == "A"
                                             ? leggett::LambdaModel::kA
                                             : leggett::LambdaModel::kB;
      const leggett::CampaignReport report =
          leggett::run_campaign(model, alpha, samples, seed);
      leggett::write_output(out_path, leggett::dump(leggett::to_json(report)));
      return report.failures() == 0 ? kExitSuccess : kExitPropertyFailure;
    }

    if (*cmd_optimize) {
      if (paper_literal) print_literal_diagnostics(alpha);
      const leggett::BoundCertificate cert =
          leggett::certify_bound(ineq, alpha, restarts, seed);
      leggett::write_output(out_path, leggett::dump(leggett::to_json(cert)));
      for (const leggett::PieceResult &piece : cert.pieces) {
        if (piece.min_value < piece.constant - kCertTol) {
          std::fprintf(stderr,
                       "error: piece %s undercuts its proven floor: %.12f < "
                       "%.1f\n",
                       piece.name.c_str(), piece.min_value, piece.constant);
          return kExitPropertyFailure;
        }
      }
      return kExitSuccess;
    }
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
