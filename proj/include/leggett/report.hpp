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

#include <json.hpp>

#include "leggett/analysis.hpp"
#include "leggett/hv_search.hpp"
#include "leggett/pauli.hpp"

namespace leggett {

using Json = nlohmann::json;

// Every JSON emitter wraps its payload in {"schema": <name>, "version": 1}.
// The layouts are frozen in docs/schemas/ and contain no timestamps, so
// equal inputs produce byte-identical output.

Json tensor_report(const CorrelationTensor &t, const std::string &state_label,
                   double noise);

Json to_json(const SweepResult &sweep);
SweepResult sweep_from_json(const Json &j);

Json to_json(const ThresholdResult &threshold);
ThresholdResult threshold_from_json(const Json &j);

Json to_json(const MaxViolation &mv);
Json to_json(const CampaignReport &report);
Json to_json(const BoundCertificate &cert);
Json to_json(const VerifyReport &report);

/// CSV with header alpha_rad,alpha_over_pi,lhs,bound,margin,violated; the
/// flag is 0/1 and doubles are printed with 17 significant digits.
std::string sweep_csv(const SweepResult &sweep);

/// CSV with header i,j,k,l,value covering all 256 tensor entries.
std::string tensor_csv(const CorrelationTensor &t);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json &j);

/// Writes to the path, or to stdout when the path is "-".
void write_output(const std::string &path, const std::string &content);

}  // namespace leggett
