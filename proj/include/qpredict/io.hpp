// Copyright 2026 The qpredict authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// JSON exchange formats. Operators and kets carry {"dim", "entries"} with
/// entries as flat row-major [re, im] pairs; scenario configs and reports
/// are flat objects keyed by field name.

#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "qpredict/classical.hpp"
#include "qpredict/driver.hpp"

namespace qpredict::io {

using json = nlohmann::json;

json operator_json(const Matrix& a);
Matrix operator_from_json(const json& j);

json ket_json(const Vector& psi);
Vector ket_from_json(const json& j);

json family_json(const ProjectorFamily& fam);
ProjectorFamily family_from_json(const json& j);

using NamedVariables = std::map<std::string, classical::RandomVariable>;

json space_json(const classical::FiniteSampleSpace& sp,
                const NamedVariables& variables = {});
std::pair<classical::FiniteSampleSpace, NamedVariables> space_from_json(
    const json& j);

json config_json(const ScenarioConfig& config);
ScenarioConfig config_from_json(const json& j);

json optimality_json(const OptimalityReport& report);
json sample_report_json(const SampleReport& report);
json run_report_json(const RunReport& report);

/// Parses strict JSON; wraps parse errors in InvalidConfig.
json parse(const std::string& text);
json load_file(const std::string& path);

}  // namespace qpredict::io
