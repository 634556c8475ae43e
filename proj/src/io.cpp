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

#include "qpredict/io.hpp"

#include <fstream>
#include <vector>

namespace qpredict::io {

namespace {

/// Translates structural JSON errors (missing keys, wrong types) into the
/// invalid-input error the callers key exit codes on.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InvalidConfig(std::string(what) + ": " + e.what());
  }
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw InvalidConfig("complex values must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json vec3_json(const Eigen::Vector3d& v) {
  return json::array({v.x(), v.y(), v.z()});
}

Eigen::Vector3d vec3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw InvalidConfig("positions must be [x, y, z] triples");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json real_vector_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

RealVector real_vector_from_json(const json& j) {
  RealVector out(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& x : j) out(i++) = x.get<double>();
  return out;
}

json entries_json(const Vector& flat) {
  json out = json::array();
  for (Eigen::Index i = 0; i < flat.size(); ++i)
    out.push_back(complex_json(flat(i)));
  return out;
}

Vector entries_from_json(const json& j) {
  Vector out(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& z : j) out(i++) = complex_from_json(z);
  return out;
}

}  // namespace

json operator_json(const Matrix& a) {
  Vector flat(a.size());
  Eigen::Index i = 0;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) flat(i++) = a(r, c);
  return {{"dim", a.rows()}, {"entries", entries_json(flat)}};
}

Matrix operator_from_json(const json& j) {
  return guarded("operator", [&j] {
  const auto dim = j.at("dim").get<Eigen::Index>();
  if (dim <= 0) throw InvalidConfig("operator dim must be positive");
  const Vector flat = entries_from_json(j.at("entries"));
  if (flat.size() != dim * dim)
    throw InvalidConfig("operator entries must hold dim^2 [re, im] pairs");
  Matrix a(dim, dim);
  Eigen::Index i = 0;
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) a(r, c) = flat(i++);
  return a;
  });
}

json ket_json(const Vector& psi) {
  return {{"dim", psi.size()}, {"entries", entries_json(psi)}};
}

Vector ket_from_json(const json& j) {
  return guarded("ket", [&j] {
    const auto dim = j.at("dim").get<Eigen::Index>();
    if (dim <= 0) throw InvalidConfig("ket dim must be positive");
    const Vector entries = entries_from_json(j.at("entries"));
    if (entries.size() != dim)
      throw InvalidConfig("ket entries must hold dim [re, im] pairs");
    return entries;
  });
}

json family_json(const ProjectorFamily& fam) {
  json out = json::array();
  for (const Matrix& b : fam.projectors()) out.push_back(operator_json(b));
  return out;
}

ProjectorFamily family_from_json(const json& j) {
  return guarded("projector family", [&j] {
    std::vector<Matrix> projectors;
    for (const auto& b : j) projectors.push_back(operator_from_json(b));
    return ProjectorFamily(std::move(projectors));
  });
}

json space_json(const classical::FiniteSampleSpace& sp,
                const NamedVariables& variables) {
  json out = {{"outcomes", sp.outcomes()},
              {"weights", real_vector_json(sp.weights())}};
  if (!variables.empty()) {
    json vars = json::object();
    for (const auto& [name, values] : variables)
      vars[name] = real_vector_json(values);
    out["variables"] = vars;
  }
  return out;
}

std::pair<classical::FiniteSampleSpace, NamedVariables> space_from_json(
    const json& j) {
  return guarded("sample space", [&j] {
    classical::FiniteSampleSpace sp(
        j.at("outcomes").get<std::vector<std::string>>(),
        real_vector_from_json(j.at("weights")));
    NamedVariables variables;
    if (j.contains("variables"))
      for (const auto& [name, values] : j.at("variables").items())
        variables[name] = real_vector_from_json(values);
    return std::pair(std::move(sp), std::move(variables));
  });
}

namespace {

std::string kind_token(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::two_source: return "double-slit";
    case ScenarioKind::cat: return "cat";
    case ScenarioKind::epr: return "epr";
  }
  throw InvalidConfig("unknown scenario kind");
}

ScenarioKind kind_from_token(const std::string& token) {
  if (token == "double-slit") return ScenarioKind::two_source;
  if (token == "cat") return ScenarioKind::cat;
  if (token == "epr") return ScenarioKind::epr;
  throw InvalidConfig("kind must be double-slit|cat|epr, got " + token);
}

}  // namespace

json config_json(const ScenarioConfig& config) {
  return {{"kind", kind_token(config.kind)},
          {"a", complex_json(config.a)},
          {"b", complex_json(config.b)},
          {"mode", config.mode == SourceMode::particle ? "particle" : "wave"},
          {"t", config.t},
          {"energy", config.energy},
          {"x_detect", vec3_json(config.x_detect)},
          {"x_plus", vec3_json(config.x_plus)},
          {"x_minus", vec3_json(config.x_minus)},
          {"observe", config.observe}};
}

ScenarioConfig config_from_json(const json& j) {
  return guarded("scenario config", [&j] {
  ScenarioConfig config;
  config.kind = kind_from_token(j.at("kind").get<std::string>());
  config.a = complex_from_json(j.at("a"));
  config.b = complex_from_json(j.at("b"));
  if (j.contains("mode")) {
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "particle")
      config.mode = SourceMode::particle;
    else if (mode == "wave")
      config.mode = SourceMode::wave;
    else
      throw InvalidConfig("mode must be particle|wave, got " + mode);
  }
  if (j.contains("t")) config.t = j.at("t").get<double>();
  if (j.contains("energy")) config.energy = j.at("energy").get<double>();
  if (j.contains("x_detect")) config.x_detect = vec3_from_json(j.at("x_detect"));
  if (j.contains("x_plus")) config.x_plus = vec3_from_json(j.at("x_plus"));
  if (j.contains("x_minus")) config.x_minus = vec3_from_json(j.at("x_minus"));
  if (j.contains("observe")) config.observe = j.at("observe").get<std::string>();
  return config;
  });
}

json optimality_json(const OptimalityReport& report) {
  return {{"predictor_coeffs", real_vector_json(report.predictor_coeffs)},
          {"least_squares_coeffs", real_vector_json(report.least_squares)},
          {"mse_predictor", report.mse_predictor},
          {"mse_least_squares", report.mse_least_squares},
          {"projection_residual", report.projection_residual},
          {"pythagoras_residual", report.pythagoras_residual}};
}

json sample_report_json(const SampleReport& report) {
  json out = {{"shots", report.shots},
              {"seed", report.seed},
              {"outcomes", report.outcome_labels},
              {"counts", report.counts},
              {"frequencies", real_vector_json(report.frequencies)},
              {"predicted", real_vector_json(report.predicted)},
              {"max_abs_deviation", report.max_abs_deviation},
              {"within_bound", report.within_bound},
              {"certainty_violations", report.certainty_violations}};
  if (report.conditional_frequencies.size() > 0) {
    out["conditional_frequencies"] =
        real_vector_json(report.conditional_frequencies);
    out["conditional_predicted"] =
        real_vector_json(report.conditional_predicted);
  }
  return out;
}

json run_report_json(const RunReport& report) {
  json out = {{"config", config_json(report.config)},
              {"diagnostics", optimality_json(report.diagnostics)}};
  if (report.two_source) {
    const TwoSourceReport& ts = *report.two_source;
    json block = {
        {"unconditional_intensity", ts.unconditional},
        {"conditioned_coeffs", real_vector_json(ts.conditioned_coeffs)},
        {"amplitudes", entries_json(ts.amplitudes)},
        {"averaged_predictor_expectation", ts.averaged},
        {"interference_term", ts.interference},
        {"decomposition_residual", ts.decomposition_residual}};
    if (ts.observed_branch) {
      block["observed_branch"] = *ts.observed_branch;
      block["posterior_intensity"] = *ts.posterior_intensity;
    }
    out["two_source"] = block;
  }
  if (report.composite) {
    const CompositeReport& cr = *report.composite;
    out["composite"] = {
        {"branch_labels", cr.branch_labels},
        {"branch_probabilities", real_vector_json(cr.branch_probabilities)},
        {"partner_labels", cr.partner_labels},
        {"partner_probabilities", real_vector_json(cr.partner_probabilities)},
        {"observed_branch", cr.observed_branch},
        {"posterior_partner", real_vector_json(cr.posterior_partner)},
        {"certain_value", cr.certain_value},
        {"charge_residual", cr.charge_residual}};
  }
  if (report.sample) out["sample"] = sample_report_json(*report.sample);
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidConfig(std::string("invalid JSON: ") + e.what());
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse(text);
}

}  // namespace qpredict::io
