// Copyright 2026 The twelverep Authors
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

#include "twelverep/analysis.hpp"

#include <string>

#include "twelverep/errors.hpp"

namespace twelverep {

AnalysisReport analyze(const LabeledGraph& g) {
  AnalysisReport report;
  report.n = g.n();
  report.edge_count = g.edge_count();
  report.bad = bad_vertices(g);
  report.lower_bound = static_cast<std::size_t>(g.n()) + report.bad.b_count();
  report.forbidden_pattern = find_forbidden_pattern(g);
  return report;
}

nlohmann::json to_json(const AnalysisReport& report) {
  nlohmann::json witnesses = nlohmann::json::object();
  for (const auto& [b, triple] : report.bad.witnesses) {
    witnesses[std::to_string(b)] = triple;
  }
  nlohmann::json pattern = nullptr;
  if (report.forbidden_pattern) {
    pattern = {{"kind", to_string(report.forbidden_pattern->kind)},
               {"vertices", report.forbidden_pattern->vertices}};
  }
  return {{"n", report.n},
          {"edge_count", report.edge_count},
          {"bad", report.bad.bad},
          {"b_count", report.bad.b_count()},
          {"witnesses", std::move(witnesses)},
          {"lower_bound", report.lower_bound},
          {"forbidden_pattern", std::move(pattern)},
          {"valid", report.valid()}};
}

AnalysisReport analysis_from_json(const nlohmann::json& doc) {
  try {
    AnalysisReport report;
    report.n = doc.at("n").get<int>();
    report.edge_count = doc.at("edge_count").get<std::size_t>();
    report.bad.bad = doc.at("bad").get<std::vector<Label>>();
    for (const auto& [key, triple] : doc.at("witnesses").items()) {
      report.bad.witnesses.emplace(std::stoi(key),
                                   triple.get<std::array<Label, 3>>());
    }
    report.lower_bound = doc.at("lower_bound").get<std::size_t>();
    const auto& pattern = doc.at("forbidden_pattern");
    if (!pattern.is_null()) {
      auto kind = pattern_kind_from_string(pattern.at("kind").get<std::string>());
      if (!kind) throw Error(ErrorCode::kParseError, "unknown pattern kind");
      report.forbidden_pattern = PatternWitness{
          *kind, pattern.at("vertices").get<std::vector<Label>>()};
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace twelverep
