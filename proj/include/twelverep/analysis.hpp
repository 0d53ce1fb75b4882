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

#ifndef TWELVEREP_ANALYSIS_HPP
#define TWELVEREP_ANALYSIS_HPP

#include <cstddef>
#include <optional>

#include "json.hpp"
#include "twelverep/graph.hpp"

namespace twelverep {

// Bad vertices, the n + b lower bound and the validity verdict in one record.
// A graph may have bad vertices and still be valid; the two are independent.
struct AnalysisReport {
  int n = 0;
  std::size_t edge_count = 0;
  BadVertexReport bad;
  std::size_t lower_bound = 0;
  std::optional<PatternWitness> forbidden_pattern;

  bool valid() const noexcept { return !forbidden_pattern.has_value(); }
  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze(const LabeledGraph& g);

nlohmann::json to_json(const AnalysisReport& report);
AnalysisReport analysis_from_json(const nlohmann::json& doc);

}  // namespace twelverep

#endif  // TWELVEREP_ANALYSIS_HPP
