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

#include "twelverep/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twelverep/errors.hpp"

namespace twelverep {

namespace {

int label_value(const nlohmann::json& v) {
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::kInvalidGraph, "labels must be integers");
  }
  const auto x = v.get<long long>();
  if (x < -1'000'000'000LL || x > 1'000'000'000LL) {
    throw Error(ErrorCode::kInvalidGraph, "label out of range");
  }
  return static_cast<int>(x);
}

}  // namespace

LabeledGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidGraph, "graph JSON must be an object");
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "n" && key != "edges") {
      throw Error(ErrorCode::kInvalidGraph, "unknown field \"" + key + "\"");
    }
  }
  if (!doc.contains("n")) {
    throw Error(ErrorCode::kInvalidGraph, "missing field \"n\"");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorCode::kInvalidGraph, "\"edges\" must be an array");
  }
  const int n = label_value(doc["n"]);
  std::vector<std::pair<Label, Label>> edges;
  for (const auto& pair : doc["edges"]) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorCode::kInvalidGraph,
                  "each edge must be a 2-element array");
    }
    edges.emplace_back(label_value(pair[0]), label_value(pair[1]));
  }
  return LabeledGraph(n, edges);
}

nlohmann::json graph_to_json(const LabeledGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

LabeledGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return graph_from_json(doc);
}

LabeledGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_json(buffer.str());
}

}  // namespace twelverep
