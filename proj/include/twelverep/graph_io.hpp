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

#ifndef TWELVEREP_GRAPH_IO_HPP
#define TWELVEREP_GRAPH_IO_HPP

#include <filesystem>
#include <string_view>

#include "json.hpp"
#include "twelverep/graph.hpp"

namespace twelverep {

// Graph JSON: {"n": <int>, "edges": [[u, v], ...]} with 1-based labels. Pairs
// may be given in either orientation. Any other field is rejected.
LabeledGraph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const LabeledGraph& g);

LabeledGraph parse_graph_json(std::string_view text);
LabeledGraph load_graph_file(const std::filesystem::path& path);

}  // namespace twelverep

#endif  // TWELVEREP_GRAPH_IO_HPP
