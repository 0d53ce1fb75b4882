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

#include "twelverep/graph.hpp"

#include <algorithm>
#include <string>

#include "twelverep/errors.hpp"

namespace twelverep {

namespace {

std::string pair_text(Label u, Label v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

LabeledGraph::LabeledGraph(int n,
                           std::span<const std::pair<Label, Label>> edges) {
  init(n, edges);
}

LabeledGraph::LabeledGraph(int n,
                           std::initializer_list<std::pair<Label, Label>> edges) {
  init(n, std::span<const std::pair<Label, Label>>(edges.begin(), edges.size()));
}

void LabeledGraph::init(int n, std::span<const std::pair<Label, Label>> edges) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidGraph,
                "vertex count must be positive, got " + std::to_string(n));
  }
  n_ = n;
  adjacency_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                    0);
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw Error(ErrorCode::kInvalidGraph,
                  "edge " + pair_text(a, b) + " has a label outside [1," +
                      std::to_string(n) + "]");
    }
    if (a == b) {
      throw Error(ErrorCode::kInvalidGraph, "self-loop " + pair_text(a, b));
    }
    if (adjacency_[index(a, b)] != 0) {
      throw Error(ErrorCode::kInvalidGraph, "duplicate edge " + pair_text(a, b));
    }
    adjacency_[index(a, b)] = 1;
    adjacency_[index(b, a)] = 1;
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
}

LabeledGraph LabeledGraph::edgeless(int n) {
  return LabeledGraph(n, std::span<const std::pair<Label, Label>>{});
}

LabeledGraph LabeledGraph::complete(int n) {
  std::vector<std::pair<Label, Label>> edges;
  for (Label u = 1; u <= n; ++u) {
    for (Label v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return LabeledGraph(n, edges);
}

LabeledGraph new_labeled_graph(int n,
                               std::span<const std::pair<Label, Label>> edges) {
  return LabeledGraph(n, edges);
}

InducedSubgraph::InducedSubgraph(std::vector<Label> labels,
                                 std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  if (labels_.empty()) {
    throw Error(ErrorCode::kInvalidSelection, "empty label set");
  }
  std::sort(labels_.begin(), labels_.end());
  if (labels_.front() < 1) {
    throw Error(ErrorCode::kInvalidSelection, "labels must be positive");
  }
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw Error(ErrorCode::kInvalidSelection, "repeated label");
  }
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v ||
        !std::binary_search(labels_.begin(), labels_.end(), e.u) ||
        !std::binary_search(labels_.begin(), labels_.end(), e.v)) {
      throw Error(ErrorCode::kInvalidSelection,
                  "edge " + pair_text(e.u, e.v) + " leaves the label set");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorCode::kInvalidSelection, "duplicate edge");
  }
}

InducedSubgraph induced_subgraph(const LabeledGraph& g,
                                 std::span<const Label> labels) {
  if (labels.empty()) {
    throw Error(ErrorCode::kInvalidSelection, "empty selection");
  }
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] < 1 || labels[k] > g.n()) {
      throw Error(ErrorCode::kInvalidSelection,
                  "label " + std::to_string(labels[k]) + " outside [1," +
                      std::to_string(g.n()) + "]");
    }
    if (k > 0 && labels[k] <= labels[k - 1]) {
      throw Error(ErrorCode::kInvalidSelection,
                  "selection must be strictly ascending");
    }
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      if (g.adjacent(labels[a], labels[b])) {
        edges.push_back(Edge{labels[a], labels[b]});
      }
    }
  }
  return InducedSubgraph({labels.begin(), labels.end()}, std::move(edges));
}

LabeledGraph reduced_form(const InducedSubgraph& h) {
  const auto& labels = h.labels();
  auto rank = [&](Label x) {
    return static_cast<Label>(
        std::lower_bound(labels.begin(), labels.end(), x) - labels.begin() + 1);
  };
  std::vector<std::pair<Label, Label>> edges;
  edges.reserve(h.edges().size());
  for (const Edge& e : h.edges()) edges.emplace_back(rank(e.u), rank(e.v));
  return LabeledGraph(static_cast<int>(labels.size()), edges);
}

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::kI3: return "I3";
    case PatternKind::kJ4: return "J4";
    case PatternKind::kQ4: return "Q4";
  }
  return "?";
}

std::optional<PatternKind> pattern_kind_from_string(std::string_view name) {
  if (name == "I3") return PatternKind::kI3;
  if (name == "J4") return PatternKind::kJ4;
  if (name == "Q4") return PatternKind::kQ4;
  return std::nullopt;
}

const LabeledGraph& pattern_graph(PatternKind kind) {
  static const LabeledGraph i3(3, {{1, 2}, {2, 3}});
  static const LabeledGraph j4(4, {{1, 3}, {2, 4}});
  static const LabeledGraph q4(4, {{1, 4}, {2, 3}});
  switch (kind) {
    case PatternKind::kI3: return i3;
    case PatternKind::kJ4: return j4;
    case PatternKind::kQ4: return q4;
  }
  return i3;
}

std::optional<PatternWitness> find_forbidden_pattern(const LabeledGraph& g) {
  const int n = g.n();

  // I3: a < b < c with ab, bc edges and ac a non-edge.
  for (Label a = 1; a <= n; ++a) {
    for (Label b = a + 1; b <= n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (Label c = b + 1; c <= n; ++c) {
        if (g.adjacent(b, c) && !g.adjacent(a, c)) {
          return PatternWitness{PatternKind::kI3, {a, b, c}};
        }
      }
    }
  }

  // J4 and Q4 both consist of two disjoint edges with the four cross pairs
  // absent. Sorting the four endpoints decides which pattern it is.
  std::optional<std::array<Label, 4>> best_j4;
  std::optional<std::array<Label, 4>> best_q4;
  const auto& edges = g.edges();
  for (std::size_t x = 0; x < edges.size(); ++x) {
    for (std::size_t y = x + 1; y < edges.size(); ++y) {
      // Orient so that e1 has the smallest endpoint.
      Edge e1 = edges[x];
      Edge e2 = edges[y];
      if (e2.u < e1.u) std::swap(e1, e2);
      if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) {
        continue;
      }
      if (g.adjacent(e1.u, e2.u) || g.adjacent(e1.u, e2.v) ||
          g.adjacent(e1.v, e2.u) || g.adjacent(e1.v, e2.v)) {
        continue;
      }
      // e1.u is the minimum vertex; the shape depends on where e1.v falls
      // among e2's endpoints.
      if (e1.v < e2.u) continue;  // {1,2},{3,4}: allowed
      if (e1.v < e2.v) {
        std::array<Label, 4> t{e1.u, e2.u, e1.v, e2.v};  // {1,3},{2,4}
        if (!best_j4 || t < *best_j4) best_j4 = t;
      } else {
        std::array<Label, 4> t{e1.u, e2.u, e2.v, e1.v};  // {1,4},{2,3}
        if (!best_q4 || t < *best_q4) best_q4 = t;
      }
    }
  }
  if (best_j4) {
    return PatternWitness{PatternKind::kJ4, {best_j4->begin(), best_j4->end()}};
  }
  if (best_q4) {
    return PatternWitness{PatternKind::kQ4, {best_q4->begin(), best_q4->end()}};
  }
  return std::nullopt;
}

BadVertexReport bad_vertices(const LabeledGraph& g) {
  const int n = g.n();
  BadVertexReport report;
  for (Label b = 2; b < n; ++b) {
    bool found = false;
    for (Label a = 1; a < b && !found; ++a) {
      if (g.adjacent(a, b)) continue;
      for (Label c = b + 1; c <= n; ++c) {
        if (!g.adjacent(b, c) && g.adjacent(a, c)) {
          report.bad.push_back(b);
          report.witnesses.emplace(b, std::array<Label, 3>{a, b, c});
          found = true;
          break;
        }
      }
    }
  }
  return report;
}

std::size_t length_lower_bound(const LabeledGraph& g) {
  return static_cast<std::size_t>(g.n()) + bad_vertices(g).b_count();
}

LabeledGraph relabel(const LabeledGraph& g, std::span<const Label> labeling) {
  const int n = g.n();
  if (labeling.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kInvalidSelection,
                "labeling must assign exactly one label per vertex");
  }
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (Label l : labeling) {
    if (l < 1 || l > n || used[static_cast<std::size_t>(l)]) {
      throw Error(ErrorCode::kInvalidSelection,
                  "labeling is not a permutation of [1," + std::to_string(n) +
                      "]");
    }
    used[static_cast<std::size_t>(l)] = true;
  }
  std::vector<std::pair<Label, Label>> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    edges.emplace_back(labeling[static_cast<std::size_t>(e.u - 1)],
                       labeling[static_cast<std::size_t>(e.v - 1)]);
  }
  return LabeledGraph(n, edges);
}

}  // namespace twelverep
