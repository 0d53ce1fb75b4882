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

// Labeled graphs on [n] = {1, ..., n}, induced subgraphs with their original
// labels, reduced forms, forbidden-pattern detection and bad-vertex analysis.

#ifndef TWELVEREP_GRAPH_HPP
#define TWELVEREP_GRAPH_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace twelverep {

// Vertex labels and word letters are 1-based.
using Label = int;

// Unordered pair stored as (smaller, larger).
struct Edge {
  Label u = 0;
  Label v = 0;

  auto operator<=>(const Edge&) const = default;
};

class LabeledGraph {
 public:
  // Validates labels and canonicalizes each pair. Rejects n < 1, labels outside
  // [n], self-loops and duplicate pairs (in either orientation).
  LabeledGraph(int n, std::span<const std::pair<Label, Label>> edges);
  LabeledGraph(int n, std::initializer_list<std::pair<Label, Label>> edges);

  static LabeledGraph edgeless(int n);
  static LabeledGraph complete(int n);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Canonical, ascending edge list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // O(1). Labels must lie in [n]; u == v is never adjacent.
  bool adjacent(Label u, Label v) const {
    return adjacency_[index(u, v)] != 0;
  }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  LabeledGraph() = default;
  void init(int n, std::span<const std::pair<Label, Label>> edges);
  std::size_t index(Label u, Label v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v - 1);
  }

  int n_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<Edge> edges_;
};

LabeledGraph new_labeled_graph(int n,
                               std::span<const std::pair<Label, Label>> edges);

// A subgraph that keeps the labels it had in its parent graph.
class InducedSubgraph {
 public:
  // `labels` must be distinct and positive; edges must join listed labels.
  InducedSubgraph(std::vector<Label> labels, std::vector<Edge> edges);

  // Ascending.
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

 private:
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
};

// Throws InvalidSelection unless `labels` is a nonempty ascending list of
// distinct labels from [g.n()].
InducedSubgraph induced_subgraph(const LabeledGraph& g,
                                 std::span<const Label> labels);

// Replaces the i-th smallest label by i.
LabeledGraph reduced_form(const InducedSubgraph& h);

enum class PatternKind { kI3, kJ4, kQ4 };

std::string_view to_string(PatternKind kind);
std::optional<PatternKind> pattern_kind_from_string(std::string_view name);

// I3: path 1-2-3. J4: edges {1,3},{2,4}. Q4: edges {1,4},{2,3}.
const LabeledGraph& pattern_graph(PatternKind kind);

struct PatternWitness {
  PatternKind kind = PatternKind::kI3;
  std::vector<Label> vertices;  // ascending, original labels

  bool operator==(const PatternWitness&) const = default;
};

// Searches I3 first, then J4, then Q4, and within each kind returns the
// lexicographically smallest vertex tuple. I3 is a scan over triples; J4 and
// Q4 are found by pairing disjoint edges and checking the four cross pairs.
std::optional<PatternWitness> find_forbidden_pattern(const LabeledGraph& g);

struct BadVertexReport {
  std::vector<Label> bad;  // ascending
  // One witness (a, b, c) per bad vertex b, with a < b < c, ab and bc
  // non-edges and ac an edge. Lexicographically smallest (a, c).
  std::map<Label, std::array<Label, 3>> witnesses;

  std::size_t b_count() const noexcept { return bad.size(); }
  bool is_bad(Label v) const { return witnesses.contains(v); }

  bool operator==(const BadVertexReport&) const = default;
};

BadVertexReport bad_vertices(const LabeledGraph& g);

// n + number of bad vertices: no 12-representant of g is shorter.
std::size_t length_lower_bound(const LabeledGraph& g);

// Relabels vertex v as labeling[v - 1]. `labeling` must be a permutation of
// [g.n()].
LabeledGraph relabel(const LabeledGraph& g, std::span<const Label> labeling);

}  // namespace twelverep

#endif  // TWELVEREP_GRAPH_HPP
