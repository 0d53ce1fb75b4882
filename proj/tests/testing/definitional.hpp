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

// Test-only reference implementations and fixtures. These are written from
// the definitions directly and do not share code paths with the library
// routines they are used to check.

#ifndef TWELVEREP_TESTING_DEFINITIONAL_HPP
#define TWELVEREP_TESTING_DEFINITIONAL_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "twelverep/graph.hpp"
#include "twelverep/word.hpp"

namespace twelverep::testing {

using EdgeSet = std::set<std::pair<Label, Label>>;

// Pairwise scan over all position pairs: {i,j}, i < j, is an edge iff there
// are no positions p < q with w[p] = i and w[q] = j. O(len^2).
EdgeSet definitional_edges(const std::vector<Label>& letters, int n);
EdgeSet edge_set(const LabeledGraph& g);

// Every 3- and 4-subset, compared edge by edge against the pattern's edge
// list after rank relabeling. Returns the first hit in I3, J4, Q4 order and
// lexicographic subset order, mirroring the library's tie-break.
std::optional<std::pair<char, std::vector<Label>>> naive_forbidden(
    const LabeledGraph& g);

// b is bad iff some a < b < c has ab, bc non-edges and ac an edge.
std::vector<Label> naive_bad(const LabeledGraph& g);

// Fixtures from the worked example: G1 with word 8753532847616421 and the
// relabeling G2 represented by 351748246.
LabeledGraph g1();
LabeledGraph g2();

// Random word over [n], each letter once or twice (doubling probability
// `p_double`), uniformly shuffled.
std::vector<Label> random_word(std::mt19937_64& rng, int n, double p_double);

LabeledGraph random_graph(std::mt19937_64& rng, int n, double p_edge);

std::vector<std::vector<Label>> all_permutations(int n);

// Every word over [n] in which each letter occurs once or twice.
void for_each_short_word(int n,
                         const std::function<void(const std::vector<Label>&)>& fn);

// After the descending sweep: for each doubled letter i, the letter right
// after its first occurrence is larger than i.
bool first_occurrence_rises(std::span<const Label> w);
// For each doubled letter k, the letter right before its second occurrence is
// smaller than k.
bool second_occurrence_falls(std::span<const Label> w);

}  // namespace twelverep::testing

#endif  // TWELVEREP_TESTING_DEFINITIONAL_HPP
