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

// Exhaustive ground truths at desk scale. Nothing here relies on the
// forbidden-pattern characterization or on the n + b length law; those are
// the claims these searches are used to check.

#ifndef TWELVEREP_ORACLE_HPP
#define TWELVEREP_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "twelverep/graph.hpp"
#include "twelverep/word.hpp"

namespace twelverep::oracle {

inline constexpr int kDefaultWordSearchMaxN = 5;
inline constexpr int kDefaultPermutationMaxN = 8;
inline constexpr int kDefaultEnumerationMaxN = 5;

struct SearchBudget {
  int max_n = kDefaultWordSearchMaxN;
  std::optional<std::uint64_t> max_words;
  // Required to raise max_n above the default cap of a search.
  bool acknowledge_slow = false;

  static SearchBudget words() { return {kDefaultWordSearchMaxN, {}, false}; }
  static SearchBudget permutations() {
    return {kDefaultPermutationMaxN, {}, false};
  }
};

struct SearchStats {
  // Candidate words, or word prefixes for the pruned searches, examined.
  std::uint64_t words_checked = 0;
};

struct SearchResult {
  std::optional<Word> word;
  SearchStats stats;

  bool found() const noexcept { return word.has_value(); }
};

// Reference check straight from the definition: for i < j, an edge exactly
// when no position holding i comes before a position holding j. O(len * n).
bool represents(std::span<const Label> letters, const LabeledGraph& g);

// Shortest word with every letter occurring once or twice whose decoding is
// g. Lengths are scanned upwards from n to 2n; among words of the winning
// length the lexicographically smallest is returned.
SearchResult brute_force_shortest(const LabeledGraph& g,
                                  const SearchBudget& budget = SearchBudget::words());

bool is_representable(const LabeledGraph& g,
                      const SearchBudget& budget = SearchBudget::words());

// First permutation of [n] in lexicographic order that represents g.
SearchResult is_permutation_representable(
    const LabeledGraph& g,
    const SearchBudget& budget = SearchBudget::permutations());

// Scans every word over [n] containing all letters (no occurrence cap) of
// length n..max_length and returns the first length at which one represents
// g. The count of words grows as n^length; the budget's max_words applies.
std::optional<std::size_t> shortest_unrestricted_length(
    const LabeledGraph& g, std::size_t max_length,
    const SearchBudget& budget = SearchBudget::words(),
    SearchStats* stats = nullptr);

// Builds a representant with at most two occurrences per letter by solving
// the ordering constraints on first/last positions (a longest-path problem
// on 2n points). Returns nullopt when g is not 12-representable.
std::optional<Word> construct_representant(const LabeledGraph& g);

struct LabelingResult {
  std::vector<Label> labeling;  // vertex v gets label labeling[v - 1]
  LabeledGraph relabeled;
  std::size_t bad_count = 0;
  Word representant;
  std::uint64_t labelings_checked = 0;
  std::uint64_t valid_labelings = 0;
};

using RepresentantProvider =
    std::function<std::optional<Word>(const LabeledGraph&)>;

// Minimizes the number of bad vertices over all n! labelings that contain no
// forbidden pattern; ties go to the lexicographically smallest labeling. The
// representant of the winner is shorten() applied to a word obtained from
// `provider`, or from brute_force_shortest() when no provider is given and
// n <= 5. For larger n without a provider, RepresentantRequired is thrown.
// NotRepresentable is thrown when every labeling contains a forbidden pattern.
LabelingResult min_bad_labeling(
    const LabeledGraph& structure,
    const SearchBudget& budget = SearchBudget::permutations(),
    const RepresentantProvider& provider = {});

// All 2^(n(n-1)/2) labeled graphs on [n], bit k of the index selecting the
// k-th pair in (1,2), (1,3), ..., (n-1,n) order.
void for_each_labeled_graph(int n,
                            const std::function<void(const LabeledGraph&)>& fn,
                            const SearchBudget& budget = SearchBudget::words());
std::vector<LabeledGraph> enumerate_labeled_graphs(
    int n, const SearchBudget& budget = SearchBudget::words());

// {found, word, length, stats: {words_checked}}
nlohmann::json to_json(const SearchResult& result, bool compact = false);

}  // namespace twelverep::oracle

#endif  // TWELVEREP_ORACLE_HPP
