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

#include "twelverep/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "twelverep/errors.hpp"
#include "twelverep/shortener.hpp"

namespace twelverep::oracle {

namespace {

// Bitmask bookkeeping below holds one bit per letter.
constexpr int kHardMaxN = 16;

void check_budget(int n, const SearchBudget& budget, int default_cap,
                  const char* search) {
  if (n > kHardMaxN) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(search) + ": n = " + std::to_string(n) +
                    " is beyond any exhaustive search");
  }
  if (budget.max_n > default_cap && !budget.acknowledge_slow) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(search) + ": max_n above " +
                    std::to_string(default_cap) +
                    " requires the acknowledge-slow flag");
  }
  if (n > budget.max_n) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(search) + ": n = " + std::to_string(n) +
                    " exceeds max_n = " + std::to_string(budget.max_n));
  }
}

void count_word(SearchStats& stats, const SearchBudget& budget) {
  ++stats.words_checked;
  if (budget.max_words && stats.words_checked > *budget.max_words) {
    throw Error(ErrorCode::kBudgetExceeded,
                "word budget of " + std::to_string(*budget.max_words) +
                    " exhausted");
  }
}

// Bitmask form of represents() for n < 64, used in the hot loops.
class Matcher {
 public:
  explicit Matcher(const LabeledGraph& g)
      : n_(g.n()),
        lower_edges_(static_cast<std::size_t>(n_) + 1, 0),
        lower_non_edges_(static_cast<std::size_t>(n_) + 1, 0),
        witnessed_(static_cast<std::size_t>(n_) + 1, 0) {
    for (Label j = 1; j <= n_; ++j) {
      for (Label i = 1; i < j; ++i) {
        auto& mask = g.adjacent(i, j) ? lower_edges_ : lower_non_edges_;
        mask[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }

  bool operator()(std::span<const Label> letters) {
    std::uint64_t seen = 0;
    std::fill(witnessed_.begin(), witnessed_.end(), 0);
    for (Label j : letters) {
      const auto s = static_cast<std::size_t>(j);
      // Smaller letters already seen are non-neighbours of j.
      const std::uint64_t before = seen & (bit(j) - 1);
      if (before & lower_edges_[s]) return false;
      witnessed_[s] |= before;
      seen |= bit(j);
    }
    for (std::size_t s = 1; s < witnessed_.size(); ++s) {
      if (witnessed_[s] != lower_non_edges_[s]) return false;
    }
    return true;
  }

 private:
  static std::uint64_t bit(Label x) { return std::uint64_t{1} << x; }

  int n_;
  std::vector<std::uint64_t> lower_edges_;
  std::vector<std::uint64_t> lower_non_edges_;
  std::vector<std::uint64_t> witnessed_;
};

// Depth-first enumeration of the arrangements of a letter multiset in
// lexicographic order. A prefix is abandoned as soon as it can no longer
// extend to a representant: an edge {i, j}, i < j, is broken once some i
// precedes some j, and a non-edge {i, j} needs an i before the last j.
// stats.words_checked counts the prefixes examined.
class PrefixSearch {
 public:
  PrefixSearch(const LabeledGraph& g, const SearchBudget& budget,
               SearchStats& stats)
      : n_(g.n()),
        budget_(budget),
        stats_(stats),
        lower_edges_(static_cast<std::size_t>(n_) + 1, 0),
        lower_non_edges_(static_cast<std::size_t>(n_) + 1, 0) {
    for (Label j = 1; j <= n_; ++j) {
      for (Label i = 1; i < j; ++i) {
        auto& mask = g.adjacent(i, j) ? lower_edges_ : lower_non_edges_;
        mask[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }

  // copies[x] is how often letter x is written; copies[0] is unused.
  std::optional<std::vector<Label>> first(std::vector<int> copies) {
    remaining_ = std::move(copies);
    std::size_t length = 0;
    for (int c : remaining_) length += static_cast<std::size_t>(c);
    prefix_.clear();
    prefix_.reserve(length);
    if (extend(0, length)) return prefix_;
    return std::nullopt;
  }

 private:
  bool extend(std::uint64_t seen, std::size_t length) {
    if (prefix_.size() == length) return true;
    for (Label x = 1; x <= n_; ++x) {
      const auto s = static_cast<std::size_t>(x);
      if (remaining_[s] == 0) continue;
      count_word(stats_, budget_);
      const std::uint64_t bit = std::uint64_t{1} << x;
      const std::uint64_t before = seen & (bit - 1);
      if (before & lower_edges_[s]) continue;
      if (remaining_[s] == 1 && (lower_non_edges_[s] & ~before) != 0) continue;
      --remaining_[s];
      prefix_.push_back(x);
      if (extend(seen | bit, length)) return true;
      prefix_.pop_back();
      ++remaining_[s];
    }
    return false;
  }

  int n_;
  const SearchBudget& budget_;
  SearchStats& stats_;
  std::vector<std::uint64_t> lower_edges_;
  std::vector<std::uint64_t> lower_non_edges_;
  std::vector<int> remaining_;
  std::vector<Label> prefix_;
};

}  // namespace

bool represents(std::span<const Label> letters, const LabeledGraph& g) {
  const int n = g.n();
  const auto un = static_cast<std::size_t>(n);
  std::vector<bool> present(un + 1, false);
  // non_edge[i][j] for i < j: some i occurs before some j.
  std::vector<std::vector<bool>> non_edge(un + 1, std::vector<bool>(un + 1));
  for (Label j : letters) {
    if (j < 1 || j > n) return false;
    for (Label i = 1; i < j; ++i) {
      if (present[static_cast<std::size_t>(i)]) {
        non_edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            true;
      }
    }
    present[static_cast<std::size_t>(j)] = true;
  }
  for (Label i = 1; i <= n; ++i) {
    if (!present[static_cast<std::size_t>(i)]) return false;
    for (Label j = i + 1; j <= n; ++j) {
      const bool edge =
          !non_edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (edge != g.adjacent(i, j)) return false;
    }
  }
  return true;
}

SearchResult brute_force_shortest(const LabeledGraph& g,
                                  const SearchBudget& budget) {
  const int n = g.n();
  check_budget(n, budget, kDefaultWordSearchMaxN, "brute_force_shortest");
  SearchResult result;
  PrefixSearch search(g, budget, result.stats);

  // Occurrence profiles: the subset of letters written twice. A profile of
  // size k gives words of length n + k.
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (int doubled = 0; doubled <= n; ++doubled) {
    std::optional<std::vector<Label>> best;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      if (std::popcount(mask) != doubled) continue;
      std::vector<int> copies(static_cast<std::size_t>(n) + 1, 1);
      copies[0] = 0;
      for (Label x = 1; x <= n; ++x) {
        if (mask & (std::uint32_t{1} << (x - 1))) {
          copies[static_cast<std::size_t>(x)] = 2;
        }
      }
      auto hit = search.first(std::move(copies));
      if (hit && (!best || *hit < *best)) best = std::move(hit);
    }
    if (best) {
      result.word = Word(std::move(*best), n);
      return result;
    }
  }
  return result;
}

bool is_representable(const LabeledGraph& g, const SearchBudget& budget) {
  return brute_force_shortest(g, budget).found();
}

SearchResult is_permutation_representable(const LabeledGraph& g,
                                          const SearchBudget& budget) {
  const int n = g.n();
  check_budget(n, budget, kDefaultPermutationMaxN,
               "is_permutation_representable");
  SearchResult result;
  PrefixSearch search(g, budget, result.stats);
  std::vector<int> copies(static_cast<std::size_t>(n) + 1, 1);
  copies[0] = 0;
  if (auto hit = search.first(std::move(copies))) {
    result.word = Word(std::move(*hit), n);
  }
  return result;
}

std::optional<std::size_t> shortest_unrestricted_length(
    const LabeledGraph& g, std::size_t max_length, const SearchBudget& budget,
    SearchStats* stats) {
  const int n = g.n();
  check_budget(n, budget, kDefaultWordSearchMaxN,
               "shortest_unrestricted_length");
  Matcher matches(g);
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (auto length = static_cast<std::size_t>(n); length <= max_length;
       ++length) {
    std::vector<Label> letters(length, 1);
    while (true) {
      std::uint64_t present = 0;
      for (Label x : letters) present |= std::uint64_t{1} << (x - 1);
      if (present == full) {
        count_word(st, budget);
        if (matches(letters)) return length;
      }
      // Odometer increment over [n]^length.
      std::size_t k = length;
      while (k > 0 && letters[k - 1] == n) letters[--k] = 1;
      if (k == 0) break;
      ++letters[k - 1];
    }
  }
  return std::nullopt;
}

std::optional<Word> construct_representant(const LabeledGraph& g) {
  const int n = g.n();
  // Point 2(x-1) is the first occurrence of x, 2(x-1)+1 the last.
  auto first = [](Label x) { return static_cast<std::size_t>(2 * (x - 1)); };
  auto last = [](Label x) { return static_cast<std::size_t>(2 * (x - 1) + 1); };
  struct Arc {
    std::size_t from;
    std::size_t to;
    int weight;  // value[to] >= value[from] + weight
  };
  std::vector<Arc> arcs;
  for (Label i = 1; i <= n; ++i) {
    arcs.push_back({first(i), last(i), 0});
    for (Label j = i + 1; j <= n; ++j) {
      if (g.adjacent(i, j)) {
        arcs.push_back({last(j), first(i), 1});  // every j before every i
      } else {
        arcs.push_back({first(i), last(j), 1});  // some i before some j
      }
    }
  }
  const std::size_t points = 2 * static_cast<std::size_t>(n);
  std::vector<int> value(points, 0);
  bool settled = false;
  for (std::size_t round = 0; round <= points && !settled; ++round) {
    settled = true;
    for (const Arc& a : arcs) {
      if (value[a.to] < value[a.from] + a.weight) {
        value[a.to] = value[a.from] + a.weight;
        settled = false;
      }
    }
  }
  if (!settled) return std::nullopt;  // a strict cycle: no valid order

  struct Event {
    int value;
    Label letter;
  };
  std::vector<Event> events;
  for (Label x = 1; x <= n; ++x) {
    events.push_back({value[first(x)], x});
    if (value[last(x)] != value[first(x)]) events.push_back({value[last(x)], x});
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) {
                     return a.value < b.value;
                   });
  std::vector<Label> letters;
  letters.reserve(events.size());
  for (const Event& e : events) letters.push_back(e.letter);
  return Word(std::move(letters), n);
}

LabelingResult min_bad_labeling(
    const LabeledGraph& structure, const SearchBudget& budget,
    const RepresentantProvider& provider) {
  const int n = structure.n();
  check_budget(n, budget, kDefaultPermutationMaxN, "min_bad_labeling");
  if (!provider && n > kDefaultWordSearchMaxN) {
    throw Error(ErrorCode::kRepresentantRequired,
                "n = " + std::to_string(n) +
                    " needs a representant provider for the winning labeling");
  }

  std::vector<Label> labeling(static_cast<std::size_t>(n));
  std::iota(labeling.begin(), labeling.end(), 1);
  std::optional<std::vector<Label>> best;
  std::size_t best_bad = 0;
  std::uint64_t checked = 0;
  std::uint64_t valid = 0;
  do {
    ++checked;
    if (budget.max_words && checked > *budget.max_words) {
      throw Error(ErrorCode::kBudgetExceeded, "labeling budget exhausted");
    }
    const LabeledGraph g = relabel(structure, labeling);
    if (find_forbidden_pattern(g)) continue;
    ++valid;
    const std::size_t bad = bad_vertices(g).b_count();
    if (!best || bad < best_bad) {
      best = labeling;
      best_bad = bad;
    }
  } while (std::next_permutation(labeling.begin(), labeling.end()));

  if (!best) {
    throw Error(ErrorCode::kNotRepresentable,
                "no labeling avoids the forbidden patterns");
  }

  LabeledGraph relabeled = relabel(structure, *best);
  std::optional<Word> seed;
  if (provider) {
    seed = provider(relabeled);
  } else {
    seed = brute_force_shortest(relabeled).word;
  }
  if (!seed) {
    throw Error(ErrorCode::kRepresentantRequired,
                "no representant available for the winning labeling");
  }
  if (!verify(*seed, relabeled)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "supplied representant does not represent the relabeled graph");
  }
  Word representant = shorten(*seed);
  return LabelingResult{std::move(*best), std::move(relabeled), best_bad,
                        std::move(representant), checked, valid};
}

void for_each_labeled_graph(int n,
                            const std::function<void(const LabeledGraph&)>& fn,
                            const SearchBudget& budget) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidGraph, "n must be positive");
  }
  check_budget(n, budget, kDefaultEnumerationMaxN, "enumerate_labeled_graphs");
  std::vector<std::pair<Label, Label>> pairs;
  for (Label u = 1; u <= n; ++u) {
    for (Label v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  std::vector<std::pair<Label, Label>> edges;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    edges.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask & (std::uint64_t{1} << k)) edges.push_back(pairs[k]);
    }
    fn(LabeledGraph(n, edges));
  }
}

std::vector<LabeledGraph> enumerate_labeled_graphs(int n,
                                                   const SearchBudget& budget) {
  std::vector<LabeledGraph> out;
  for_each_labeled_graph(
      n, [&](const LabeledGraph& g) { out.push_back(g); }, budget);
  return out;
}

nlohmann::json to_json(const SearchResult& result, bool compact) {
  nlohmann::json doc;
  doc["found"] = result.found();
  doc["word"] = result.word ? nlohmann::json(format_word(*result.word, compact))
                            : nlohmann::json(nullptr);
  doc["length"] = result.word ? nlohmann::json(result.word->size())
                              : nlohmann::json(nullptr);
  doc["stats"] = {{"words_checked", result.stats.words_checked}};
  return doc;
}

}  // namespace twelverep::oracle
