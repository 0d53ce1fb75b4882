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

// Shortest 12-representants of labeled graphs.
//
// shorten() takes a representant in which every letter occurs at most twice
// and pushes doubled letters towards each other with adjacent swaps, merging
// them when they meet. Two sweeps are made:
//
//   descending, i = n..1: starting at the first occurrence p of i, swap while
//     w[p] > w[p+1]; remove one copy if w[p] == w[p+1].
//   ascending,  j = 1..n: starting at the second occurrence q of j, swap while
//     w[q] < w[q-1]; remove one copy if w[q] == w[q-1].
//
// Every swap keeps the decoded graph unchanged, and on exit a letter occurs
// twice exactly when it is a bad vertex, so the result has length n + b.
// Runs in O(n^2).

#ifndef TWELVEREP_SHORTENER_HPP
#define TWELVEREP_SHORTENER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "twelverep/word.hpp"

namespace twelverep {

enum class Phase { kDescending, kAscending };
enum class TraceLevel { kNone, kLengths, kFull };
enum class StepAction { kSwap, kRemove };

std::string_view to_string(Phase phase);
std::string_view to_string(TraceLevel level);
std::string_view to_string(StepAction action);
std::optional<TraceLevel> trace_level_from_string(std::string_view name);

struct ShortenStep {
  Phase phase = Phase::kDescending;
  Label pivot = 0;
  StepAction action = StepAction::kSwap;
  // Swap: the pivot moves from `position` to `other` (adjacent).
  // Remove: the letter at `position` is deleted; `other` is the adjacent
  // equal copy that stays.
  std::size_t position = 0;
  std::size_t other = 0;
  std::optional<Word> word_after;  // kFull only
};

// Snapshot at the start of an iteration whose pivot occurs twice.
struct TraceRow {
  Phase phase = Phase::kDescending;
  Label pivot = 0;
  std::size_t length = 0;
  std::optional<Word> word;  // kFull only
};

struct ShortenTrace {
  TraceLevel level = TraceLevel::kNone;
  Word input;
  Word output;
  std::optional<Word> after_descending;  // kLengths and kFull
  std::vector<TraceRow> rows;
  std::vector<ShortenStep> steps;
};

// Throws TooManyOccurrences if some letter occurs three or more times.
Word shorten(const Word& w);

std::pair<Word, ShortenTrace> shorten_with_trace(const Word& w,
                                                 TraceLevel level);

// Re-applies recorded steps to `input`. Throws PreconditionViolated when a
// step does not fit the word it is applied to.
Word replay(const Word& input, std::span<const ShortenStep> steps);

// Row-per-line text: "i=8 8753532847616421" for each retained row, then
// "out 35278471246". kLengths prints the length sequence and the phase
// boundary snapshots instead.
std::string format_trace(const ShortenTrace& trace, bool compact = true);
nlohmann::json trace_to_json(const ShortenTrace& trace);

// The three local rewrites behind the swap/remove steps. Positions are
// 1-based; each throws PreconditionViolated if its side condition fails.
//
// (a) i = w[p] occurs at least twice, p is its first occurrence and
//     w[p+1] < i: swap w[p] and w[p+1].
Word apply_rewrite_a(const Word& w, std::size_t first_pos_of_i);
// (b) i = w[q], q is the second occurrence of i and w[q-1] > i: swap w[q-1]
//     and w[q].
Word apply_rewrite_b(const Word& w, std::size_t second_pos_of_i);
// (c) w[p] == w[p+1]: drop w[p+1].
Word apply_rewrite_c(const Word& w, std::size_t pos);

}  // namespace twelverep

#endif  // TWELVEREP_SHORTENER_HPP
