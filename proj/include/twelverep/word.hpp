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

// Words over [n] and their decoding into labeled graphs.
//
// A word w 12-represents G when, for every pair i < j, the vertices i and j
// are adjacent exactly when no occurrence of i precedes an occurrence of j.
// Equivalently the last j sits before the first i.

#ifndef TWELVEREP_WORD_HPP
#define TWELVEREP_WORD_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twelverep/graph.hpp"

namespace twelverep {

class Word {
 public:
  // Alphabet defaults to [max letter]. Throws LetterOutOfRange for letters
  // outside [n] and IncompleteAlphabet when some letter of [n] is missing.
  explicit Word(std::vector<Label> letters, std::optional<int> n = {});

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return letters_.size(); }
  std::span<const Label> letters() const noexcept { return letters_; }

  // 1-based, as positions are counted throughout.
  Label at(std::size_t position) const { return letters_.at(position - 1); }

  std::size_t max_occurrences() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Label> letters_;
  int n_ = 0;
};

// Whitespace-separated decimal integers, or a bare digit string such as
// "8753532847616421" when the alphabet fits in single digits.
Word parse_word(std::string_view text, std::optional<int> n = {});

// Digit string when n <= 9 and `compact` is set, otherwise space-separated.
std::string format_word(const Word& w, bool compact = true);

class OccurrenceIndex {
 public:
  explicit OccurrenceIndex(const Word& w);

  int n() const noexcept { return static_cast<int>(positions_.size()); }

  // Ascending 1-based positions of `letter`.
  std::span<const std::size_t> positions(Label letter) const {
    return positions_.at(static_cast<std::size_t>(letter - 1));
  }
  std::size_t count(Label letter) const { return positions(letter).size(); }
  std::size_t first(Label letter) const { return positions(letter).front(); }
  std::size_t last(Label letter) const { return positions(letter).back(); }

 private:
  std::vector<std::vector<std::size_t>> positions_;
};

OccurrenceIndex occurrence_index(const Word& w);

LabeledGraph decode(const Word& w);

// Throws AlphabetMismatch when w.n() != g.n().
bool verify(const Word& w, const LabeledGraph& g);

}  // namespace twelverep

#endif  // TWELVEREP_WORD_HPP
