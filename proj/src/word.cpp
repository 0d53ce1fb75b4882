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

#include "twelverep/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

#include "twelverep/errors.hpp"

namespace twelverep {

namespace {

constexpr int kMaxLetter = 1'000'000;

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool all_digits(std::string_view token) {
  return !token.empty() &&
         std::all_of(token.begin(), token.end(), [](char c) {
           return std::isdigit(static_cast<unsigned char>(c)) != 0;
         });
}

Label parse_letter(std::string_view token) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw Error(ErrorCode::kLetterOutOfRange,
                "letter " + std::string(token) + " is out of range");
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorCode::kParseError,
                "not an integer: \"" + std::string(token) + "\"");
  }
  if (value < 1 || value > kMaxLetter) {
    throw Error(ErrorCode::kLetterOutOfRange,
                "letter " + std::string(token) + " is out of range");
  }
  return static_cast<Label>(value);
}

}  // namespace

Word::Word(std::vector<Label> letters, std::optional<int> n)
    : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw Error(ErrorCode::kIncompleteAlphabet, "empty word");
  }
  Label max_letter = 0;
  for (Label x : letters_) {
    if (x < 1) {
      throw Error(ErrorCode::kLetterOutOfRange,
                  "letter " + std::to_string(x) + " is not positive");
    }
    max_letter = std::max(max_letter, x);
  }
  if (n) {
    if (*n < 1) {
      throw Error(ErrorCode::kLetterOutOfRange,
                  "alphabet size must be positive");
    }
    if (max_letter > *n) {
      throw Error(ErrorCode::kLetterOutOfRange,
                  "letter " + std::to_string(max_letter) + " exceeds n = " +
                      std::to_string(*n));
    }
  }
  n_ = n.value_or(max_letter);
  if (letters_.size() < static_cast<std::size_t>(n_)) {
    throw Error(ErrorCode::kIncompleteAlphabet,
                "word of length " + std::to_string(letters_.size()) +
                    " cannot contain all of [1," + std::to_string(n_) + "]");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (Label x : letters_) seen[static_cast<std::size_t>(x)] = true;
  for (Label x = 1; x <= n_; ++x) {
    if (!seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorCode::kIncompleteAlphabet,
                  "letter " + std::to_string(x) + " does not occur");
    }
  }
}

std::size_t Word::max_occurrences() const {
  std::vector<std::size_t> count(static_cast<std::size_t>(n_) + 1, 0);
  std::size_t best = 0;
  for (Label x : letters_) {
    best = std::max(best, ++count[static_cast<std::size_t>(x)]);
  }
  return best;
}

Word parse_word(std::string_view text, std::optional<int> n) {
  const auto tokens = split_tokens(text);
  if (tokens.empty()) {
    throw Error(ErrorCode::kParseError, "empty word");
  }
  std::vector<Label> letters;
  const bool digit_string = tokens.size() == 1 && tokens[0].size() > 1 &&
                            all_digits(tokens[0]) && (!n || *n <= 9);
  if (digit_string) {
    for (char c : tokens[0]) {
      if (c == '0') {
        throw Error(ErrorCode::kLetterOutOfRange, "letter 0 is not allowed");
      }
      letters.push_back(c - '0');
    }
  } else {
    letters.reserve(tokens.size());
    for (std::string_view token : tokens) letters.push_back(parse_letter(token));
  }
  return Word(std::move(letters), n);
}

std::string format_word(const Word& w, bool compact) {
  std::string out;
  const bool digits = compact && w.n() <= 9;
  for (Label x : w.letters()) {
    if (!digits && !out.empty()) out.push_back(' ');
    out += std::to_string(x);
  }
  return out;
}

OccurrenceIndex::OccurrenceIndex(const Word& w)
    : positions_(static_cast<std::size_t>(w.n())) {
  std::size_t position = 1;
  for (Label x : w.letters()) {
    positions_[static_cast<std::size_t>(x - 1)].push_back(position++);
  }
}

OccurrenceIndex occurrence_index(const Word& w) { return OccurrenceIndex(w); }

LabeledGraph decode(const Word& w) {
  const int n = w.n();
  std::vector<std::size_t> first(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::size_t> last(static_cast<std::size_t>(n) + 1, 0);
  std::size_t position = 1;
  for (Label x : w.letters()) {
    auto slot = static_cast<std::size_t>(x);
    if (first[slot] == 0) first[slot] = position;
    last[slot] = position;
    ++position;
  }
  std::vector<std::pair<Label, Label>> edges;
  for (Label i = 1; i <= n; ++i) {
    for (Label j = i + 1; j <= n; ++j) {
      if (last[static_cast<std::size_t>(j)] < first[static_cast<std::size_t>(i)]) {
        edges.emplace_back(i, j);
      }
    }
  }
  return LabeledGraph(n, edges);
}

bool verify(const Word& w, const LabeledGraph& g) {
  if (w.n() != g.n()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "word is over [1," + std::to_string(w.n()) +
                    "] but the graph has " + std::to_string(g.n()) +
                    " vertices");
  }
  return decode(w) == g;
}

}  // namespace twelverep
