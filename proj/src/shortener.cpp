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

#include "twelverep/shortener.hpp"

#include <limits>
#include <sstream>

#include "twelverep/errors.hpp"

namespace twelverep {

namespace {

constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

// Mutable copy of the word with 0-based first/second positions per letter.
class WorkingWord {
 public:
  explicit WorkingWord(const Word& w)
      : n_(w.n()), letters_(w.letters().begin(), w.letters().end()) {
    reindex();
  }

  std::size_t size() const { return letters_.size(); }
  Label operator[](std::size_t k) const { return letters_[k]; }
  bool doubled(Label x) const { return second_[slot(x)] != kAbsent; }
  std::size_t first(Label x) const { return first_[slot(x)]; }
  std::size_t second(Label x) const { return second_[slot(x)]; }

  void swap_adjacent(std::size_t k) {
    move_occurrence(letters_[k], k, k + 1);
    move_occurrence(letters_[k + 1], k + 1, k);
    std::swap(letters_[k], letters_[k + 1]);
  }

  // Removal shifts everything behind k, so the index is rebuilt.
  void erase(std::size_t k) {
    letters_.erase(letters_.begin() + static_cast<std::ptrdiff_t>(k));
    reindex();
  }

  Word snapshot() const { return Word(letters_, n_); }

 private:
  static std::size_t slot(Label x) { return static_cast<std::size_t>(x); }

  void reindex() {
    first_.assign(static_cast<std::size_t>(n_) + 1, kAbsent);
    second_.assign(static_cast<std::size_t>(n_) + 1, kAbsent);
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      auto s = slot(letters_[k]);
      (first_[s] == kAbsent ? first_[s] : second_[s]) = k;
    }
  }

  void move_occurrence(Label x, std::size_t from, std::size_t to) {
    auto s = slot(x);
    (first_[s] == from ? first_[s] : second_[s]) = to;
  }

  int n_;
  std::vector<Label> letters_;
  std::vector<std::size_t> first_;
  std::vector<std::size_t> second_;
};

class Recorder {
 public:
  explicit Recorder(ShortenTrace* trace) : trace_(trace) {}

  void row(Phase phase, Label pivot, const WorkingWord& w) {
    if (!trace_ || trace_->level == TraceLevel::kNone) return;
    TraceRow r{phase, pivot, w.size(), std::nullopt};
    if (trace_->level == TraceLevel::kFull) r.word = w.snapshot();
    trace_->rows.push_back(std::move(r));
  }

  // Positions are converted to 1-based here.
  void step(Phase phase, Label pivot, StepAction action, std::size_t position,
            std::size_t other, const WorkingWord& w) {
    if (!trace_ || trace_->level == TraceLevel::kNone) return;
    ShortenStep s{phase, pivot, action, position + 1, other + 1, std::nullopt};
    if (trace_->level == TraceLevel::kFull) s.word_after = w.snapshot();
    trace_->steps.push_back(std::move(s));
  }

  void phase_boundary(const WorkingWord& w) {
    if (!trace_ || trace_->level == TraceLevel::kNone) return;
    trace_->after_descending = w.snapshot();
  }

 private:
  ShortenTrace* trace_;
};

Word run(const Word& input, ShortenTrace* trace) {
  if (input.max_occurrences() > 2) {
    throw Error(ErrorCode::kTooManyOccurrences,
                "every letter must occur at most twice");
  }
  const int n = input.n();
  WorkingWord w(input);
  Recorder rec(trace);

  for (Label i = n; i >= 1; --i) {
    if (!w.doubled(i)) continue;
    rec.row(Phase::kDescending, i, w);
    std::size_t p = w.first(i);
    while (w[p] > w[p + 1]) {
      w.swap_adjacent(p);
      rec.step(Phase::kDescending, i, StepAction::kSwap, p, p + 1, w);
      ++p;
    }
    if (w[p] == w[p + 1]) {
      w.erase(p);
      rec.step(Phase::kDescending, i, StepAction::kRemove, p, p + 1, w);
    }
  }
  rec.phase_boundary(w);

  for (Label j = 1; j <= n; ++j) {
    if (!w.doubled(j)) continue;
    rec.row(Phase::kAscending, j, w);
    std::size_t q = w.second(j);
    while (w[q] < w[q - 1]) {
      w.swap_adjacent(q - 1);
      rec.step(Phase::kAscending, j, StepAction::kSwap, q, q - 1, w);
      --q;
    }
    if (w[q] == w[q - 1]) {
      w.erase(q);
      rec.step(Phase::kAscending, j, StepAction::kRemove, q, q - 1, w);
    }
  }
  return w.snapshot();
}

[[noreturn]] void violated(const std::string& what) {
  throw Error(ErrorCode::kPreconditionViolated, what);
}

void check_position(const Word& w, std::size_t pos) {
  if (pos < 1 || pos > w.size()) {
    violated("position " + std::to_string(pos) + " outside [1," +
             std::to_string(w.size()) + "]");
  }
}

Word swapped(const Word& w, std::size_t left) {
  std::vector<Label> letters(w.letters().begin(), w.letters().end());
  std::swap(letters[left - 1], letters[left]);
  return Word(std::move(letters), w.n());
}

}  // namespace

std::string_view to_string(Phase phase) {
  return phase == Phase::kDescending ? "descending" : "ascending";
}

std::string_view to_string(TraceLevel level) {
  switch (level) {
    case TraceLevel::kNone: return "none";
    case TraceLevel::kLengths: return "lengths";
    case TraceLevel::kFull: return "full";
  }
  return "none";
}

std::string_view to_string(StepAction action) {
  return action == StepAction::kSwap ? "swap" : "remove";
}

std::optional<TraceLevel> trace_level_from_string(std::string_view name) {
  if (name == "none") return TraceLevel::kNone;
  if (name == "lengths") return TraceLevel::kLengths;
  if (name == "full") return TraceLevel::kFull;
  return std::nullopt;
}

Word shorten(const Word& w) { return run(w, nullptr); }

std::pair<Word, ShortenTrace> shorten_with_trace(const Word& w,
                                                 TraceLevel level) {
  ShortenTrace trace{level, w, w, std::nullopt, {}, {}};
  Word out = run(w, &trace);
  trace.output = out;
  return {std::move(out), std::move(trace)};
}

Word replay(const Word& input, std::span<const ShortenStep> steps) {
  std::vector<Label> letters(input.letters().begin(), input.letters().end());
  for (const ShortenStep& s : steps) {
    const std::size_t size = letters.size();
    if (s.position < 1 || s.position > size || s.other < 1 ||
        s.other > size ||
        (s.position + 1 != s.other && s.other + 1 != s.position)) {
      violated("step positions are not adjacent cells of the word");
    }
    Label& at = letters[s.position - 1];
    Label& next = letters[s.other - 1];
    if (at != s.pivot) violated("step does not start at its pivot letter");
    if (s.action == StepAction::kSwap) {
      std::swap(at, next);
    } else {
      if (next != s.pivot) violated("remove step without an adjacent copy");
      letters.erase(letters.begin() +
                    static_cast<std::ptrdiff_t>(s.position - 1));
    }
  }
  return Word(std::move(letters), input.n());
}

std::string format_trace(const ShortenTrace& trace, bool compact) {
  std::ostringstream out;
  auto var = [](Phase p) { return p == Phase::kDescending ? "i=" : "j="; };
  if (trace.level == TraceLevel::kFull) {
    for (const TraceRow& r : trace.rows) {
      out << var(r.phase) << r.pivot << ' ' << format_word(*r.word, compact)
          << '\n';
    }
  } else if (trace.level == TraceLevel::kLengths) {
    out << "in " << format_word(trace.input, compact) << '\n';
    out << "lengths";
    for (const TraceRow& r : trace.rows) out << ' ' << r.length;
    out << ' ' << trace.output.size() << '\n';
    if (trace.after_descending) {
      out << "mid " << format_word(*trace.after_descending, compact) << '\n';
    }
  }
  out << "out " << format_word(trace.output, compact) << '\n';
  return out.str();
}

nlohmann::json trace_to_json(const ShortenTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const ShortenStep& s : trace.steps) {
    nlohmann::json j = {{"phase", to_string(s.phase)},
                        {"pivot", s.pivot},
                        {"action", to_string(s.action)},
                        {"position", s.position},
                        {"other", s.other}};
    if (s.word_after) j["word_after"] = format_word(*s.word_after, false);
    steps.push_back(std::move(j));
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const TraceRow& r : trace.rows) {
    nlohmann::json j = {{"phase", to_string(r.phase)},
                        {"pivot", r.pivot},
                        {"length", r.length}};
    if (r.word) j["word"] = format_word(*r.word, false);
    rows.push_back(std::move(j));
  }
  nlohmann::json doc = {{"level", to_string(trace.level)},
                        {"input", format_word(trace.input, false)},
                        {"output", format_word(trace.output, false)},
                        {"rows", std::move(rows)},
                        {"steps", std::move(steps)}};
  if (trace.after_descending) {
    doc["after_descending"] = format_word(*trace.after_descending, false);
  }
  return doc;
}

Word apply_rewrite_a(const Word& w, std::size_t first_pos_of_i) {
  const std::size_t p = first_pos_of_i;
  check_position(w, p);
  const Label i = w.at(p);
  const OccurrenceIndex index(w);
  if (index.count(i) < 2 || index.first(i) != p) {
    violated("position " + std::to_string(p) +
             " is not the first of two or more occurrences");
  }
  if (w.at(p + 1) >= i) {
    violated("the letter after the first occurrence is not smaller");
  }
  return swapped(w, p);
}

Word apply_rewrite_b(const Word& w, std::size_t second_pos_of_i) {
  const std::size_t q = second_pos_of_i;
  check_position(w, q);
  const Label i = w.at(q);
  const OccurrenceIndex index(w);
  if (index.count(i) < 2 || index.positions(i)[1] != q) {
    violated("position " + std::to_string(q) +
             " is not the second occurrence of its letter");
  }
  if (w.at(q - 1) <= i) {
    violated("the letter before the second occurrence is not larger");
  }
  return swapped(w, q - 1);
}

Word apply_rewrite_c(const Word& w, std::size_t pos) {
  check_position(w, pos);
  if (pos == w.size() || w.at(pos) != w.at(pos + 1)) {
    violated("no equal letter follows position " + std::to_string(pos));
  }
  std::vector<Label> letters(w.letters().begin(), w.letters().end());
  letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(pos));
  return Word(std::move(letters), w.n());
}

}  // namespace twelverep
