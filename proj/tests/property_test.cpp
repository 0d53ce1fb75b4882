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

// Cross-module properties: the shortener against the bad-vertex count, the
// forbidden-pattern checker against exhaustive search, and the lower bound
// against unrestricted enumeration.

#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "testing/definitional.hpp"
#include "twelverep/errors.hpp"
#include "twelverep/graph.hpp"
#include "twelverep/oracle.hpp"
#include "twelverep/shortener.hpp"
#include "twelverep/word.hpp"

namespace twelverep {
namespace {

std::vector<std::size_t> letter_counts(const Word& w) {
  std::vector<std::size_t> count(static_cast<std::size_t>(w.n()) + 1, 0);
  for (Label x : w.letters()) ++count[static_cast<std::size_t>(x)];
  return count;
}

TEST(ShortenPropertyTest, RandomWords) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Word w(testing::random_word(rng, n, 0.5));
    const LabeledGraph g = decode(w);
    EXPECT_FALSE(find_forbidden_pattern(g)) << format_word(w);

    auto [out, trace] = shorten_with_trace(w, TraceLevel::kLengths);
    ASSERT_TRUE(trace.after_descending);
    EXPECT_TRUE(testing::first_occurrence_rises(trace.after_descending->letters()))
        << format_word(w);
    EXPECT_TRUE(testing::second_occurrence_falls(out.letters())) << format_word(w);
    EXPECT_EQ(decode(out), g);

    const auto report = bad_vertices(g);
    EXPECT_EQ(out.size(), static_cast<std::size_t>(n) + report.b_count());
    const auto count = letter_counts(out);
    for (Label x = 1; x <= n; ++x) {
      EXPECT_EQ(count[static_cast<std::size_t>(x)], report.is_bad(x) ? 2u : 1u)
          << "letter " << x << " in " << format_word(out);
    }
  }
}

TEST(ShortenPropertyTest, ExhaustiveMinimalityUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    std::map<testing::EdgeSet, std::size_t> shortest;
    testing::for_each_short_word(n, [&](const std::vector<Label>& letters) {
      const Word w(letters, n);
      const LabeledGraph g = decode(w);
      const auto key = testing::edge_set(g);
      if (!shortest.contains(key)) {
        shortest[key] = oracle::brute_force_shortest(g).word->size();
      }
      EXPECT_EQ(shorten(w).size(), shortest[key]) << format_word(w);
    });
  }
}

TEST(ForbiddenPatternPropertyTest, EquivalentToRepresentability) {
  for (int n = 1; n <= 4; ++n) {
    oracle::for_each_labeled_graph(n, [](const LabeledGraph& g) {
      EXPECT_EQ(!find_forbidden_pattern(g), oracle::is_representable(g));
    });
  }
}

TEST(OraclePropertyTest, LengthLawAndPermutationCorollary) {
  for (int n = 1; n <= 4; ++n) {
    oracle::for_each_labeled_graph(n, [&](const LabeledGraph& g) {
      const auto r = oracle::brute_force_shortest(g);
      if (!r.word) return;
      const std::size_t b = bad_vertices(g).b_count();
      EXPECT_EQ(r.word->size(), static_cast<std::size_t>(n) + b);
      EXPECT_EQ(oracle::is_permutation_representable(g).found(), b == 0);
      // Nothing shorter, even allowing three or more copies of a letter.
      EXPECT_EQ(oracle::shortest_unrestricted_length(g, r.word->size()),
                r.word->size());
    });
  }
}

TEST(OraclePropertyTest, LabelSearchResultsAreValid) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto g = testing::random_graph(rng, n, 0.5);
    std::optional<oracle::LabelingResult> r;
    try {
      r = oracle::min_bad_labeling(g);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotRepresentable);
    }
    if (!r) {
      for (const auto& p : testing::all_permutations(n)) {
        EXPECT_TRUE(find_forbidden_pattern(relabel(g, p)));
      }
      continue;
    }
    EXPECT_FALSE(find_forbidden_pattern(r->relabeled));
    EXPECT_TRUE(verify(r->representant, r->relabeled));
    EXPECT_EQ(r->representant.size(), static_cast<std::size_t>(n) + r->bad_count);
    for (const auto& p : testing::all_permutations(n)) {
      const auto h = relabel(g, p);
      if (!find_forbidden_pattern(h)) {
        EXPECT_GE(bad_vertices(h).b_count(), r->bad_count);
      }
    }
  }
}

}  // namespace
}  // namespace twelverep
