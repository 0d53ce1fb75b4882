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

#include <gtest/gtest.h>

#include <set>

#include "testing/definitional.hpp"
#include "twelverep/errors.hpp"
#include "twelverep/shortener.hpp"

namespace twelverep::oracle {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no twelverep::Error thrown";
  return ErrorCode::kParseError;
}

const LabeledGraph kI3(3, {{1, 2}, {2, 3}});

SearchBudget slow(int max_n) { return {max_n, {}, true}; }

TEST(RepresentsTest, DefinitionalCheck) {
  const std::vector<Label> w{8, 7, 5, 3, 5, 3, 2, 8, 4, 7, 6, 1, 6, 4, 2, 1};
  EXPECT_TRUE(represents(w, testing::g1()));
  EXPECT_FALSE(represents(w, testing::g2()));
  const std::vector<Label> missing{1, 3};
  EXPECT_FALSE(represents(missing, LabeledGraph::edgeless(3)));
}

TEST(BruteForceShortestTest, Examples) {
  auto edgeless = brute_force_shortest(LabeledGraph::edgeless(3));
  ASSERT_TRUE(edgeless.word);
  EXPECT_EQ(format_word(*edgeless.word), "123");
  EXPECT_GT(edgeless.stats.words_checked, 0u);
  auto complete = brute_force_shortest(LabeledGraph::complete(3));
  ASSERT_TRUE(complete.word);
  EXPECT_EQ(format_word(*complete.word), "321");
  EXPECT_FALSE(brute_force_shortest(kI3).word);
}

TEST(BruteForceShortestTest, LexicographicallySmallestWinner) {
  EXPECT_EQ(format_word(*brute_force_shortest(LabeledGraph::edgeless(2)).word),
            "12");
  // Only 1-3 is an edge, so 2 is bad and must be written twice.
  const LabeledGraph g(3, {{1, 3}});
  const auto r = brute_force_shortest(g);
  ASSERT_TRUE(r.word);
  EXPECT_EQ(r.word->size(), 4u);
  std::vector<Label> letters{1, 2, 2, 3};
  std::optional<std::vector<Label>> first;
  do {
    if (testing::definitional_edges(letters, 3) == testing::edge_set(g)) {
      first = letters;
      break;
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  ASSERT_TRUE(first);
  EXPECT_EQ(std::vector<Label>(r.word->letters().begin(),
                               r.word->letters().end()),
            *first);
}

TEST(BruteForceShortestTest, Budget) {
  EXPECT_EQ(code_of([] { brute_force_shortest(LabeledGraph::edgeless(6)); }),
            ErrorCode::kBudgetExceeded);
  EXPECT_EQ(code_of([] {
              brute_force_shortest(LabeledGraph::edgeless(6), {6, {}, false});
            }),
            ErrorCode::kBudgetExceeded);
  EXPECT_TRUE(brute_force_shortest(LabeledGraph::edgeless(6), slow(6)).word);
  EXPECT_EQ(code_of([] { brute_force_shortest(kI3, {5, 3, false}); }),
            ErrorCode::kBudgetExceeded);
}

TEST(IsRepresentableTest, Examples) {
  EXPECT_FALSE(is_representable(kI3));
  EXPECT_FALSE(is_representable(LabeledGraph(4, {{1, 3}, {2, 4}})));
  EXPECT_FALSE(is_representable(LabeledGraph(4, {{1, 4}, {2, 3}})));
  EXPECT_TRUE(is_representable(testing::g1(), slow(8)));
}

TEST(IsRepresentableTest, G1ShortestHasLengthEleven) {
  auto r = brute_force_shortest(testing::g1(), slow(8));
  ASSERT_TRUE(r.word);
  EXPECT_EQ(r.word->size(), 11u);
  EXPECT_TRUE(verify(*r.word, testing::g1()));
}

TEST(PermutationTest, Examples) {
  auto g1 = is_permutation_representable(testing::g1());
  EXPECT_FALSE(g1.word);
  auto e4 = is_permutation_representable(LabeledGraph::edgeless(4));
  ASSERT_TRUE(e4.word);
  EXPECT_EQ(format_word(*e4.word), "1234");
  auto k2 = is_permutation_representable(LabeledGraph::complete(2));
  ASSERT_TRUE(k2.word);
  EXPECT_EQ(format_word(*k2.word), "21");
  EXPECT_EQ(code_of([] {
              is_permutation_representable(LabeledGraph::edgeless(9));
            }),
            ErrorCode::kBudgetExceeded);
}

TEST(PermutationTest, AgreesWithUnprunedScan) {
  for (int n = 1; n <= 4; ++n) {
    const auto perms = testing::all_permutations(n);
    for_each_labeled_graph(n, [&](const LabeledGraph& g) {
      std::optional<std::vector<Label>> want;
      for (const auto& p : perms) {
        if (represents(p, g)) {
          want = p;
          break;
        }
      }
      const auto got = is_permutation_representable(g);
      ASSERT_EQ(got.found(), want.has_value());
      if (want) {
        EXPECT_EQ(std::vector<Label>(got.word->letters().begin(),
                                     got.word->letters().end()),
                  *want);
      }
    });
  }
}

TEST(EnumerateTest, Counts) {
  EXPECT_EQ(enumerate_labeled_graphs(1).size(), 1u);
  EXPECT_EQ(enumerate_labeled_graphs(2).size(), 2u);
  const auto four = enumerate_labeled_graphs(4);
  EXPECT_EQ(four.size(), 64u);
  std::set<testing::EdgeSet> distinct;
  for (const auto& g : four) distinct.insert(testing::edge_set(g));
  EXPECT_EQ(distinct.size(), 64u);
  EXPECT_EQ(enumerate_labeled_graphs(5).size(), 1024u);
  EXPECT_EQ(code_of([] { enumerate_labeled_graphs(6); }),
            ErrorCode::kBudgetExceeded);
}

TEST(UnrestrictedLengthTest, FindsShortestWithoutOccurrenceCap) {
  EXPECT_EQ(shortest_unrestricted_length(LabeledGraph::edgeless(3), 6), 3u);
  EXPECT_EQ(shortest_unrestricted_length(LabeledGraph(3, {{1, 3}}), 6), 4u);
  EXPECT_FALSE(shortest_unrestricted_length(kI3, 6));
}

TEST(ConstructTest, MatchesForbiddenPatternVerdict) {
  for (int n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [](const LabeledGraph& g) {
      const auto w = construct_representant(g);
      EXPECT_EQ(w.has_value(), !find_forbidden_pattern(g));
      if (w) {
        EXPECT_TRUE(verify(*w, g));
        EXPECT_LE(w->max_occurrences(), 2u);
      }
    });
  }
  const auto w1 = construct_representant(testing::g1());
  ASSERT_TRUE(w1);
  EXPECT_TRUE(verify(*w1, testing::g1()));
  EXPECT_EQ(shorten(*w1).size(), 11u);
}

TEST(ConstructTest, AgreesWithBruteForceOnAllFourVertexGraphs) {
  for_each_labeled_graph(4, [](const LabeledGraph& g) {
    EXPECT_EQ(construct_representant(g).has_value(), is_representable(g));
  });
}

TEST(MinBadLabelingTest, Edgeless) {
  const auto r = std::optional(min_bad_labeling(LabeledGraph::edgeless(4)));
  EXPECT_EQ(r->bad_count, 0u);
  EXPECT_EQ(r->labeling, (std::vector<Label>{1, 2, 3, 4}));
  EXPECT_EQ(r->representant.size(), 4u);
}

TEST(MinBadLabelingTest, FourCycle) {
  const LabeledGraph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  const auto r = std::optional(min_bad_labeling(c4));
  EXPECT_EQ(r->bad_count, 0u);
  EXPECT_TRUE(verify(r->representant, r->relabeled));
  EXPECT_EQ(r->representant.size(), 4u);
  // Cross-check against a plain scan of all 24 labelings.
  std::size_t best = 99;
  for (const auto& p : testing::all_permutations(4)) {
    const auto g = relabel(c4, p);
    if (!testing::naive_forbidden(g)) {
      best = std::min(best, testing::naive_bad(g).size());
    }
  }
  EXPECT_EQ(best, 0u);
}

TEST(MinBadLabelingTest, G1StructureNeedsOneBadVertex) {
  const auto r = std::optional(min_bad_labeling(
      testing::g1(), SearchBudget::permutations(), construct_representant));
  EXPECT_EQ(r->bad_count, 1u);
  EXPECT_EQ(r->representant.size(), 9u);
  EXPECT_TRUE(verify(r->representant, r->relabeled));
  EXPECT_FALSE(find_forbidden_pattern(r->relabeled));
  EXPECT_EQ(relabel(testing::g1(), r->labeling), r->relabeled);
  EXPECT_EQ(r->labelings_checked, 40320u);
}

TEST(MinBadLabelingTest, RequiresProviderAboveFive) {
  EXPECT_EQ(code_of([] { min_bad_labeling(testing::g1()); }),
            ErrorCode::kRepresentantRequired);
}

TEST(MinBadLabelingTest, NoValidLabeling) {
  // C5 is not a comparability graph, so no labeling of it is valid.
  const LabeledGraph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  EXPECT_EQ(code_of([&] { min_bad_labeling(c5); }),
            ErrorCode::kNotRepresentable);
}

TEST(MinBadLabelingTest, RejectsWrongProviderWord) {
  auto provider = [](const LabeledGraph& g) -> std::optional<Word> {
    std::vector<Label> ascending;
    for (Label x = 1; x <= g.n(); ++x) ascending.push_back(x);
    return Word(ascending);
  };
  EXPECT_EQ(code_of([&] {
              min_bad_labeling(LabeledGraph::complete(3),
                               SearchBudget::permutations(), provider);
            }),
            ErrorCode::kPreconditionViolated);
}

TEST(SearchJsonTest, Shape) {
  const auto found = to_json(brute_force_shortest(LabeledGraph::edgeless(3)));
  EXPECT_EQ(found["found"], true);
  EXPECT_EQ(found["word"], "1 2 3");
  EXPECT_EQ(found["length"], 3);
  EXPECT_TRUE(found["stats"]["words_checked"].is_number_unsigned());
  const auto missing = to_json(brute_force_shortest(kI3));
  EXPECT_EQ(missing["found"], false);
  EXPECT_TRUE(missing["word"].is_null());
  EXPECT_TRUE(missing["length"].is_null());
}

}  // namespace
}  // namespace twelverep::oracle
