#include "bnp/bracketer.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace bnp {
namespace {

Grammar grammar_of(std::initializer_list<std::string_view> rules) {
  Grammar g;
  for (auto r : rules) g.rules[parse_rule(r)].frequency = 1;
  return g;
}

std::vector<std::string> split(std::string_view text) { return parse_rule(text).tags; }

TEST(Bracket, AmbiguousGerundRuleFires) {
  const auto trie = compile_trie(grammar_of({"VBG NNS", "DT NNS"}));
  const Corpus c = testing::bracketed(
      "The/DT execs/NNS squeezed/VBD in/IN a/DT few/JJ meetings/NNS before/IN boarding/VBG "
      "buses/NNS again/RB\n");
  const auto out = bracket(c.sentences[0].tags(), trie);
  ASSERT_EQ(out.nps.size(), 2u);
  EXPECT_EQ(out.nps[1].span, (Span{8, 10}));
  EXPECT_EQ(trie.rule(out.nps[1].rule), parse_rule("VBG NNS"));
}

TEST(Bracket, EmptyGrammarProposesNothing) {
  EXPECT_TRUE(bracket(split("DT NN VBZ"), compile_trie(Grammar{})).nps.empty());
  EXPECT_TRUE(bracket({}, compile_trie(grammar_of({"NN"}))).nps.empty());
}

TEST(Bracket, BocaRatonFragment) {
  const auto trie = compile_trie(grammar_of({"NNP NNP , NNP", "NNP", "NNP NNP"}));
  const auto out = bracket(split("NNP NNP , NNP NNP , CC NNP NNP"), trie);
  ASSERT_EQ(out.nps.size(), 3u);
  EXPECT_EQ(out.spans(), (std::vector<Span>{{0, 4}, {4, 5}, {7, 9}}));
  EXPECT_EQ(trie.rule(out.nps[0].rule), parse_rule("NNP NNP , NNP"));
  EXPECT_EQ(trie.rule(out.nps[1].rule), parse_rule("NNP"));
  EXPECT_EQ(trie.rule(out.nps[2].rule), parse_rule("NNP NNP"));
}

TEST(Bracket, LongestMatchNeedsTerminalNotJustPath) {
  // DT JJ is only a prefix of DT JJ NN; the scan must fall back to DT.
  const auto trie = compile_trie(grammar_of({"DT", "DT JJ NN"}));
  const auto out = bracket(split("DT JJ VBZ"), trie);
  EXPECT_EQ(out.spans(), (std::vector<Span>{{0, 1}}));
}

TEST(BracketCorpus, EmptyCorpus) {
  EXPECT_TRUE(bracket_corpus(Corpus{}, compile_trie(grammar_of({"NN"}))).sentences.empty());
}

TEST(BracketCorpus, TrainingSentenceReproposed) {
  const Corpus example = testing::example_sentence();
  const Grammar g = extract_grammar(example);
  const Corpus out = bracket_corpus(example, compile_trie(g));
  ASSERT_EQ(out.sentences.size(), 1u);
  EXPECT_EQ(out.sentences[0].tokens, example.sentences[0].tokens);
  std::vector<Span> oracle;
  for (const auto& m : testing::naive_bracket(example.sentences[0].tags(), testing::rules_of(g)))
    oracle.push_back(m.span);
  EXPECT_EQ(out.sentences[0].nps, oracle);
  EXPECT_EQ(out.sentences[0].nps, example.sentences[0].nps);
}

TEST(BracketCorpus, ParallelMatchesSequential) {
  testing::Rng rng(5);
  const auto alpha = testing::alphabet(8);
  const Corpus c = testing::random_corpus(rng, alpha, 200, 30);
  const auto trie = compile_trie(extract_grammar(c));
  EXPECT_EQ(bracket_corpus(c, trie, 4).sentences, bracket_corpus(c, trie, 1).sentences);
}

TEST(BracketProperty, OracleEquivalenceAndInvariants) {
  testing::Rng rng(2024);
  const auto alpha = testing::alphabet(10);
  for (int trial = 0; trial < 1000; ++trial) {
    const Grammar g = testing::random_grammar(rng, alpha, 50, 5);
    const RuleTrie trie = compile_trie(g);
    const auto tags = testing::random_tags(rng, alpha, 0, 40);
    BracketStats stats;
    const auto out = bracket(tags, trie, &stats);
    const auto oracle = testing::naive_bracket(tags, testing::rules_of(g));

    ASSERT_EQ(out.nps.size(), oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      ASSERT_EQ(out.nps[i].span, oracle[i].span);
      ASSERT_EQ(trie.rule(out.nps[i].rule), oracle[i].rule);
      const auto& rule = trie.rule(out.nps[i].rule);
      ASSERT_TRUE(std::equal(rule.tags.begin(), rule.tags.end(),
                             tags.begin() + static_cast<std::ptrdiff_t>(out.nps[i].span.start)));
      if (i > 0) {
        ASSERT_LE(out.nps[i - 1].span.end, out.nps[i].span.start);
      }
    }
    ASSERT_LE(stats.scan_steps, tags.size());
    ASSERT_LE(stats.trie_visits, tags.size() * trie.max_rule_length());

    // Greedy dominance: positions the scan reaches where a rule matches start a span.
    std::size_t k = 0;
    for (std::size_t i = 0; i < tags.size();) {
      if (k < out.nps.size() && out.nps[k].span.start == i) {
        i = out.nps[k++].span.end;
        continue;
      }
      ASSERT_FALSE(trie.longest_match(tags, i).has_value());
      ++i;
    }
  }
}

}  // namespace
}  // namespace bnp
