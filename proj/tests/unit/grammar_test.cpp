#include "bnp/grammar.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace bnp {
namespace {

Rule R(std::string_view text) { return parse_rule(text); }

TEST(ExtractGrammar, BaseNpExampleSentence) {
  const Grammar g = extract_grammar(testing::example_sentence());
  std::map<Rule, std::size_t> expected = {
      {R("PRP"), 1},     {R("NN"), 1},        {R("PRP$ JJ NN"), 1}, {R("DT NN"), 1},
      {R("VBG NNS"), 1}, {R("DT JJ NNS"), 1}, {R("NN NNS"), 1},     {R("NNP NNP"), 2}};
  ASSERT_EQ(g.size(), 8u);
  for (const auto& [rule, freq] : expected) {
    ASSERT_TRUE(g.contains(rule)) << rule.to_string();
    EXPECT_EQ(g.rules.at(rule).frequency, freq) << rule.to_string();
    EXPECT_FALSE(g.rules.at(rule).benefit.has_value());
  }
  EXPECT_EQ(g.singleton_count(), 7u);
}

TEST(ExtractGrammar, NoSpansGivesEmptyGrammar) {
  EXPECT_TRUE(extract_grammar(testing::bracketed("a/DT b/NN\nc/VBZ\n")).empty());
  EXPECT_TRUE(extract_grammar(Corpus{}).empty());
}

TEST(ExtractGrammar, DuplicatesCounted) {
  const Grammar g = extract_grammar(testing::bracketed("[ the/DT dog/NN ] saw/VBD [ the/DT dog/NN ]\n"));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.rules.at(R("DT NN")).frequency, 2u);
}

TEST(ExtractGrammarProperty, OrderInsensitiveAndComplete) {
  testing::Rng rng(11);
  const auto alpha = testing::alphabet(8);
  for (int trial = 0; trial < 100; ++trial) {
    Corpus c = testing::random_corpus(rng, alpha, 10, 10);
    const Grammar g = extract_grammar(c);
    std::shuffle(c.sentences.begin(), c.sentences.end(), rng);
    ASSERT_EQ(extract_grammar(c), g);
    std::size_t total = 0;
    for (const auto& [r, s] : g.rules) total += s.frequency;
    EXPECT_EQ(total, c.np_count());
    for (const auto& s : c.sentences)
      for (const auto& span : s.nps) {
        Rule r;
        for (auto i = span.start; i < span.end; ++i) r.tags.push_back(s.tokens[i].tag);
        ASSERT_TRUE(g.contains(r));
      }
  }
}

TEST(DropSingletons, Cases) {
  Grammar g;
  g.rules[R("DT NN")].frequency = 5;
  g.rules[R("VBG NNS")].frequency = 1;
  const Grammar d = drop_singletons(g);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.rules.at(R("DT NN")).frequency, 5u);

  Grammar ones;
  ones.rules[R("NN")].frequency = 1;
  ones.rules[R("JJ NN")].frequency = 1;
  EXPECT_TRUE(drop_singletons(ones).empty());
}

TEST(Trie, EmptyGrammar) {
  const RuleTrie t = compile_trie(Grammar{});
  EXPECT_EQ(t.node_count(), 1u);
  EXPECT_EQ(t.terminal_count(), 0u);
  std::vector<std::string> tags{"NN"};
  EXPECT_FALSE(t.longest_match(tags, 0).has_value());
}

TEST(Trie, PrefixSharing) {
  Grammar g;
  g.rules[R("NN")];
  g.rules[R("NN NN")];
  const RuleTrie t = compile_trie(g);
  EXPECT_EQ(t.node_count(), 3u);  // root -NN-> a -NN-> b
  EXPECT_EQ(t.terminal_count(), 2u);
  std::vector<std::string> one{"NN"}, two{"NN", "NN"}, three{"NN", "NN", "NN"};
  EXPECT_TRUE(t.contains(one));
  EXPECT_TRUE(t.contains(two));
  EXPECT_FALSE(t.contains(three));
  EXPECT_EQ(t.longest_match(three, 0)->length, 2u);
  EXPECT_EQ(t.max_rule_length(), 2u);
}

TEST(Trie, LargeGrammarScale) {
  testing::Rng rng(4500);
  const auto alpha = testing::alphabet(14);
  Grammar g;
  while (g.size() < 4500) g.rules[Rule{testing::random_tags(rng, alpha, 1, 6)}].frequency = 1;
  const RuleTrie t = compile_trie(g);
  EXPECT_EQ(t.terminal_count(), 4500u);
  EXPECT_EQ(t.rule_count(), 4500u);
  auto paths = t.enumerate_paths();
  std::sort(paths.begin(), paths.end());
  EXPECT_EQ(paths, testing::rules_of(g));
}

TEST(TrieProperty, MembershipAgreesWithGrammar) {
  testing::Rng rng(10000);
  const auto alpha = testing::alphabet(6);
  const Grammar g = testing::random_grammar(rng, alpha, 200, 5);
  const RuleTrie t = compile_trie(g);
  auto paths = t.enumerate_paths();
  std::sort(paths.begin(), paths.end());
  EXPECT_EQ(paths, testing::rules_of(g));
  for (int i = 0; i < 10000; ++i) {
    const auto tags = testing::random_tags(rng, alpha, 1, 5);
    ASSERT_EQ(t.contains(tags), g.contains(Rule{tags}));
  }
}

TEST(GrammarFile, RuleLineFormat) {
  std::istringstream in("# comment\nDT JJ NN\tfreq=3\tbenefit=7\n\nNN\n");
  const Grammar g = load_grammar(in);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.rules.at(R("DT JJ NN")), (RuleStats{3, 7}));
  EXPECT_EQ(g.rules.at(R("NN")), (RuleStats{0, std::nullopt}));
}

TEST(GrammarFile, RoundTrip) {
  for (const Grammar& g : {Grammar{}, extract_grammar(testing::example_sentence())}) {
    Grammar scored = g;
    long b = -2;
    for (auto& [r, s] : scored.rules) s.benefit = b++;
    for (const Grammar* candidate : {&g, static_cast<const Grammar*>(&scored)}) {
      std::stringstream io;
      save_grammar(*candidate, io);
      EXPECT_EQ(load_grammar(io), *candidate);
    }
  }
}

TEST(GrammarFile, MalformedLinesReportLineNumber) {
  auto load = [](const std::string& text) {
    std::istringstream in(text);
    return load_grammar(in, "g");
  };
  try {
    load("NN\nDT NN\tfreq=x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(load("NN\tbogus=1\n"), ParseError);
  EXPECT_THROW(load("NN\nNN\n"), ParseError);
  EXPECT_THROW(load("\tfreq=1\n"), ParseError);
  EXPECT_THROW(load("NN\tbenefit=1.5\n"), ParseError);
}

}  // namespace
}  // namespace bnp
