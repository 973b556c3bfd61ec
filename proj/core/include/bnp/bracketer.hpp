#pragma once

// Greedy left-to-right longest-match base NP bracketing.
//
// At scan position i the longest rule equal to tags[i, i+L) is applied, the
// span [i, i+L) is recorded and the scan resumes at i+L. With no match the
// scan advances by one token. Words are never consulted.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bnp/corpus.hpp"
#include "bnp/grammar.hpp"

namespace bnp {

struct ProposedNp {
  Span span;
  RuleId rule;  // index into the trie the output was produced with

  bool operator==(const ProposedNp&) const = default;
};

struct BracketedOutput {
  std::vector<ProposedNp> nps;  // sorted by start, disjoint

  std::vector<Span> spans() const;
};

struct BracketStats {
  std::size_t trie_visits = 0;   // trie edges followed
  std::size_t scan_steps = 0;    // loop iterations of the scan
};

BracketedOutput bracket(std::span<const std::string> tags, const RuleTrie& trie,
                        BracketStats* stats = nullptr);

// Replaces every sentence's nps with the proposed spans. Tokens are kept.
Corpus bracket_corpus(const Corpus& corpus, const RuleTrie& trie, std::size_t jobs = 1);

}  // namespace bnp
