#pragma once

// Random grammars, tag sequences and corpora for property tests.

#include <random>
#include <string>
#include <vector>

#include "bnp/corpus.hpp"
#include "bnp/grammar.hpp"

namespace bnp::testing {

using Rng = std::mt19937_64;

inline std::vector<std::string> alphabet(std::size_t n) {
  static const std::vector<std::string> tags = {"DT", "NN", "NNS", "JJ", "NNP", "VBZ", "IN",
                                                "CD", ",",  "PRP", "RB", "VBG", "CC", "TO"};
  return {tags.begin(), tags.begin() + static_cast<std::ptrdiff_t>(std::min(n, tags.size()))};
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<std::string> random_tags(Rng& rng, const std::vector<std::string>& alpha,
                                            std::size_t min_len, std::size_t max_len) {
  std::vector<std::string> out(uniform(rng, min_len, max_len));
  for (auto& t : out) t = alpha[uniform(rng, 0, alpha.size() - 1)];
  return out;
}

inline Grammar random_grammar(Rng& rng, const std::vector<std::string>& alpha,
                              std::size_t max_rules, std::size_t max_len) {
  Grammar g;
  const std::size_t n = uniform(rng, 0, max_rules);
  for (std::size_t i = 0; i < n; ++i)
    g.rules[Rule{random_tags(rng, alpha, 1, max_len)}].frequency = uniform(rng, 1, 4);
  return g;
}

// Random disjoint sorted spans over n tokens.
inline std::vector<Span> random_spans(Rng& rng, std::size_t n, double density = 0.4) {
  std::vector<Span> out;
  std::bernoulli_distribution start(density);
  std::size_t i = 0;
  while (i < n) {
    if (start(rng)) {
      const std::size_t len = uniform(rng, 1, std::min<std::size_t>(4, n - i));
      out.push_back({i, i + len});
      i += len;
    } else {
      ++i;
    }
  }
  return out;
}

inline std::string random_word(Rng& rng) {
  static const std::string chars = "abcdefghijklmnopqrstuvwxyzAB0123456789/.,'$%-[]";
  std::string w(uniform(rng, 1, 6), 'a');
  for (auto& c : w) c = chars[uniform(rng, 0, chars.size() - 1)];
  if (w == "[" || w == "]") w += "x";
  return w;
}

inline Sentence random_sentence(Rng& rng, const std::vector<std::string>& alpha,
                                std::size_t max_len, bool random_words = false) {
  Sentence s;
  for (const auto& tag : random_tags(rng, alpha, 1, max_len))
    s.tokens.push_back({random_words ? random_word(rng) : "w" + std::to_string(uniform(rng, 0, 99)),
                        tag});
  s.nps = random_spans(rng, s.tokens.size());
  return s;
}

inline Corpus random_corpus(Rng& rng, const std::vector<std::string>& alpha,
                            std::size_t max_sentences, std::size_t max_len,
                            bool random_words = false) {
  Corpus c;
  c.source = "random";
  const std::size_t n = uniform(rng, 0, max_sentences);
  for (std::size_t i = 0; i < n; ++i) c.sentences.push_back(random_sentence(rng, alpha, max_len, random_words));
  return c;
}

// Short sentences over a vocabulary rich in months, time words, quantifiers,
// `of`, commas and numbers, with random brackets.
inline Sentence random_repair_sentence(Rng& rng) {
  static const std::vector<Token> vocab = {
      {"the", "DT"},  {"firm", "NN"},    {"sales", "NNS"}, {"June", "NNP"}, {"May", "NNP"},
      {"5", "CD"},    {"1995", "CD"},    {",", ","},       {"of", "IN"},    {"some", "DT"},
      {"most", "JJS"}, {"Friday", "NNP"}, {"last", "JJ"},  {"year", "NN"},  {"rose", "VBD"},
      {"all", "DT"},  {"in", "IN"},      {"%", "NN"},      {"big", "JJ"},   {"today", "NN"}};
  Sentence s;
  const std::size_t n = uniform(rng, 1, 16);
  for (std::size_t i = 0; i < n; ++i) s.tokens.push_back(vocab[uniform(rng, 0, vocab.size() - 1)]);
  s.nps = random_spans(rng, n, 0.5);
  return s;
}

}  // namespace bnp::testing
