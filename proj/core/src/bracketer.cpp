#include "bnp/bracketer.hpp"

#include "bnp/parallel.hpp"

namespace bnp {

std::vector<Span> BracketedOutput::spans() const {
  std::vector<Span> out;
  out.reserve(nps.size());
  for (const auto& np : nps) out.push_back(np.span);
  return out;
}

BracketedOutput bracket(std::span<const std::string> tags, const RuleTrie& trie,
                        BracketStats* stats) {
  BracketedOutput out;
  std::size_t* visits = stats ? &stats->trie_visits : nullptr;
  std::size_t i = 0;
  while (i < tags.size()) {
    if (stats) ++stats->scan_steps;
    if (auto match = trie.longest_match(tags, i, visits)) {
      out.nps.push_back({Span{i, i + match->length}, match->rule});
      i += match->length;
    } else {
      ++i;
    }
  }
  return out;
}

Corpus bracket_corpus(const Corpus& corpus, const RuleTrie& trie, std::size_t jobs) {
  Corpus out;
  out.source = corpus.source;
  out.sentences.resize(corpus.sentences.size());
  parallel_for(corpus.sentences.size(), jobs, [&](std::size_t s) {
    const auto& in = corpus.sentences[s];
    auto& sentence = out.sentences[s];
    sentence.tokens = in.tokens;
    sentence.nps = bracket(in.tags(), trie).spans();
  });
  return out;
}

}  // namespace bnp
