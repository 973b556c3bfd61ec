#pragma once

// Generated base-NP corpora from a small flat template grammar, with
// ambiguous constructions, bracket errors and POS-tag noise mixed in.

#include <cstddef>
#include <cstdint>

#include "bnp/corpus.hpp"

namespace bnp {

struct SyntheticOptions {
  std::size_t sentences = 2000;
  std::uint64_t seed = 1;
  // Probability that any token's tag is replaced by a random Penn tag.
  double tag_noise = 0.05;
  // Probability that an NP annotation is extended over the next token.
  double bracket_noise = 0.03;
  // Probability that a VBG NNS pair is annotated as one NP (otherwise
  // VBG followed by [NNS]).
  double gerund_np_rate = 0.2;
};

Corpus generate_corpus(const SyntheticOptions& options = {});

}  // namespace bnp
