#include "bnp/synthetic.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

namespace bnp {

namespace {

using Tags = std::vector<std::string>;

struct Weighted {
  Tags tags;
  double weight;
};

const std::vector<Weighted>& np_templates() {
  static const std::vector<Weighted> t = {
      {{"DT", "NN"}, 10},        {{"DT", "JJ", "NN"}, 6}, {{"NNP", "NNP"}, 5},
      {{"NNP"}, 5},              {{"PRP"}, 6},            {{"NNS"}, 5},
      {{"JJ", "NNS"}, 4},        {{"DT", "NN", "NN"}, 3}, {{"CD", "NNS"}, 3},
      {{"NN", "NNS"}, 3},        {{"DT", "JJ", "JJ", "NN"}, 1},
      {{"PRP$", "NN"}, 3},       {{"NN"}, 4},             {{"DT", "NNS"}, 4},
      {{"PRP$", "JJ", "NNS"}, 1}, {{"NNP", "NNP", "NNP"}, 1}, {{"DT", "JJ", "NNS"}, 2},
  };
  return t;
}

const std::vector<Weighted>& fillers() {
  static const std::vector<Weighted> t = {
      {{"VBZ"}, 6}, {{"VBD"}, 6}, {{"IN"}, 8},       {{"VBD", "RB"}, 2}, {{"MD", "VB"}, 2},
      {{"TO", "VB"}, 2}, {{"CC"}, 2}, {{","}, 2},    {{"RB"}, 1},        {{"VBD", "IN"}, 2},
      {{"VBN", "IN"}, 1}, {{"VBZ", "VBN"}, 1},
  };
  return t;
}

constexpr std::array<const char*, 36> kPennTags = {
    "CC",  "CD",  "DT",  "EX",  "FW",  "IN",  "JJ",   "JJR", "JJS", "MD",  "NN",  "NNS",
    "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB",  "RBR", "RBS", "RP",  "TO",  "UH",
    "VB",  "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT",  "WP",  "WRB", ",",   ":",   "."};

template <typename Rng>
const Tags& pick(const std::vector<Weighted>& table, Rng& rng) {
  std::vector<double> w;
  w.reserve(table.size());
  for (const auto& e : table) w.push_back(e.weight);
  std::discrete_distribution<std::size_t> dist(w.begin(), w.end());
  return table[dist(rng)].tags;
}

std::string word_for(const std::string& tag, std::mt19937_64& rng) {
  std::string base;
  for (char c : tag) {
    if (c >= 'A' && c <= 'Z')
      base += static_cast<char>(c - 'A' + 'a');
    else if (c == '$')
      base += 's';
    else if (c != ',' && c != '.' && c != ':')
      base += c;
  }
  if (base.empty()) return tag;  // punctuation stands for itself
  return base + std::to_string(std::uniform_int_distribution<int>(0, 49)(rng));
}

}  // namespace

Corpus generate_corpus(const SyntheticOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution tag_noise(options.tag_noise);
  std::bernoulli_distribution bracket_noise(options.bracket_noise);
  std::bernoulli_distribution gerund_np(options.gerund_np_rate);
  std::bernoulli_distribution gerund(0.12);
  std::uniform_int_distribution<std::size_t> clause_count(2, 5);
  std::uniform_int_distribution<std::size_t> any_tag(0, kPennTags.size() - 1);

  Corpus corpus;
  corpus.source = "synthetic";
  corpus.sentences.reserve(options.sentences);

  for (std::size_t s = 0; s < options.sentences; ++s) {
    Sentence sentence;
    auto emit = [&](const Tags& tags) {
      for (const auto& tag : tags) sentence.tokens.push_back({word_for(tag, rng), tag});
    };
    auto emit_np = [&](const Tags& tags) {
      const std::size_t start = sentence.tokens.size();
      emit(tags);
      sentence.nps.push_back({start, sentence.tokens.size()});
    };

    const std::size_t clauses = clause_count(rng);
    for (std::size_t c = 0; c < clauses; ++c) {
      if (c > 0) emit(pick(fillers(), rng));
      if (gerund(rng)) {
        // manufacturing/VBG titans/NNS vs boarding/VBG [buses/NNS]
        if (gerund_np(rng)) {
          emit_np({"VBG", "NNS"});
        } else {
          emit({"VBG"});
          emit_np({"NNS"});
        }
      } else {
        emit_np(pick(np_templates(), rng));
      }
    }
    emit({"."});

    // Bracket errors: stretch an NP over the token that follows it.
    for (std::size_t k = 0; k < sentence.nps.size(); ++k) {
      auto& span = sentence.nps[k];
      const bool room = span.end + 1 < sentence.tokens.size() &&
                        (k + 1 == sentence.nps.size() || sentence.nps[k + 1].start > span.end);
      if (room && bracket_noise(rng)) ++span.end;
    }
    for (auto& token : sentence.tokens)
      if (tag_noise(rng)) token.tag = kPennTags[any_tag(rng)];

    corpus.sentences.push_back(std::move(sentence));
  }
  return corpus;
}

}  // namespace bnp
