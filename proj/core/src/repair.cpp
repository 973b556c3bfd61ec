#include "bnp/repair.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "bnp/parallel.hpp"

namespace bnp {

namespace {

std::string lower(const std::string& s) {
  std::string out = s;
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool in_lexicon(const Lexicon& lex, const Token& token) {
  return lex.contains(lower(token.word));
}

}  // namespace

Lexicon default_month_words() {
  return {"january", "february", "march",     "april",   "may",      "june",
          "july",    "august",   "september", "october", "november", "december",
          "jan.",    "feb.",     "mar.",      "apr.",    "jun.",     "jul.",
          "aug.",    "sep.",     "sept.",     "oct.",    "nov.",     "dec."};
}

Lexicon default_time_words() {
  Lexicon words = default_month_words();
  for (auto w : {"monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday",
                 "yesterday", "today", "tomorrow", "week", "month", "quarter", "year",
                 "morning", "afternoon", "night"})
    words.insert(w);
  return words;
}

Lexicon default_quantifier_words() {
  return {"some", "many", "most", "all", "several", "few",
          "much", "none", "each", "any", "both"};
}

RepairConfig RepairConfig::defaults() {
  RepairConfig c;
  c.time_words = default_time_words();
  c.month_words = default_month_words();
  c.quantifier_words = default_quantifier_words();
  return c;
}

void RepairConfig::validate() const {
  if (merge_consecutive && time_words.empty())
    throw std::invalid_argument("merge-consecutive needs a nonempty time-word lexicon");
  if (date_merge && month_words.empty())
    throw std::invalid_argument("date-merge needs a nonempty month lexicon");
  if (quantifier_split && quantifier_words.empty())
    throw std::invalid_argument("quantifier-of-split needs a nonempty quantifier lexicon");
}

Lexicon load_lexicon(std::istream& in) {
  Lexicon lex;
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    lex.insert(lower(line.substr(b, e - b + 1)));
  }
  return lex;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return load_lexicon(in);
}

bool might_be_time_expression(const Sentence& sentence, const Span& span,
                              const RepairConfig& config) {
  const auto& toks = sentence.tokens;
  auto is_time = [&](std::size_t i) { return in_lexicon(config.time_words, toks[i]); };
  for (std::size_t i = span.start; i < span.end; ++i) {
    if (is_time(i)) return true;
    if (toks[i].tag == "CD" &&
        ((i > 0 && is_time(i - 1)) || (i + 1 < toks.size() && is_time(i + 1))))
      return true;
  }
  return false;
}

std::vector<Span> merge_consecutive(const Sentence& sentence, const RepairConfig& config) {
  std::vector<Span> out;
  for (const auto& span : sentence.nps) {
    // A merged span can absorb further adjacent spans within the same pass.
    if (!out.empty() && out.back().end == span.start &&
        !might_be_time_expression(sentence, out.back(), config) &&
        !might_be_time_expression(sentence, span, config)) {
      out.back().end = span.end;
    } else {
      out.push_back(span);
    }
  }
  return out;
}

std::vector<Span> merge_dates(const Sentence& sentence, const RepairConfig& config) {
  const auto& toks = sentence.tokens;
  const auto& nps = sentence.nps;
  std::vector<Span> out;
  for (std::size_t k = 0; k < nps.size(); ++k) {
    const Span& first = nps[k];
    bool head = false;
    if (in_lexicon(config.month_words, toks[first.start])) {
      head = first.size() == 1 || (first.size() == 2 && toks[first.start + 1].tag == "CD");
    }
    if (head && k + 1 < nps.size()) {
      const Span& second = nps[k + 1];
      const std::size_t comma = first.end;
      if (comma < toks.size() && toks[comma].word == "," && second.start == comma + 1 &&
          second.size() == 1 && toks[second.start].tag == "CD") {
        out.push_back({first.start, second.end});
        ++k;
        continue;
      }
    }
    out.push_back(first);
  }
  return out;
}

std::vector<Span> split_quantifiers(const Sentence& sentence, const RepairConfig& config) {
  const auto& toks = sentence.tokens;
  const std::size_t n = toks.size();
  std::vector<bool> covered(n, false), starts(n, false);
  for (const auto& span : sentence.nps) {
    starts[span.start] = true;
    for (std::size_t i = span.start; i < span.end; ++i) covered[i] = true;
  }
  // Right to left, so `q of q of [NP]` chains resolve in a single pass.
  std::vector<Span> added;
  for (std::size_t i = n < 3 ? 0 : n - 2; i-- > 0;) {
    if (covered[i] || covered[i + 1] || !starts[i + 2]) continue;
    if (!in_lexicon(config.quantifier_words, toks[i])) continue;
    if (lower(toks[i + 1].word) != "of") continue;
    // A new span directly after an existing one would be merged by a later
    // merge-consecutive pass; leave those alone.
    if (i > 0 && covered[i - 1]) continue;
    covered[i] = starts[i] = true;
    added.push_back({i, i + 1});
  }
  std::vector<Span> out = sentence.nps;
  out.insert(out.end(), added.begin(), added.end());
  std::sort(out.begin(), out.end());
  return out;
}

Sentence repair(const Sentence& sentence, const RepairConfig& config) {
  Sentence out = sentence;
  if (config.merge_consecutive) out.nps = merge_consecutive(out, config);
  if (config.date_merge) out.nps = merge_dates(out, config);
  if (config.quantifier_split) out.nps = split_quantifiers(out, config);
  return out;
}

Corpus repair(const Corpus& corpus, const RepairConfig& config, std::size_t jobs) {
  config.validate();
  Corpus out;
  out.source = corpus.source;
  out.sentences.resize(corpus.sentences.size());
  parallel_for(corpus.sentences.size(), jobs,
               [&](std::size_t s) { out.sentences[s] = repair(corpus.sentences[s], config); });
  return out;
}

}  // namespace bnp
