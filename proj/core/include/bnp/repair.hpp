#pragma once

// Local post-bracketing repairs:
//   merge-consecutive   [A][B] -> [A B] unless either span looks temporal
//   date-merge          [Month] , [CD] and [Month CD] , [CD] -> one span
//   quantifier-of-split quant of [NP] -> [quant] of [NP]
// Applied per sentence in that order, each as a single pass. The quantifier
// split scans right to left so that chains of `quant of` settle at once.

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "bnp/corpus.hpp"

namespace bnp {

using Lexicon = std::set<std::string>;  // lowercase entries

struct RepairConfig {
  bool merge_consecutive = true;
  bool date_merge = true;
  bool quantifier_split = true;
  Lexicon time_words;
  Lexicon month_words;
  Lexicon quantifier_words;

  static RepairConfig defaults();
  // Throws std::invalid_argument if an enabled heuristic has an empty lexicon.
  void validate() const;
};

Lexicon default_time_words();
Lexicon default_month_words();
Lexicon default_quantifier_words();

// One word per line, lowercased on load; blank lines and `#` comments skipped.
Lexicon load_lexicon(std::istream& in);
Lexicon load_lexicon_file(const std::string& path);

// True when the span contains a time word, or a CD token next to one.
bool might_be_time_expression(const Sentence& sentence, const Span& span,
                              const RepairConfig& config);

std::vector<Span> merge_consecutive(const Sentence& sentence, const RepairConfig& config);
std::vector<Span> merge_dates(const Sentence& sentence, const RepairConfig& config);
std::vector<Span> split_quantifiers(const Sentence& sentence, const RepairConfig& config);

Sentence repair(const Sentence& sentence, const RepairConfig& config);
Corpus repair(const Corpus& corpus, const RepairConfig& config, std::size_t jobs = 1);

}  // namespace bnp
