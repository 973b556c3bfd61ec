#pragma once

// Labeled precision/recall, and per-rule benefit B_r = C_r - E_r with
// first-toucher error attribution.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bnp/bracketer.hpp"
#include "bnp/corpus.hpp"
#include "bnp/grammar.hpp"

namespace bnp {

struct EvalReport {
  std::size_t proposed = 0;
  std::size_t correct = 0;
  std::size_t reference = 0;

  // 0 when the denominator is 0.
  double precision() const;
  double recall() const;

  EvalReport& operator+=(const EvalReport& other);
  bool operator==(const EvalReport&) const = default;
};

// `proposed=N correct=N reference=N P=xx.x R=xx.x`
std::string to_string(const EvalReport& report);
std::ostream& operator<<(std::ostream& out, const EvalReport& report);

// Exact span matches per sentence. Throws AlignmentError when the corpora
// differ in sentence count or in the words of any sentence.
EvalReport evaluate(const Corpus& proposed, const Corpus& reference);
EvalReport evaluate_sentence(std::span<const Span> proposed, std::span<const Span> reference);

// What one proposed span contributes to the benefit table.
enum class Attribution {
  correct,       // exact match: C_r += 1
  charged,       // responsible error: E_r += 1
  unattributed,  // error on reference NPs another span touched first
};

struct ScoringOptions {
  // Charge a false positive that overlaps no reference NP to its own rule.
  bool charge_unoverlapped_errors = true;
};

// One entry per proposed span, in order. Proposed spans must be sorted and
// disjoint; reference spans sorted and disjoint.
std::vector<Attribution> attribute(std::span<const Span> proposed,
                                   std::span<const Span> reference,
                                   const ScoringOptions& options = {});

struct RuleScore {
  std::size_t correct = 0;
  std::size_t errors = 0;

  long benefit() const { return static_cast<long>(correct) - static_cast<long>(errors); }
  bool operator==(const RuleScore&) const = default;
};

struct BenefitTable {
  std::map<Rule, RuleScore> scores;  // every rule in the trie, scored or not
  std::size_t unattributed = 0;

  long benefit(const Rule& rule) const;
  std::size_t total_correct() const;
};

BenefitTable score_rules(const Corpus& pruning, const RuleTrie& trie,
                         const ScoringOptions& options = {}, std::size_t jobs = 1);

// Benefit table plus the precision/recall of the same bracketing pass.
struct ScoredPass {
  BenefitTable table;
  EvalReport report;
};

ScoredPass score_and_evaluate(const Corpus& pruning, const RuleTrie& trie,
                              const ScoringOptions& options = {}, std::size_t jobs = 1);

}  // namespace bnp
