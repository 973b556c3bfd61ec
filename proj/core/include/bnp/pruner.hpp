#pragma once

// Grammar improvement: evaluate the rule set on a held-out pruning corpus,
// rank rules by benefit, discard the worst, repeat.

#include <cstddef>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bnp/corpus.hpp"
#include "bnp/grammar.hpp"
#include "bnp/scorer.hpp"

namespace bnp {

// One evaluate-rank-discard pass. Step 0 is the evaluation of the input
// grammar (nothing discarded); step k>0 discarded `discarded` rules and
// reports precision/recall of the grammar left after the discard.
struct PruneStep {
  std::size_t iteration = 0;
  std::size_t discarded = 0;
  std::size_t remaining = 0;
  double precision = 0.0;
  double recall = 0.0;

  bool operator==(const PruneStep&) const = default;
};

struct PruneTrace {
  std::vector<PruneStep> steps;
};

// CSV with header `iter,discarded,remaining,precision,recall`.
void write_trace_csv(const PruneTrace& trace, std::ostream& out);

struct PruneResult {
  Grammar grammar;       // benefit fields hold this grammar's final scores
  PruneTrace trace;
  std::size_t selected = 0;  // index into trace.steps describing `grammar`
};

struct ThresholdOptions {
  long threshold = 1;
  ScoringOptions scoring;
  std::size_t jobs = 1;
};

// Discards every rule with benefit < threshold until none remain.
PruneResult prune_threshold(const Grammar& grammar, const Corpus& pruning,
                            const ThresholdOptions& options = {});

struct IncrementalOptions {
  std::size_t batch = 10;
  // Consecutive below-best snapshots tolerated before stopping.
  std::size_t patience = 0;
  ScoringOptions scoring;
  std::size_t jobs = 1;
};

// Discards the `batch` worst rules per pass (benefit ascending, then
// frequency ascending, then tag sequence) until pruning-corpus precision
// drops below the best seen; returns the earliest best-precision snapshot.
PruneResult prune_incremental(const Grammar& grammar, const Corpus& pruning,
                              const IncrementalOptions& options = {});

// The `batch` rules incremental pruning would discard next.
std::vector<Rule> worst_rules(const Grammar& grammar, const BenefitTable& table,
                              std::size_t batch);

enum class TagClass {
  noun,
  pronoun,
  verb,
  adverb,
  adjective,
  preposition,
  wh,
  period,
  colon,
  comma,
  quote,
  other,
};

TagClass parse_tag_class(std::string_view name);
std::string_view tag_class_name(TagClass c);

class UnclassifiedTagError : public std::invalid_argument {
 public:
  explicit UnclassifiedTagError(const std::string& tag)
      : std::invalid_argument("tag '" + tag + "' has no classification"), tag_(tag) {}
  const std::string& tag() const { return tag_; }

 private:
  std::string tag_;
};

class TagsetMap {
 public:
  TagsetMap() = default;

  // Penn Treebank tagset.
  static TagsetMap penn();
  // Lines of `TAG<TAB>class`. A line starting with `#` and holding no tab is
  // a comment; `#<TAB>class` classifies the `#` tag.
  static TagsetMap load(std::istream& in, const std::string& source = "<stream>");
  static TagsetMap load_file(const std::string& path);

  void set(std::string tag, TagClass c) { classes_[std::move(tag)] = c; }
  bool contains(const std::string& tag) const { return classes_.contains(tag); }
  TagClass classify(const std::string& tag) const;  // throws UnclassifiedTagError
  void save(std::ostream& out) const;

 private:
  std::unordered_map<std::string, TagClass> classes_;
};

enum class RuleClassFilter {
  preposition_period_colon,
  wh_tag,
  verb_adverb_edge,
  pronoun_with_others,
  misplaced_comma_quote,
  ends_with_adjective,
};

RuleClassFilter parse_rule_class_filter(std::string_view name);
std::string_view filter_name(RuleClassFilter f);
std::set<RuleClassFilter> all_rule_class_filters();

bool matches(RuleClassFilter filter, const Rule& rule, const TagsetMap& tagset);

// Removes every rule matched by at least one filter. Every tag of every
// rule must be classified, whether or not a filter inspects it.
Grammar prune_by_class(const Grammar& grammar, const std::set<RuleClassFilter>& filters,
                       const TagsetMap& tagset);

}  // namespace bnp
