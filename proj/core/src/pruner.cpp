#include "bnp/pruner.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <tuple>

namespace bnp {

namespace {

struct Snapshot {
  Grammar grammar;
  ScoredPass pass;
};

Snapshot evaluate_grammar(Grammar grammar, const Corpus& pruning, const ScoringOptions& scoring,
                          std::size_t jobs) {
  auto pass = score_and_evaluate(pruning, compile_trie(grammar), scoring, jobs);
  return {std::move(grammar), std::move(pass)};
}

PruneStep make_step(std::size_t iteration, std::size_t discarded, const Snapshot& snap) {
  return {iteration, discarded, snap.grammar.size(), snap.pass.report.precision(),
          snap.pass.report.recall()};
}

Grammar with_benefits(Grammar grammar, const BenefitTable& table) {
  for (auto& [rule, stats] : grammar.rules) stats.benefit = table.benefit(rule);
  return grammar;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

void write_trace_csv(const PruneTrace& trace, std::ostream& out) {
  out << "iter,discarded,remaining,precision,recall\n";
  for (const auto& s : trace.steps) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f,%.6f", s.precision, s.recall);
    out << s.iteration << ',' << s.discarded << ',' << s.remaining << ',' << buf << '\n';
  }
}

PruneResult prune_threshold(const Grammar& grammar, const Corpus& pruning,
                            const ThresholdOptions& options) {
  PruneResult result;
  Snapshot current = evaluate_grammar(grammar, pruning, options.scoring, options.jobs);
  result.trace.steps.push_back(make_step(0, 0, current));

  for (std::size_t iteration = 1;; ++iteration) {
    const auto& table = current.pass.table;
    Grammar kept = filter_rules(current.grammar, [&](const Rule& r) {
      return table.benefit(r) >= options.threshold;
    });
    const std::size_t discarded = current.grammar.size() - kept.size();
    if (discarded == 0) break;
    current = evaluate_grammar(std::move(kept), pruning, options.scoring, options.jobs);
    result.trace.steps.push_back(make_step(iteration, discarded, current));
  }

  result.grammar = with_benefits(std::move(current.grammar), current.pass.table);
  result.selected = result.trace.steps.size() - 1;
  return result;
}

std::vector<Rule> worst_rules(const Grammar& grammar, const BenefitTable& table,
                              std::size_t batch) {
  struct Ranked {
    long benefit;
    std::size_t frequency;
    const Rule* rule;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(grammar.size());
  for (const auto& [rule, stats] : grammar.rules)
    ranked.push_back({table.benefit(rule), stats.frequency, &rule});
  const std::size_t n = std::min(batch, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n), ranked.end(),
                    [](const Ranked& a, const Ranked& b) {
                      return std::tie(a.benefit, a.frequency, *a.rule) <
                             std::tie(b.benefit, b.frequency, *b.rule);
                    });
  std::vector<Rule> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(*ranked[i].rule);
  return out;
}

PruneResult prune_incremental(const Grammar& grammar, const Corpus& pruning,
                              const IncrementalOptions& options) {
  if (options.batch == 0) throw std::invalid_argument("incremental batch size must be >= 1");
  PruneResult result;
  Snapshot current = evaluate_grammar(grammar, pruning, options.scoring, options.jobs);
  result.trace.steps.push_back(make_step(0, 0, current));

  Snapshot best = current;
  std::size_t best_index = 0;
  std::size_t below_best = 0;

  for (std::size_t iteration = 1; !current.grammar.empty(); ++iteration) {
    const auto doomed = worst_rules(current.grammar, current.pass.table, options.batch);
    Grammar kept = current.grammar;
    for (const auto& r : doomed) kept.rules.erase(r);
    current = evaluate_grammar(std::move(kept), pruning, options.scoring, options.jobs);
    result.trace.steps.push_back(make_step(iteration, doomed.size(), current));

    const double p = current.pass.report.precision();
    const double best_p = best.pass.report.precision();
    if (p > best_p) {
      best = current;
      best_index = result.trace.steps.size() - 1;
      below_best = 0;
    } else if (p < best_p) {
      if (++below_best > options.patience) break;
    }
  }

  result.grammar = with_benefits(std::move(best.grammar), best.pass.table);
  result.selected = best_index;
  return result;
}

TagClass parse_tag_class(std::string_view name) {
  const std::string n = lower(name);
  if (n == "noun") return TagClass::noun;
  if (n == "pronoun") return TagClass::pronoun;
  if (n == "verb") return TagClass::verb;
  if (n == "adverb") return TagClass::adverb;
  if (n == "adjective") return TagClass::adjective;
  if (n == "preposition") return TagClass::preposition;
  if (n == "wh") return TagClass::wh;
  if (n == "punctuation-period" || n == "period") return TagClass::period;
  if (n == "punctuation-colon" || n == "colon") return TagClass::colon;
  if (n == "punctuation-comma" || n == "comma") return TagClass::comma;
  if (n == "quote") return TagClass::quote;
  if (n == "other") return TagClass::other;
  throw std::invalid_argument("unknown tag class '" + std::string(name) + "'");
}

std::string_view tag_class_name(TagClass c) {
  switch (c) {
    case TagClass::noun: return "noun";
    case TagClass::pronoun: return "pronoun";
    case TagClass::verb: return "verb";
    case TagClass::adverb: return "adverb";
    case TagClass::adjective: return "adjective";
    case TagClass::preposition: return "preposition";
    case TagClass::wh: return "WH";
    case TagClass::period: return "punctuation-period";
    case TagClass::colon: return "punctuation-colon";
    case TagClass::comma: return "punctuation-comma";
    case TagClass::quote: return "quote";
    case TagClass::other: return "other";
  }
  return "other";
}

TagsetMap TagsetMap::penn() {
  TagsetMap m;
  for (auto t : {"NN", "NNS", "NNP", "NNPS"}) m.set(t, TagClass::noun);
  for (auto t : {"PRP", "PRP$"}) m.set(t, TagClass::pronoun);
  for (auto t : {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "MD"}) m.set(t, TagClass::verb);
  for (auto t : {"RB", "RBR", "RBS"}) m.set(t, TagClass::adverb);
  for (auto t : {"JJ", "JJR", "JJS"}) m.set(t, TagClass::adjective);
  for (auto t : {"IN", "TO"}) m.set(t, TagClass::preposition);
  for (auto t : {"WDT", "WP", "WP$", "WRB"}) m.set(t, TagClass::wh);
  m.set(".", TagClass::period);
  m.set(":", TagClass::colon);
  m.set(",", TagClass::comma);
  for (auto t : {"``", "''"}) m.set(t, TagClass::quote);
  for (auto t : {"DT", "PDT", "CD", "CC", "EX", "FW", "LS", "POS", "RP", "SYM", "UH", "$",
                 "#", "-LRB-", "-RRB-", "-NONE-"})
    m.set(t, TagClass::other);
  return m;
}

TagsetMap TagsetMap::load(std::istream& in, const std::string& source) {
  TagsetMap m;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // '#' is itself a Penn tag, so a comment is a '#' line without a tab.
    if (line.empty() || (line.front() == '#' && line.find('\t') == std::string::npos)) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw ParseError(source, line_no, 0, "expected TAG<TAB>class");
    try {
      m.set(line.substr(0, tab), parse_tag_class(line.substr(tab + 1)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, line_no, tab + 2, e.what());
    }
  }
  return m;
}

TagsetMap TagsetMap::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return load(in, path);
}

TagClass TagsetMap::classify(const std::string& tag) const {
  auto it = classes_.find(tag);
  if (it == classes_.end()) throw UnclassifiedTagError(tag);
  return it->second;
}

void TagsetMap::save(std::ostream& out) const {
  std::vector<std::pair<std::string, TagClass>> sorted(classes_.begin(), classes_.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [tag, c] : sorted) out << tag << '\t' << tag_class_name(c) << '\n';
}

RuleClassFilter parse_rule_class_filter(std::string_view name) {
  for (auto f : all_rule_class_filters())
    if (filter_name(f) == name) return f;
  throw std::invalid_argument("unknown rule class filter '" + std::string(name) + "'");
}

std::string_view filter_name(RuleClassFilter f) {
  switch (f) {
    case RuleClassFilter::preposition_period_colon: return "contains-preposition-period-or-colon";
    case RuleClassFilter::wh_tag: return "contains-wh-tag";
    case RuleClassFilter::verb_adverb_edge: return "begins-or-ends-with-verb-or-adverb";
    case RuleClassFilter::pronoun_with_others: return "pronoun-with-other-tags";
    case RuleClassFilter::misplaced_comma_quote: return "misplaced-comma-or-quote";
    case RuleClassFilter::ends_with_adjective: return "ends-with-adjective";
  }
  return "";
}

std::set<RuleClassFilter> all_rule_class_filters() {
  return {RuleClassFilter::preposition_period_colon, RuleClassFilter::wh_tag,
          RuleClassFilter::verb_adverb_edge,         RuleClassFilter::pronoun_with_others,
          RuleClassFilter::misplaced_comma_quote,    RuleClassFilter::ends_with_adjective};
}

bool matches(RuleClassFilter filter, const Rule& rule, const TagsetMap& tagset) {
  std::vector<TagClass> classes;
  classes.reserve(rule.size());
  for (const auto& t : rule.tags) classes.push_back(tagset.classify(t));
  if (classes.empty()) return false;

  auto any = [&](auto pred) { return std::any_of(classes.begin(), classes.end(), pred); };
  auto verbish = [](TagClass c) { return c == TagClass::verb || c == TagClass::adverb; };

  switch (filter) {
    case RuleClassFilter::preposition_period_colon:
      return any([](TagClass c) {
        return c == TagClass::preposition || c == TagClass::period || c == TagClass::colon;
      });
    case RuleClassFilter::wh_tag:
      return any([](TagClass c) { return c == TagClass::wh; });
    case RuleClassFilter::verb_adverb_edge:
      return verbish(classes.front()) || verbish(classes.back());
    case RuleClassFilter::pronoun_with_others:
      return any([](TagClass c) { return c == TagClass::pronoun; }) &&
             any([](TagClass c) { return c != TagClass::pronoun; });
    case RuleClassFilter::misplaced_comma_quote: {
      auto edge = [](TagClass c) { return c == TagClass::comma || c == TagClass::quote; };
      if (edge(classes.front()) || edge(classes.back())) return true;
      return std::count(classes.begin(), classes.end(), TagClass::quote) % 2 != 0;
    }
    case RuleClassFilter::ends_with_adjective:
      return classes.back() == TagClass::adjective;
  }
  return false;
}

Grammar prune_by_class(const Grammar& grammar, const std::set<RuleClassFilter>& filters,
                       const TagsetMap& tagset) {
  for (const auto& [rule, stats] : grammar.rules)
    for (const auto& t : rule.tags) tagset.classify(t);
  return filter_rules(grammar, [&](const Rule& r) {
    return std::none_of(filters.begin(), filters.end(),
                        [&](RuleClassFilter f) { return matches(f, r, tagset); });
  });
}

}  // namespace bnp
