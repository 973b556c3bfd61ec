#include "bnp/scorer.hpp"

#include <cstdio>
#include <ostream>

#include "bnp/parallel.hpp"

namespace bnp {

double EvalReport::precision() const {
  return proposed == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(proposed);
}

double EvalReport::recall() const {
  return reference == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(reference);
}

EvalReport& EvalReport::operator+=(const EvalReport& other) {
  proposed += other.proposed;
  correct += other.correct;
  reference += other.reference;
  return *this;
}

std::string to_string(const EvalReport& report) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "proposed=%zu correct=%zu reference=%zu P=%.1f R=%.1f",
                report.proposed, report.correct, report.reference,
                100.0 * report.precision(), 100.0 * report.recall());
  return buf;
}

std::ostream& operator<<(std::ostream& out, const EvalReport& report) {
  return out << to_string(report);
}

EvalReport evaluate_sentence(std::span<const Span> proposed, std::span<const Span> reference) {
  EvalReport report{proposed.size(), 0, reference.size()};
  // Both lists are sorted by start and disjoint, so a merge walk suffices.
  std::size_t r = 0;
  for (const auto& p : proposed) {
    while (r < reference.size() && reference[r].start < p.start) ++r;
    if (r < reference.size() && reference[r] == p) ++report.correct;
  }
  return report;
}

EvalReport evaluate(const Corpus& proposed, const Corpus& reference) {
  if (proposed.sentences.size() != reference.sentences.size())
    throw AlignmentError("sentence count differs: " + std::to_string(proposed.sentences.size()) +
                         " proposed vs " + std::to_string(reference.sentences.size()) +
                         " reference");
  EvalReport total;
  for (std::size_t s = 0; s < proposed.sentences.size(); ++s) {
    const auto& p = proposed.sentences[s];
    const auto& r = reference.sentences[s];
    bool aligned = p.tokens.size() == r.tokens.size();
    for (std::size_t i = 0; aligned && i < p.tokens.size(); ++i)
      aligned = p.tokens[i].word == r.tokens[i].word;
    if (!aligned)
      throw AlignmentError("sentence " + std::to_string(s + 1) + " tokens differ");
    total += evaluate_sentence(p.nps, r.nps);
  }
  return total;
}

std::vector<Attribution> attribute(std::span<const Span> proposed,
                                   std::span<const Span> reference,
                                   const ScoringOptions& options) {
  std::vector<Attribution> out;
  out.reserve(proposed.size());
  std::vector<bool> touched(reference.size(), false);
  std::size_t first = 0;  // first reference span that may overlap the current proposal
  for (const auto& p : proposed) {
    while (first < reference.size() && reference[first].end <= p.start) ++first;
    bool exact = false;
    bool overlaps_any = false;
    bool overlaps_untouched = false;
    for (std::size_t r = first; r < reference.size() && reference[r].start < p.end; ++r) {
      overlaps_any = true;
      if (reference[r] == p) exact = true;
      if (!touched[r]) overlaps_untouched = true;
      touched[r] = true;
    }
    if (exact)
      out.push_back(Attribution::correct);
    else if (overlaps_any ? overlaps_untouched : options.charge_unoverlapped_errors)
      out.push_back(Attribution::charged);
    else
      out.push_back(Attribution::unattributed);
  }
  return out;
}

long BenefitTable::benefit(const Rule& rule) const {
  auto it = scores.find(rule);
  return it == scores.end() ? 0 : it->second.benefit();
}

std::size_t BenefitTable::total_correct() const {
  std::size_t n = 0;
  for (const auto& [rule, score] : scores) n += score.correct;
  return n;
}

ScoredPass score_and_evaluate(const Corpus& pruning, const RuleTrie& trie,
                              const ScoringOptions& options, std::size_t jobs) {
  struct Partial {
    std::vector<RuleScore> by_rule;
    std::size_t unattributed = 0;
    EvalReport report;
  };
  const std::size_t n = pruning.sentences.size();
  const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, n));
  std::vector<Partial> partials(workers, Partial{std::vector<RuleScore>(trie.rule_count()), 0, {}});

  // Each worker owns one partial; per-sentence results are commutative sums.
  const std::size_t block = n == 0 ? 0 : (n + workers - 1) / workers;
  parallel_for(workers, workers, [&](std::size_t w) {
    auto& part = partials[w];
    const std::size_t end = std::min(n, (w + 1) * block);
    for (std::size_t s = w * block; s < end; ++s) {
      const auto& sentence = pruning.sentences[s];
      const auto output = bracket(sentence.tags(), trie);
      const auto spans = output.spans();
      const auto attributions = attribute(spans, sentence.nps, options);
      for (std::size_t i = 0; i < attributions.size(); ++i) {
        auto& score = part.by_rule[output.nps[i].rule];
        switch (attributions[i]) {
          case Attribution::correct: ++score.correct; break;
          case Attribution::charged: ++score.errors; break;
          case Attribution::unattributed: ++part.unattributed; break;
        }
      }
      part.report += evaluate_sentence(spans, sentence.nps);
    }
  });

  ScoredPass result;
  for (RuleId id = 0; id < trie.rule_count(); ++id) {
    RuleScore total;
    for (const auto& part : partials) {
      total.correct += part.by_rule[id].correct;
      total.errors += part.by_rule[id].errors;
    }
    result.table.scores.emplace(trie.rule(id), total);
  }
  for (const auto& part : partials) {
    result.table.unattributed += part.unattributed;
    result.report += part.report;
  }
  return result;
}

BenefitTable score_rules(const Corpus& pruning, const RuleTrie& trie,
                         const ScoringOptions& options, std::size_t jobs) {
  return score_and_evaluate(pruning, trie, options, jobs).table;
}

}  // namespace bnp
