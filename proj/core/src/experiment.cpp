#include "bnp/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "bnp/bracketer.hpp"
#include "bnp/parallel.hpp"

namespace bnp {

std::string_view method_name(PruneMethod m) {
  switch (m) {
    case PruneMethod::none: return "initial";
    case PruneMethod::threshold: return "threshold";
    case PruneMethod::incremental: return "incremental";
    case PruneMethod::classes: return "classes";
  }
  return "initial";
}

PruneMethod parse_method(std::string_view name) {
  if (name == "initial" || name == "none") return PruneMethod::none;
  if (name == "threshold") return PruneMethod::threshold;
  if (name == "incremental") return PruneMethod::incremental;
  if (name == "classes" || name == "human-review") return PruneMethod::classes;
  throw std::invalid_argument("unknown pruning method '" + std::string(name) + "'");
}

std::string PipelineConfig::name() const {
  std::string out(method_name(method));
  if (drop_singletons) out += "-singletons";
  if (repair) out += "+repair";
  return out;
}

PipelineConfig PipelineConfig::parse(std::string_view name) {
  PipelineConfig c;
  if (name.ends_with("+repair")) {
    c.repair = true;
    name.remove_suffix(7);
  }
  if (name.ends_with("-singletons")) {
    c.drop_singletons = true;
    name.remove_suffix(11);
  }
  c.method = parse_method(name);
  return c;
}

std::vector<PipelineConfig> full_config_grid() {
  std::vector<PipelineConfig> grid;
  for (auto m : {PruneMethod::none, PruneMethod::threshold, PruneMethod::incremental,
                 PruneMethod::classes})
    for (bool singletons : {false, true})
      for (bool rep : {false, true}) grid.push_back({m, rep, singletons});
  return grid;
}

FoldPlan FoldPlan::rotate(std::size_t k) {
  if (k < 3) throw std::invalid_argument("cross-validation needs at least 3 folds");
  FoldPlan plan;
  for (std::size_t r = 0; r < k; ++r) {
    FoldRoles roles{r, (r + 1) % k, {}};
    for (std::size_t f = 0; f < k; ++f)
      if (f != roles.test && f != roles.pruning) roles.training.push_back(f);
    plan.runs.push_back(std::move(roles));
  }
  return plan;
}

Grammar build_grammar(const Corpus& training, const Corpus& pruning, const PipelineConfig& config,
                      const ExperimentOptions& options, PruneTrace* trace) {
  Grammar grammar = extract_grammar(training);
  if (config.drop_singletons) grammar = drop_singletons(grammar);
  switch (config.method) {
    case PruneMethod::none:
      return grammar;
    case PruneMethod::classes:
      return prune_by_class(grammar, options.filters, options.tagset);
    case PruneMethod::threshold: {
      auto result = prune_threshold(grammar, pruning, options.threshold);
      if (trace) *trace = std::move(result.trace);
      return std::move(result.grammar);
    }
    case PruneMethod::incremental: {
      auto result = prune_incremental(grammar, pruning, options.incremental);
      if (trace) *trace = std::move(result.trace);
      return std::move(result.grammar);
    }
  }
  return grammar;
}

ConfigOutcome run_pipeline(const Corpus& training, const Corpus& pruning, const Corpus& test,
                           const PipelineConfig& config, const ExperimentOptions& options) {
  ConfigOutcome outcome;
  PruneTrace trace;
  Grammar initial = extract_grammar(training);
  outcome.initial_rules = initial.size();
  const Grammar grammar = build_grammar(training, pruning, config, options, &trace);
  outcome.final_rules = grammar.size();
  outcome.prune_iterations = trace.steps.size();

  const RuleTrie trie = compile_trie(grammar);
  outcome.pruning = evaluate(bracket_corpus(pruning, trie), pruning);
  Corpus proposed = bracket_corpus(test, trie);
  if (config.repair) proposed = repair(proposed, options.repair);
  outcome.test = evaluate(proposed, test);
  return outcome;
}

double RunResult::macro_precision(std::size_t c) const {
  if (runs.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& run : runs) sum += run[c].test.precision();
  return sum / static_cast<double>(runs.size());
}

double RunResult::macro_recall(std::size_t c) const {
  if (runs.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& run : runs) sum += run[c].test.recall();
  return sum / static_cast<double>(runs.size());
}

EvalReport RunResult::micro(std::size_t c) const {
  EvalReport total;
  for (const auto& run : runs) total += run[c].test;
  return total;
}

bool RunResult::operator==(const RunResult& other) const {
  if (configs != other.configs || runs.size() != other.runs.size()) return false;
  for (std::size_t r = 0; r < runs.size(); ++r)
    for (std::size_t c = 0; c < configs.size(); ++c) {
      const auto& a = runs[r][c];
      const auto& b = other.runs[r][c];
      if (!(a.test == b.test) || !(a.pruning == b.pruning) || a.final_rules != b.final_rules ||
          a.initial_rules != b.initial_rules || a.prune_iterations != b.prune_iterations)
        return false;
    }
  return true;
}

RunResult run_crossval(const std::vector<Corpus>& folds, const std::vector<PipelineConfig>& configs,
                       const ExperimentOptions& options, std::string corpus_label) {
  RunResult result;
  result.corpus = std::move(corpus_label);
  result.plan = FoldPlan::rotate(folds.size());
  result.configs = configs;
  result.runs.resize(result.plan.runs.size());

  ExperimentOptions inner = options;
  inner.threshold.jobs = inner.incremental.jobs = 1;

  parallel_for(result.plan.runs.size(), options.jobs, [&](std::size_t r) {
    const auto& roles = result.plan.runs[r];
    std::vector<const Corpus*> parts;
    for (auto f : roles.training) parts.push_back(&folds[f]);
    const Corpus training = concat(parts, "training");
    const Corpus& pruning = folds[roles.pruning];
    const Corpus& test = folds[roles.test];
    if (options.observer) {
      options.observer(r, CorpusRole::training, training);
      options.observer(r, CorpusRole::pruning, pruning);
      options.observer(r, CorpusRole::test, test);
    }
    auto& outcomes = result.runs[r];
    for (const auto& config : configs)
      outcomes.push_back(run_pipeline(training, pruning, test, config, inner));
  });
  return result;
}

RunResult run_crossval(const Corpus& corpus, std::size_t k, std::uint64_t seed,
                       const std::vector<PipelineConfig>& configs,
                       const ExperimentOptions& options) {
  if (k < 3) throw std::invalid_argument("cross-validation needs at least 3 folds");
  return run_crossval(split_folds(corpus, k, seed), configs, options, corpus.source);
}

std::vector<Corpus> load_fold_manifest(const std::string& manifest_path, Format format) {
  std::ifstream in(manifest_path);
  if (!in) throw IoError("cannot open '" + manifest_path + "' for reading");
  const auto base = std::filesystem::path(manifest_path).parent_path();

  std::map<std::size_t, Corpus> folds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    std::size_t fold = 0;
    std::istringstream index(line.substr(0, tab));
    if (tab == std::string::npos || !(index >> fold) || !index.eof())
      throw ParseError(manifest_path, line_no, 0, "expected fold-index<TAB>path");
    std::filesystem::path path = line.substr(tab + 1);
    if (path.is_relative()) path = base / path;
    Corpus part = read_corpus_file(path.string(), format);
    auto& target = folds[fold];
    if (target.source.empty()) target.source = "fold" + std::to_string(fold);
    target.sentences.insert(target.sentences.end(), part.sentences.begin(),
                            part.sentences.end());
  }
  std::vector<Corpus> out;
  for (auto& [index, corpus] : folds) {
    if (index != out.size())
      throw std::invalid_argument("manifest fold indices must be 0..k-1 without gaps");
    out.push_back(std::move(corpus));
  }
  return out;
}

void write_results_csv(const RunResult& result, std::ostream& out) {
  auto row = [&](const std::string& run, const std::string& config, const EvalReport& rep,
                 double p, double r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f,%.6f", p, r);
    out << run << ',' << config << ',' << rep.proposed << ',' << rep.correct << ','
        << rep.reference << ',' << buf << '\n';
  };
  out << "run,config,proposed,correct,reference,precision,recall\n";
  for (std::size_t r = 0; r < result.runs.size(); ++r)
    for (std::size_t c = 0; c < result.configs.size(); ++c) {
      const auto& rep = result.runs[r][c].test;
      row(std::to_string(r), result.configs[c].name(), rep, rep.precision(), rep.recall());
    }
  for (std::size_t c = 0; c < result.configs.size(); ++c) {
    const auto micro = result.micro(c);
    row("macro", result.configs[c].name(), micro, result.macro_precision(c),
        result.macro_recall(c));
    row("micro", result.configs[c].name(), micro, micro.precision(), micro.recall());
  }
}

void write_results_table(const RunResult& result, std::ostream& out) {
  std::size_t corpus_w = std::max<std::size_t>(6, result.corpus.size());
  std::size_t config_w = 6;
  for (const auto& c : result.configs) config_w = std::max(config_w, c.name().size());
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-*s  %-*s  %6s  %6s\n", static_cast<int>(corpus_w), "corpus",
                static_cast<int>(config_w), "config", "P", "R");
  out << buf;
  for (std::size_t c = 0; c < result.configs.size(); ++c) {
    std::snprintf(buf, sizeof buf, "%-*s  %-*s  %6.1f  %6.1f\n", static_cast<int>(corpus_w),
                  result.corpus.c_str(), static_cast<int>(config_w),
                  result.configs[c].name().c_str(), 100.0 * result.macro_precision(c),
                  100.0 * result.macro_recall(c));
    out << buf;
  }
}

}  // namespace bnp
