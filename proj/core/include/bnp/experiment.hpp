#pragma once

// k-fold cross-validation with rotating test / pruning / training roles.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bnp/corpus.hpp"
#include "bnp/grammar.hpp"
#include "bnp/pruner.hpp"
#include "bnp/repair.hpp"
#include "bnp/scorer.hpp"

namespace bnp {

enum class PruneMethod { none, threshold, incremental, classes };

std::string_view method_name(PruneMethod m);
PruneMethod parse_method(std::string_view name);

struct PipelineConfig {
  PruneMethod method = PruneMethod::incremental;
  bool repair = false;
  bool drop_singletons = false;

  // e.g. "incremental", "threshold+repair", "initial-singletons+repair"
  std::string name() const;
  static PipelineConfig parse(std::string_view name);

  bool operator==(const PipelineConfig&) const = default;
  auto operator<=>(const PipelineConfig&) const = default;
};

// initial / threshold / incremental / classes, each +-repair, +-singleton drop.
std::vector<PipelineConfig> full_config_grid();

struct FoldRoles {
  std::size_t test = 0;
  std::size_t pruning = 0;
  std::vector<std::size_t> training;
};

// Run r tests fold r, prunes on fold (r+1) mod k, trains on the rest.
struct FoldPlan {
  std::vector<FoldRoles> runs;

  static FoldPlan rotate(std::size_t k);
};

enum class CorpusRole { training, pruning, test };

struct ExperimentOptions {
  ThresholdOptions threshold;
  IncrementalOptions incremental;
  TagsetMap tagset = TagsetMap::penn();
  std::set<RuleClassFilter> filters = all_rule_class_filters();
  RepairConfig repair = RepairConfig::defaults();
  // Folds run concurrently when jobs > 1.
  std::size_t jobs = 1;
  // Called with every corpus handed to a role. Must be thread-safe when jobs > 1.
  std::function<void(std::size_t run, CorpusRole role, const Corpus& corpus)> observer;
};

struct ConfigOutcome {
  EvalReport test;            // final grammar (+ repair) on the test corpus
  EvalReport pruning;         // final grammar on the pruning corpus, no repair
  std::size_t initial_rules = 0;
  std::size_t final_rules = 0;
  std::size_t prune_iterations = 0;  // trace length; 0 when no trace
};

// Extracts from `training`, prunes on `pruning` per `config`, brackets and
// optionally repairs `test`, and evaluates. The three corpora may coincide.
ConfigOutcome run_pipeline(const Corpus& training, const Corpus& pruning, const Corpus& test,
                           const PipelineConfig& config, const ExperimentOptions& options = {});

// Builds the final grammar of a pipeline configuration.
Grammar build_grammar(const Corpus& training, const Corpus& pruning, const PipelineConfig& config,
                      const ExperimentOptions& options, PruneTrace* trace = nullptr);

struct RunResult {
  std::string corpus;
  FoldPlan plan;
  std::vector<PipelineConfig> configs;
  std::vector<std::vector<ConfigOutcome>> runs;  // [run][config]

  // Mean of per-run test precision / recall for configs[c].
  double macro_precision(std::size_t c) const;
  double macro_recall(std::size_t c) const;
  // Summed counts over runs for configs[c].
  EvalReport micro(std::size_t c) const;

  bool operator==(const RunResult& other) const;
};

// Seeded split into k folds, then cross-validation over them. k >= 3.
RunResult run_crossval(const Corpus& corpus, std::size_t k, std::uint64_t seed,
                       const std::vector<PipelineConfig>& configs,
                       const ExperimentOptions& options = {});

// Cross-validation over pre-assigned folds. At least 3 folds.
RunResult run_crossval(const std::vector<Corpus>& folds, const std::vector<PipelineConfig>& configs,
                       const ExperimentOptions& options = {}, std::string corpus_label = "");

// Manifest lines: `fold-index<TAB>path`; paths relative to the manifest's
// directory. Files sharing an index are concatenated in manifest order.
std::vector<Corpus> load_fold_manifest(const std::string& manifest_path, Format format);

// `run,config,proposed,correct,reference,precision,recall` per run, then
// `macro` and `micro` rows per config.
void write_results_csv(const RunResult& result, std::ostream& out);
// Aligned `corpus  config  P  R` table of macro averages (percent).
void write_results_table(const RunResult& result, std::ostream& out);

}  // namespace bnp
