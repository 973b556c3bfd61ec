#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bnp/bracketer.hpp"
#include "bnp/corpus.hpp"
#include "bnp/experiment.hpp"
#include "bnp/grammar.hpp"
#include "bnp/pruner.hpp"
#include "bnp/repair.hpp"
#include "bnp/scorer.hpp"

namespace bnp::cli {

namespace {

struct Globals {
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
  int verbose = 0;
};

struct RepairFlags {
  bool enabled = false;
  bool no_merge = false;
  bool no_dates = false;
  bool no_quantifiers = false;
  std::string time_words;
  std::string month_words;
  std::string quantifier_words;

  void add_to(CLI::App& cmd, bool with_toggle) {
    if (with_toggle) cmd.add_flag("--repair", enabled, "Apply local repair heuristics");
    cmd.add_flag("--no-merge", no_merge, "Disable merging of consecutive NPs");
    cmd.add_flag("--no-dates", no_dates, "Disable date merging");
    cmd.add_flag("--no-quantifiers", no_quantifiers, "Disable quantifier-of splitting");
    cmd.add_option("--time-words", time_words, "Time-word lexicon file");
    cmd.add_option("--month-words", month_words, "Month-name lexicon file");
    cmd.add_option("--quantifier-words", quantifier_words, "Quantifier lexicon file");
  }

  RepairConfig config() const {
    RepairConfig c = RepairConfig::defaults();
    c.merge_consecutive = !no_merge;
    c.date_merge = !no_dates;
    c.quantifier_split = !no_quantifiers;
    if (!time_words.empty()) c.time_words = load_lexicon_file(time_words);
    if (!month_words.empty()) c.month_words = load_lexicon_file(month_words);
    if (!quantifier_words.empty()) c.quantifier_words = load_lexicon_file(quantifier_words);
    c.validate();
    return c;
  }
};

struct PruneFlags {
  long threshold = 1;
  std::size_t batch = 10;
  std::size_t patience = 0;
  bool no_charge_unoverlapped = false;
  std::string tagset;
  std::vector<std::string> filters;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--threshold", threshold, "Threshold pruning: keep rules with benefit >= R")
        ->capture_default_str();
    cmd.add_option("--batch", batch, "Incremental pruning: rules discarded per pass")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd.add_option("--patience", patience,
                   "Incremental pruning: below-best passes tolerated before stopping")
        ->capture_default_str();
    cmd.add_flag("--no-charge-unoverlapped", no_charge_unoverlapped,
                 "Do not charge false positives that overlap no reference NP");
    cmd.add_option("--tagset", tagset, "Tag classification file (TAG<TAB>class); default Penn");
    cmd.add_option("--filters", filters, "Rule class filters (default: all)")->delimiter(',');
  }

  ScoringOptions scoring() const { return {!no_charge_unoverlapped}; }

  TagsetMap tagset_map() const {
    return tagset.empty() ? TagsetMap::penn() : TagsetMap::load_file(tagset);
  }

  std::set<RuleClassFilter> filter_set() const {
    if (filters.empty()) return all_rule_class_filters();
    std::set<RuleClassFilter> out;
    for (const auto& f : filters) out.insert(parse_rule_class_filter(f));
    return out;
  }
};

void write_text(const std::string& path, std::ostream& fallback,
                const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(fallback);
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  body(out);
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

bool has_brackets(const std::string& path, Format format) {
  if (format != Format::bracketed) return false;
  std::ifstream in(path);
  std::string piece;
  while (in >> piece)
    if (piece == "[" || piece == "]") return true;
  return false;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Base noun phrase bracketing by POS-tag sequence matching", "bnp"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--jobs", globals.jobs, "Worker threads for sentence-parallel stages")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", globals.seed, "Seed for every random choice")->capture_default_str();
  app.add_flag("-v,--verbose", globals.verbose, "Verbose progress on stderr");

  std::string format_name = "bracketed";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Corpus format")
        ->check(CLI::IsMember({"bracketed", "iob2"}))
        ->capture_default_str();
  };

  // train
  auto* train = app.add_subcommand("train", "Extract a grammar from an annotated corpus");
  std::string train_in, train_out;
  bool train_drop = false;
  train->add_option("input", train_in, "Annotated training corpus")->required();
  train->add_option("-o,--output", train_out, "Grammar file to write")->required();
  train->add_flag("--drop-singletons", train_drop, "Discard rules seen only once");
  add_format(train);

  // prune
  auto* prune = app.add_subcommand("prune", "Prune a grammar against a pruning corpus");
  std::string prune_grammar, prune_corpus, prune_out, prune_trace, prune_method = "incremental";
  PruneFlags prune_flags;
  prune->add_option("-g,--grammar", prune_grammar, "Input grammar")->required();
  prune->add_option("-c,--corpus", prune_corpus, "Annotated pruning corpus");
  prune->add_option("-o,--output", prune_out, "Pruned grammar file")->required();
  prune->add_option("--method", prune_method, "Pruning method")
      ->check(CLI::IsMember({"threshold", "incremental", "classes"}))
      ->capture_default_str();
  prune->add_option("--trace", prune_trace, "Write the pruning trace as CSV");
  prune_flags.add_to(*prune);
  add_format(prune);

  // bracket
  auto* brk = app.add_subcommand("bracket", "Bracket base NPs in tagged text");
  std::string brk_grammar, brk_in, brk_out;
  bool brk_ignore = false;
  RepairFlags brk_repair;
  brk->add_option("-g,--grammar", brk_grammar, "Grammar file")->required();
  brk->add_option("input", brk_in, "Tagged input text")->required();
  brk->add_option("-o,--output", brk_out, "Output file (default stdout)");
  brk->add_flag("--ignore-brackets", brk_ignore, "Drop any brackets present in the input");
  brk_repair.add_to(*brk, true);
  add_format(brk);

  // eval
  auto* ev = app.add_subcommand("eval", "Precision and recall against a reference");
  std::string ev_proposed, ev_reference;
  ev->add_option("proposed", ev_proposed, "Proposed bracketing")->required();
  ev->add_option("reference", ev_reference, "Reference bracketing")->required();
  add_format(ev);

  // crossval
  auto* cv = app.add_subcommand("crossval", "k-fold cross-validation of pipeline configurations");
  std::string cv_corpus, cv_manifest, cv_csv;
  std::size_t cv_k = 5;
  std::vector<std::string> cv_configs;
  PruneFlags cv_prune;
  RepairFlags cv_repair;
  cv->add_option("corpus", cv_corpus, "Annotated corpus to split into folds");
  cv->add_option("--manifest", cv_manifest, "Fold manifest (fold-index<TAB>path per line)");
  cv->add_option("-k,--folds", cv_k, "Number of folds")->capture_default_str();
  cv->add_option("--configs", cv_configs,
                 "Configurations, e.g. incremental+repair, threshold-singletons; 'all' for the "
                 "full grid (default: initial,threshold,incremental,classes)")
      ->delimiter(',');
  cv->add_option("--csv", cv_csv, "Write per-run and averaged results as CSV");
  cv_prune.add_to(*cv);
  cv_repair.add_to(*cv, false);
  add_format(cv);

  // convert
  auto* conv = app.add_subcommand("convert", "Convert between bracketed and IOB2");
  std::string conv_in, conv_out, conv_from = "bracketed", conv_to = "iob2";
  conv->add_option("input", conv_in, "Input corpus")->required();
  conv->add_option("output", conv_out, "Output corpus")->required();
  conv->add_option("--from", conv_from, "Input format")
      ->check(CLI::IsMember({"bracketed", "iob2"}))
      ->capture_default_str();
  conv->add_option("--to", conv_to, "Output format")
      ->check(CLI::IsMember({"bracketed", "iob2"}))
      ->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "bnp: " << e.what() << '\n';
    return kInputError;
  }

  auto log = [&](const std::string& msg) {
    if (globals.verbose > 0) err << msg << '\n';
  };

  try {
    const Format format = parse_format(format_name);

    if (*train) {
      const Corpus corpus = read_corpus_file(train_in, format);
      Grammar grammar = extract_grammar(corpus);
      const std::size_t rules = grammar.size();
      const std::size_t singletons = grammar.singleton_count();
      if (train_drop) grammar = drop_singletons(grammar);
      save_grammar_file(grammar, train_out);
      out << "sentences=" << corpus.sentences.size() << " rules=" << rules
          << " singletons=" << singletons << " written=" << grammar.size() << '\n';
      return kOk;
    }

    if (*prune) {
      const Grammar grammar = load_grammar_file(prune_grammar);
      Grammar pruned;
      if (prune_method == "classes") {
        pruned = prune_by_class(grammar, prune_flags.filter_set(), prune_flags.tagset_map());
        out << "method=classes initial=" << grammar.size() << " final=" << pruned.size()
            << " removed=" << grammar.size() - pruned.size() << '\n';
      } else {
        if (prune_corpus.empty()) throw std::invalid_argument("--corpus is required for " + prune_method);
        const Corpus corpus = read_corpus_file(prune_corpus, format);
        PruneResult result;
        if (prune_method == "threshold") {
          result = prune_threshold(grammar, corpus,
                                   {prune_flags.threshold, prune_flags.scoring(), globals.jobs});
        } else {
          result = prune_incremental(
              grammar, corpus,
              {prune_flags.batch, prune_flags.patience, prune_flags.scoring(), globals.jobs});
        }
        pruned = std::move(result.grammar);
        const auto& step = result.trace.steps[result.selected];
        char pr[64];
        std::snprintf(pr, sizeof pr, "P=%.1f R=%.1f", 100.0 * step.precision, 100.0 * step.recall);
        out << "method=" << prune_method << " initial=" << grammar.size()
            << " final=" << pruned.size() << " removed=" << grammar.size() - pruned.size()
            << " iterations=" << result.trace.steps.size() << ' ' << pr << '\n';
        if (!prune_trace.empty())
          write_text(prune_trace, out, [&](std::ostream& o) { write_trace_csv(result.trace, o); });
      }
      save_grammar_file(pruned, prune_out);
      return kOk;
    }

    if (*brk) {
      if (!brk_ignore && has_brackets(brk_in, format))
        throw ParseError(brk_in, 0, 0,
                         "input already contains brackets; pass --ignore-brackets to drop them");
      Corpus input = read_corpus_file(brk_in, format, {true});
      for (auto& s : input.sentences) s.nps.clear();
      const RuleTrie trie = compile_trie(load_grammar_file(brk_grammar));
      Corpus output = bracket_corpus(input, trie, globals.jobs);
      if (brk_repair.enabled) output = repair(output, brk_repair.config(), globals.jobs);
      log("bracketed " + std::to_string(output.sentences.size()) + " sentences, " +
          std::to_string(output.np_count()) + " NPs");
      write_text(brk_out, out, [&](std::ostream& o) {
        if (format == Format::bracketed)
          write_bracketed(output, o);
        else
          write_iob2(output, o);
      });
      return kOk;
    }

    if (*ev) {
      const Corpus proposed = read_corpus_file(ev_proposed, format);
      const Corpus reference = read_corpus_file(ev_reference, format);
      out << evaluate(proposed, reference) << '\n';
      return kOk;
    }

    if (*cv) {
      std::vector<PipelineConfig> configs;
      if (cv_configs.empty()) {
        for (auto m : {"initial", "threshold", "incremental", "classes"})
          configs.push_back(PipelineConfig::parse(m));
      } else if (cv_configs.size() == 1 && cv_configs[0] == "all") {
        configs = full_config_grid();
      } else {
        for (const auto& c : cv_configs) configs.push_back(PipelineConfig::parse(c));
      }

      ExperimentOptions options;
      options.threshold = {cv_prune.threshold, cv_prune.scoring(), 1};
      options.incremental = {cv_prune.batch, cv_prune.patience, cv_prune.scoring(), 1};
      options.tagset = cv_prune.tagset_map();
      options.filters = cv_prune.filter_set();
      options.repair = cv_repair.config();
      options.jobs = globals.jobs;

      RunResult result;
      if (!cv_manifest.empty()) {
        result = run_crossval(load_fold_manifest(cv_manifest, format), configs, options,
                              cv_manifest);
      } else {
        if (cv_corpus.empty()) throw std::invalid_argument("a corpus or --manifest is required");
        result = run_crossval(read_corpus_file(cv_corpus, format), cv_k, globals.seed, configs,
                              options);
      }
      write_results_table(result, out);
      if (!cv_csv.empty())
        write_text(cv_csv, out, [&](std::ostream& o) { write_results_csv(result, o); });
      return kOk;
    }

    if (*conv) {
      const Corpus corpus = read_corpus_file(conv_in, parse_format(conv_from));
      write_corpus_file(corpus, conv_out, parse_format(conv_to));
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "bnp: " << e.what() << '\n';
    return kInputError;
  } catch (const IoError& e) {
    err << "bnp: " << e.what() << '\n';
    return kInputError;
  } catch (const AlignmentError& e) {
    err << "bnp: " << e.what() << '\n';
    return kContractError;
  } catch (const UnclassifiedTagError& e) {
    err << "bnp: " << e.what() << '\n';
    return kContractError;
  } catch (const std::invalid_argument& e) {
    err << "bnp: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "bnp: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace bnp::cli
