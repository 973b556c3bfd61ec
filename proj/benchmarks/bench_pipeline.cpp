#include <benchmark/benchmark.h>

#include "bnp/bracketer.hpp"
#include "bnp/grammar.hpp"
#include "bnp/pruner.hpp"
#include "bnp/repair.hpp"
#include "bnp/scorer.hpp"
#include "bnp/synthetic.hpp"

namespace {

using namespace bnp;

const Corpus& corpus() {
  static const Corpus c = generate_corpus({.sentences = 4000, .seed = 17});
  return c;
}

Corpus prefix(std::size_t sentences) {
  Corpus out;
  out.sentences.assign(corpus().sentences.begin(),
                       corpus().sentences.begin() + static_cast<std::ptrdiff_t>(sentences));
  return out;
}

void BM_Extract(benchmark::State& state) {
  const Corpus c = prefix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_grammar(c));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.token_count()));
}
BENCHMARK(BM_Extract)->Arg(500)->Arg(2000)->Arg(4000);

void BM_CompileTrie(benchmark::State& state) {
  const Grammar g = extract_grammar(corpus());
  for (auto _ : state) benchmark::DoNotOptimize(compile_trie(g));
  state.counters["rules"] = static_cast<double>(g.size());
}
BENCHMARK(BM_CompileTrie);

void BM_Bracket(benchmark::State& state) {
  const Corpus c = prefix(static_cast<std::size_t>(state.range(0)));
  const RuleTrie trie = compile_trie(extract_grammar(corpus()));
  std::vector<std::vector<std::string>> tags;
  for (const auto& s : c.sentences) tags.push_back(s.tags());
  for (auto _ : state)
    for (const auto& t : tags) benchmark::DoNotOptimize(bracket(t, trie));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.token_count()));
}
BENCHMARK(BM_Bracket)->Arg(500)->Arg(1000)->Arg(2000)->Arg(4000);

void BM_BracketCorpusJobs(benchmark::State& state) {
  const RuleTrie trie = compile_trie(extract_grammar(corpus()));
  const auto jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_corpus(corpus(), trie, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(corpus().token_count()));
}
BENCHMARK(BM_BracketCorpusJobs)->Arg(1)->Arg(4)->UseRealTime();

void BM_Score(benchmark::State& state) {
  const Corpus pruning = prefix(1000);
  const RuleTrie trie = compile_trie(extract_grammar(corpus()));
  for (auto _ : state) benchmark::DoNotOptimize(score_and_evaluate(pruning, trie));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pruning.token_count()));
}
BENCHMARK(BM_Score);

void BM_PruneThreshold(benchmark::State& state) {
  const Grammar g = extract_grammar(prefix(3000));
  Corpus pruning;
  pruning.sentences.assign(corpus().sentences.begin() + 3000, corpus().sentences.end());
  for (auto _ : state) benchmark::DoNotOptimize(prune_threshold(g, pruning));
}
BENCHMARK(BM_PruneThreshold)->Unit(benchmark::kMillisecond);

void BM_PruneIncremental(benchmark::State& state) {
  const Grammar g = extract_grammar(prefix(3000));
  Corpus pruning;
  pruning.sentences.assign(corpus().sentences.begin() + 3000, corpus().sentences.end());
  IncrementalOptions opts;
  opts.batch = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prune_incremental(g, pruning, opts));
}
BENCHMARK(BM_PruneIncremental)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Repair(benchmark::State& state) {
  const Corpus bracketed = bracket_corpus(corpus(), compile_trie(extract_grammar(corpus())));
  const RepairConfig config = RepairConfig::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(repair(bracketed, config));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(bracketed.token_count()));
}
BENCHMARK(BM_Repair);

}  // namespace

BENCHMARK_MAIN();
