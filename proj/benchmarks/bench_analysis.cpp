#include <benchmark/benchmark.h>

#include <random>

#include "rwiki/analysis.hpp"

namespace {

std::string corpus(std::size_t words) {
  static const char* vocab[] = {"entity", "graph", "hypergraph", "search", "ranking", "the", "of", "model",
                                "evaluation", "INEX", "2009", "Wikipedia", "links", "documents", "query"};
  std::mt19937 rng(3);
  std::string s;
  for (std::size_t i = 0; i < words; ++i) s += std::string(vocab[rng() % std::size(vocab)]) + (i % 12 ? " " : ".\n");
  return s;
}

void BM_TermFrequency(benchmark::State& state) {
  const auto text = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rwiki::analysis::term_frequency(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_TermFrequency)->RangeMultiplier(8)->Range(64, 262144);

}  // namespace

BENCHMARK_MAIN();
