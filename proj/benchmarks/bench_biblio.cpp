#include <benchmark/benchmark.h>

#include <random>

#include "rwiki/biblio.hpp"

namespace {

rwiki::biblio::VenueRegistry registry(std::size_t n) {
  static const char* words[] = {"International", "Conference", "Web", "Search", "Data", "Mining", "Information",
                                "Retrieval", "Knowledge", "Management", "Systems", "Symposium", "Learning", "Text"};
  std::mt19937 rng(1);
  rwiki::biblio::VenueRegistry reg;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name;
    for (int k = 3 + int(rng() % 5); k > 0; --k) name += std::string(words[rng() % std::size(words)]) + " ";
    reg.entries.push_back({name + std::to_string(i), "V" + std::to_string(i), "A"});
  }
  return reg;
}

void BM_MatchVenue(benchmark::State& state) {
  const auto reg = registry(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(rwiki::biblio::match_venue("Web Search and Data Mining", reg, 0.5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MatchVenue)->RangeMultiplier(4)->Range(16, 16384)->Complexity(benchmark::oN);

void BM_ExtractConferenceName(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(rwiki::biblio::extract_conference_name(
        "Proceedings of the 11th ACM International Conference on Web Search and Data Mining, Marina Del Rey"));
}
BENCHMARK(BM_ExtractConferenceName);

}  // namespace

BENCHMARK_MAIN();
