#include <benchmark/benchmark.h>

#include <string>

#include "rwiki/markup.hpp"

namespace {

std::string index_page(int items) {
  std::string s = "====== Bibliography ======\n\n";
  for (int i = 0; i < items; ++i)
    s += "  * " + std::string(i % 3 ? "" : "**") + "[[phd:bibliography:paper-" + std::to_string(i) + "|Paper " +
         std::to_string(i) + "]]" + (i % 3 ? "" : "**") + " with //notes// and ''code''\n";
  s += "\n^ Field ^ Value ^\n";
  for (int i = 0; i < items / 4; ++i) s += "| Row " + std::to_string(i) + " | [[author:someone-" + std::to_string(i) + "]] |\n";
  return s;
}

void BM_ParsePage(benchmark::State& state) {
  const auto text = index_page(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rwiki::markup::parse_page(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParsePage)->RangeMultiplier(4)->Range(16, 4096);

void BM_ExtractLinks(benchmark::State& state) {
  const auto blocks = rwiki::markup::parse_page(index_page(static_cast<int>(state.range(0))));
  const auto source = rwiki::PageId::of("phd:bibliography");
  for (auto _ : state) benchmark::DoNotOptimize(rwiki::markup::extract_links(blocks, source));
}
BENCHMARK(BM_ExtractLinks)->RangeMultiplier(4)->Range(16, 4096);

void BM_Slugify(benchmark::State& state) {
  const std::string title = "Concordance-Based Entity-Oriented Search: A Study, Part 2 (Extended Version)";
  for (auto _ : state) benchmark::DoNotOptimize(rwiki::markup::slugify(title));
}
BENCHMARK(BM_Slugify);

}  // namespace

BENCHMARK_MAIN();
