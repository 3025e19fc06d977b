#include <gtest/gtest.h>

#include "rwiki/pipeline.hpp"
#include "support.hpp"

using namespace rwiki;

namespace {

std::vector<std::string> rendered(const std::vector<graph::Diagnostic>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(graph::render(d));
  return out;
}

}  // namespace

TEST(Ingest, FixtureShape) {
  auto wiki = pipeline::ingest({testutil::fixture("wiki")});
  EXPECT_EQ(wiki.pages.size(), 12u);
  EXPECT_EQ(wiki.blocks.size(), wiki.pages.size());
  EXPECT_EQ(wiki.links.size(), wiki.pages.size());
  EXPECT_EQ(wiki.reading.size(), 5u);
  EXPECT_EQ(wiki.collections.size(), 1u);
  EXPECT_EQ(wiki.experiments.size(), 1u);
  EXPECT_EQ(wiki.issues.size(), 1u);
  ASSERT_NE(wiki.find(PageId::of("phd:bibliography:graph-of-entity")), nullptr);
  EXPECT_EQ(wiki.find(PageId::of("phd:nothing")), nullptr);

  std::map<std::string, sheets::ReviewStatus> status;
  for (const auto& s : wiki.reading) status[std::string(s.page_id.name())] = s.status;
  EXPECT_EQ(status.at("concordance-based-entity-oriented-search"), sheets::ReviewStatus::reviewed);
  EXPECT_EQ(status.at("entity-linking-at-web-scale"), sheets::ReviewStatus::in_review);
  EXPECT_EQ(status.at("graph-of-entity"), sheets::ReviewStatus::reviewed);
  EXPECT_EQ(status.at("hypergraph-based-ranking"), sheets::ReviewStatus::to_review);
  EXPECT_EQ(status.at("unranked-workshop-paper"), sheets::ReviewStatus::listed);
}

TEST(Ingest, ExperimentLogsFromTree) {
  testutil::TempDir t;
  testutil::write_pages(t.path(), {{"phd:experiments:hoe", "^ ID | Experiment 1 |\n"},
                                  {"phd:experiments:hoe:log-b", "b"},
                                  {"phd:experiments:hoe:log-a", "a"},
                                  {"phd:experiments:hoe:old:log-c", "c"},
                                  {"phd:experiments:other", "^ ID | Experiment 2 |\n"}});
  auto wiki = pipeline::ingest({t.path()});
  ASSERT_EQ(wiki.experiments.size(), 2u);
  const auto& e = wiki.experiments[0];
  EXPECT_EQ(e.page_id.str(), "phd:experiments:hoe");
  std::vector<std::string> logs;
  for (const auto& l : e.logs) logs.push_back(l.str());
  EXPECT_EQ(logs, (std::vector<std::string>{"phd:experiments:hoe:log-a", "phd:experiments:hoe:log-b",
                                            "phd:experiments:hoe:old:log-c"}));
  EXPECT_TRUE(wiki.experiments[1].logs.empty());
}

TEST(DisplayNames, HeadingThenLabelThenNothing) {
  auto wiki = pipeline::ingest({testutil::fixture("wiki")});
  auto names = pipeline::display_names(wiki);
  EXPECT_EQ(names.at(PageId::of("phd:bibliography:author:w-bruce-croft")), "W. Bruce Croft");
  EXPECT_EQ(names.at(PageId::of("phd:bibliography:publisher:springer")), "Springer");
  EXPECT_EQ(names.at(PageId::of("phd:bibliography:year:2019")), "2019");
}

TEST(Determinism, WorkerCountsAgree) {
  testutil::TempDir t;
  testutil::copy_fixture_wiki(t.path());
  auto one = pipeline::ingest({t.path()}, 1);
  auto base_lint = rendered(pipeline::lint(one));
  auto base_csv = analysis::bib_csv(pipeline::bibliography(one, {}));
  for (unsigned n : {2u, 3u, 8u, 32u}) {
    auto many = pipeline::ingest({t.path()}, n);
    EXPECT_EQ(many.pages, one.pages);
    EXPECT_EQ(many.blocks, one.blocks);
    EXPECT_TRUE(many.graph == one.graph);
    EXPECT_EQ(many.issues, one.issues);
    EXPECT_EQ(rendered(pipeline::lint(many)), base_lint);
    EXPECT_EQ(analysis::bib_csv(pipeline::bibliography(many, {})), base_csv);
  }
}

TEST(Determinism, ScaffoldedWiki) {
  testutil::TempDir t;
  scaffold(t.path());
  auto a = pipeline::ingest({t.path()}, 1);
  auto b = pipeline::ingest({t.path()}, 6);
  EXPECT_TRUE(a.graph == b.graph);
  EXPECT_EQ(rendered(pipeline::lint(a)), rendered(pipeline::lint(b)));
}
