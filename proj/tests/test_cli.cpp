#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using rwiki::testutil::TempDir;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = rwiki::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(std::string_view rel) { return rwiki::testutil::fixture(rel).string(); }

std::size_t count_lines_starting(const std::string& s, std::string_view prefix) {
  std::size_t n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) n += line.starts_with(prefix);
  return n;
}

}  // namespace

TEST(Cli, ScaffoldThenLint) {
  TempDir t;
  auto s = run({"scaffold", (t / "wiki").string(), "--program", "Doctoral Program"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(count_lines_starting(s.out, "page\t"), 16u);
  EXPECT_TRUE(fs::exists(t / "wiki/pages/doctoral-program.txt"));
  auto l = run({"lint", (t / "wiki").string()});
  EXPECT_EQ(l.code, 0) << l.err;
  EXPECT_EQ(count_lines_starting(l.err, "error\t"), 0u);
  EXPECT_NE(l.out.find("0 error(s)"), std::string::npos);
}

TEST(Cli, ScaffoldRefusesNonEmpty) {
  TempDir t;
  rwiki::testutil::write_file(t / "x", "keep");
  auto s = run({"scaffold", t.path().string()});
  EXPECT_EQ(s.code, 1);
  EXPECT_TRUE(s.out.empty());
  EXPECT_FALSE(s.err.empty());
}

TEST(Cli, LintErrorsExitOne) {
  TempDir t;
  rwiki::testutil::write_pages(t.path(), {{"phd:bibliography:Bad_Name", "no table"}});
  auto l = run({"lint", t.path().string()});
  EXPECT_EQ(l.code, 1);
  EXPECT_GE(count_lines_starting(l.err, "error\tR01\t"), 1u);
}

TEST(Cli, LintFixtureWarningsOnly) {
  auto l = run({"lint", fx("wiki"), "-j", "3"});
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(count_lines_starting(l.err, "warning\tR02\t"), 12u);
  EXPECT_EQ(count_lines_starting(l.err, "note\t"), 1u);
}

TEST(Cli, ExportMatchesGolden) {
  TempDir t;
  auto r = run({"export-csv", fx("wiki"), "--core", fx("registries/core.csv"), "--scimago", fx("registries/scimago.csv"),
                "-o", (t / "out.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(rwiki::testutil::read_file(t / "out.csv"), rwiki::testutil::read_file(fx("golden/bibliography.csv")));
}

TEST(Cli, ExportNeedsRegistries) {
  TempDir t;
  auto r = run({"export-csv", fx("wiki"), "-o", (t / "out.csv").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(fs::exists(t / "out.csv"));
}

TEST(Cli, ThresholdValidated) {
  TempDir t;
  for (std::string bad : {"0", "1.5", "abc", "-0.2"}) {
    auto r = run({"export-csv", fx("wiki"), "--core", fx("registries/core.csv"), "--scimago",
                  fx("registries/scimago.csv"), "--threshold", bad, "-o", (t / "o.csv").string()});
    EXPECT_EQ(r.code, 2) << bad;
  }
  auto strict = run({"export-csv", fx("wiki"), "--core", fx("registries/core.csv"), "--scimago",
                     fx("registries/scimago.csv"), "--threshold", "1", "-o", (t / "o.csv").string()});
  EXPECT_EQ(strict.code, 0);
  auto csv = rwiki::testutil::read_file(t / "o.csv");
  // only exact matches survive: SIGIR, WSDM after extraction; the journals score below 1
  EXPECT_EQ(csv.find(",45,"), std::string::npos);
}

TEST(Cli, AnalyzeWritesAllFiles) {
  TempDir t;
  rwiki::testutil::copy_fixture_wiki(t / "wiki");
  auto r = run({"analyze", (t / "wiki").string(), "--output", (t / "out").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(t / "out")) ++files;
  EXPECT_EQ(files, 9u);
  EXPECT_EQ(count_lines_starting(r.out, t.path().string()), 9u);
  auto ns = run({"analyze", (t / "wiki").string(), "--namespace", "phd:collections", "--output", (t / "o2").string()});
  ASSERT_EQ(ns.code, 0) << ns.err;
  EXPECT_TRUE(fs::exists(t / "o2/changes-phd-collections.csv"));
}

TEST(Cli, Backlinks) {
  auto r = run({"backlinks", fx("wiki"), "phd:bibliography:author:w-bruce-croft"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "phd:bibliography:concordance-based-entity-oriented-search\n"
            "phd:bibliography:entity-linking-at-web-scale\n");
  auto bad = run({"backlinks", fx("wiki"), "a::b"});
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, Index) {
  auto r = run({"index", fx("wiki"), "author"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines_starting(r.out, "phd:bibliography:author:"), 3u);
  EXPECT_NE(r.out.find("phd:bibliography:author:jane-doe\t2\t"), std::string::npos);
  EXPECT_EQ(run({"index", fx("wiki"), "editor"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  auto r = run({"lint", fx("wiki"), "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"lint", "/nonexistent/wiki"}).code, 1);
}

TEST(Cli, HelpOnEveryCommand) {
  auto top = run({"--help"});
  EXPECT_EQ(top.code, 0);
  const std::map<std::string, std::vector<std::string>> flags = {
      {"scaffold", {"--program", "dir"}},
      {"lint", {"--workers", "dir"}},
      {"export-csv", {"--core", "--scimago", "--overrides", "--threshold", "--output", "--workers"}},
      {"analyze", {"--core", "--scimago", "--overrides", "--threshold", "--namespace", "--output", "--workers"}},
      {"backlinks", {"page-id", "--workers"}},
      {"index", {"entity-kind", "--workers"}}};
  for (const auto& [cmd, expected] : flags) {
    EXPECT_NE(top.out.find(cmd), std::string::npos) << cmd;
    auto r = run({cmd, "--help"});
    EXPECT_EQ(r.code, 0) << cmd;
    for (const auto& f : expected) EXPECT_NE(r.out.find(f), std::string::npos) << cmd << " " << f;
  }
}
