#include <gtest/gtest.h>

#include <random>

#include "rwiki/biblio.hpp"
#include "rwiki/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace rwiki;
using namespace rwiki::biblio;

namespace {

const std::vector<std::string> kVocab = {"International", "Conference", "Web", "Search", "Data", "Mining", "ACM",
                                         "SIGIR", "Information", "Retrieval", "Journal", "on", "the", "of", "Systems"};

std::string random_phrase(std::mt19937& rng, int max_words) {
  std::string s;
  int n = 1 + int(rng() % max_words);
  for (int i = 0; i < n; ++i) s += (i ? " " : "") + kVocab[rng() % kVocab.size()];
  return s;
}

VenueRegistry random_registry(std::mt19937& rng) {
  VenueRegistry reg;
  int n = int(rng() % 101);
  std::set<std::string> names;
  for (int i = 0; i < n; ++i) {
    auto name = random_phrase(rng, 6);
    if (!names.insert(name).second) continue;
    std::string acronym = rng() % 3 == 0 ? kVocab[rng() % kVocab.size()] : "";
    reg.entries.push_back({name, acronym, "A"});
  }
  return reg;
}

TokenSet ts(std::initializer_list<const char*> xs) { return TokenSet(xs.begin(), xs.end()); }

}  // namespace

TEST(Registry, HeaderOnly) {
  auto r = parse_registry(RegistryKind::core_conference, "name,acronym,rank\n");
  EXPECT_TRUE(r.entries.empty());
  EXPECT_TRUE(r.issues.empty());
}

TEST(Registry, OneRow) {
  auto r = parse_registry(RegistryKind::core_conference,
                          "name,acronym,rank\nInternational Conference on Web Search and Data Mining,WSDM,A*\n");
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0], (RegistryEntry{"International Conference on Web Search and Data Mining", "WSDM", "A*"}));
}

TEST(Registry, FixtureHasOneMalformedRow) {
  auto r = load_registry(RegistryKind::core_conference, testutil::fixture("registries/core.csv"));
  EXPECT_EQ(r.entries.size(), 9u);
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_NE(r.issues[0].where.find("core.csv:10"), std::string::npos);
}

TEST(Registry, Scimago) {
  auto r = load_registry(RegistryKind::scimago_journal, testutil::fixture("registries/scimago.csv"));
  ASSERT_EQ(r.entries.size(), 4u);
  EXPECT_EQ(r.entries[0].value, "97");
  EXPECT_TRUE(r.entries[0].acronym.empty());
  auto bad = parse_registry(RegistryKind::scimago_journal, "title,h_index\nA,-3\nB,x\nC,12\n,4\n");
  EXPECT_EQ(bad.entries.size(), 1u);
  EXPECT_EQ(bad.issues.size(), 3u);
}

TEST(Registry, DuplicatesKeepFirst) {
  auto r = parse_registry(RegistryKind::core_conference, "name,acronym,rank\nX Conf,X,A\nx  conf,Y,B\n");
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].value, "A");
}

TEST(Registry, BadHeaderOrMissingFileIsFatal) {
  EXPECT_THROW(parse_registry(RegistryKind::core_conference, "title,h_index\n"), Error);
  EXPECT_THROW(load_registry(RegistryKind::core_conference, testutil::fixture("registries/nope.csv")), Error);
  EXPECT_NO_THROW(parse_registry(RegistryKind::core_conference, "Name, Acronym ,RANK\n"));
}

TEST(Extract, ProceedingsStrings) {
  EXPECT_EQ(extract_conference_name("Proceedings of the 41st International ACM SIGIR Conference on Research and "
                                    "Development in Information Retrieval"),
            "International ACM SIGIR Conference on Research and Development in Information Retrieval");
  EXPECT_EQ(extract_conference_name("WSDM"), "WSDM");
  EXPECT_THROW(extract_conference_name("Proceedings of the"), Error);
  EXPECT_EQ(extract_conference_name("Proceedings of the Tenth ACM International Conference on Web Search and Data "
                                    "Mining, WSDM 2017"),
            "ACM International Conference on Web Search and Data Mining");
  EXPECT_EQ(extract_conference_name("proceedings of 3rd  Workshop ,x"), "Workshop");
  EXPECT_EQ(extract_conference_name("The 2nd Conference"), "The Conference");
}

TEST(Extract, Fixpoint) {
  EXPECT_EQ(extract_conference_name("Proceedings of the Proceedings of the 1st X"), "X");
  std::mt19937 rng(31);
  const std::vector<std::string> words = {"Proceedings", "of", "the", "1st", "Twelfth", "22nd", "ACM", "Conference",
                                          ",", "SIGIR", "on", "3rd,"};
  for (int i = 0; i < 1000; ++i) {
    std::string s;
    int n = int(rng() % 9);
    for (int k = 0; k < n; ++k) s += (k ? " " : "") + words[rng() % words.size()];
    std::string once;
    try {
      once = extract_conference_name(s);
    } catch (const Error&) {
      continue;
    }
    EXPECT_EQ(extract_conference_name(once), once) << s;
  }
}

TEST(Jaccard, HandCases) {
  EXPECT_DOUBLE_EQ(jaccard(ts({"sigir"}), ts({"sigir"})), 1.0);
  EXPECT_NEAR(jaccard(ts({"web", "search", "data", "mining"}),
                      ts({"international", "conference", "web", "search", "data", "mining"})),
              4.0 / 6.0, 1e-12);
  EXPECT_NEAR(jaccard(ts({"web", "search", "data", "mining"}),
                      ts({"international", "conference", "web", "search", "data", "mining"})),
              0.6667, 1e-4);
  EXPECT_EQ(jaccard(ts({"a"}), ts({"b"})), 0.0);
  EXPECT_EQ(jaccard({}, {}), 0.0);
  EXPECT_EQ(tokenize("ACM  Web-Search, 2017"), ts({"acm", "web", "search", "2017"}));
}

TEST(Jaccard, RandomProperties) {
  std::mt19937 rng(17);
  for (int i = 0; i < 1000; ++i) {
    TokenSet a;
    TokenSet b;
    for (int k = int(rng() % 8); k > 0; --k) a.insert(kVocab[rng() % kVocab.size()]);
    for (int k = int(rng() % 8); k > 0; --k) b.insert(kVocab[rng() % kVocab.size()]);
    double ab = jaccard(a, b);
    EXPECT_EQ(ab, jaccard(b, a));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    if (!a.empty()) EXPECT_EQ(jaccard(a, a), 1.0);
    std::size_t inter = 0;
    for (const auto& t : a) inter += b.count(t);
    EXPECT_EQ(intersection_size(a, b), inter);
    if (!a.empty() || !b.empty())
      EXPECT_NEAR(ab, double(inter) / double(a.size() + b.size() - inter), 1e-12);
  }
}

TEST(Match, IdentityAndAcronym) {
  VenueRegistry reg;
  reg.entries = {{"International ACM SIGIR Conference on Research and Development in Information Retrieval", "SIGIR", "A*"},
                 {"European Conference on Information Retrieval", "ECIR", "A"}};
  auto m = match_venue("European Conference on Information Retrieval", reg);
  ASSERT_TRUE(m.matched_entry);
  EXPECT_EQ(m.matched_entry->value, "A");
  EXPECT_EQ(m.score, 1.0);
  EXPECT_TRUE(m.accepted);
  auto a = match_venue("sigir", reg);
  EXPECT_EQ(a.matched_entry->acronym, "SIGIR");
  EXPECT_EQ(a.score, 1.0);
  EXPECT_TRUE(a.accepted);
  auto none = match_venue("Quantum Chemistry", reg);
  EXPECT_FALSE(none.matched_entry);
  EXPECT_FALSE(none.accepted);
  EXPECT_EQ(none.score, 0.0);
}

TEST(Match, RejectsBadThreshold) {
  VenueRegistry reg;
  EXPECT_THROW(match_venue("x", reg, 0.0), Error);
  EXPECT_THROW(match_venue("x", reg, 1.5), Error);
  EXPECT_NO_THROW(match_venue("x", reg, 1.0));
}

TEST(Match, FixtureSigirAgainstWholeRegistry) {
  auto reg = load_registry(RegistryKind::core_conference, testutil::fixture("registries/core.csv"));
  const std::string raw = "Proceedings of the 41st International ACM SIGIR Conference on Research and Development in "
                          "Information Retrieval";
  auto m = match_conference(raw, reg, kDefaultThreshold);
  auto oracle = oracle::best_match(extract_conference_name(raw), reg);
  ASSERT_TRUE(m.matched_entry);
  ASSERT_NE(oracle.entry, nullptr);
  EXPECT_EQ(*m.matched_entry, *oracle.entry);
  EXPECT_EQ(m.matched_entry->acronym, "SIGIR");
  EXPECT_NEAR(m.score, oracle.score(), 1e-12);
  EXPECT_TRUE(m.accepted);
  EXPECT_EQ(m.raw, raw);
}

TEST(Match, EqualsExhaustiveArgmax) {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 200; ++iter) {
    auto reg = random_registry(rng);
    auto name = rng() % 5 == 0 ? kVocab[rng() % kVocab.size()] : random_phrase(rng, 6);
    double tau = 0.05 + 0.95 * double(rng() % 1000) / 999.0;
    auto m = match_venue(name, reg, tau);
    auto oracle = oracle::best_match(name, reg);
    if (!oracle.entry) {
      EXPECT_FALSE(m.matched_entry) << name;
      EXPECT_FALSE(m.accepted);
      continue;
    }
    ASSERT_TRUE(m.matched_entry) << name;
    EXPECT_EQ(*m.matched_entry, *oracle.entry) << name;
    double expected = oracle.score();
    EXPECT_NEAR(m.score, expected, 1e-12);
    EXPECT_EQ(m.accepted, expected >= tau) << name;
    if (m.accepted) EXPECT_GE(m.score, tau);
  }
}

TEST(Match, ThresholdOnlyMovesAcceptance) {
  std::mt19937 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    auto reg = random_registry(rng);
    auto name = random_phrase(rng, 5);
    std::optional<RegistryEntry> first;
    bool prev_accepted = false;
    for (double tau : {1.0, 0.8, 0.5, 0.3, 0.1, 0.01}) {
      auto m = match_venue(name, reg, tau);
      if (tau == 1.0) first = m.matched_entry;
      EXPECT_EQ(m.matched_entry, first);
      EXPECT_TRUE(!prev_accepted || m.accepted);
      prev_accepted = m.accepted;
    }
  }
}

TEST(Match, JournalAndOverrides) {
  auto scimago = load_registry(RegistryKind::scimago_journal, testutil::fixture("registries/scimago.csv"));
  auto irj = match_journal("Information Retrieval Journal", scimago, kDefaultThreshold);
  EXPECT_EQ(irj.matched_entry->name, "Information Retrieval");
  EXPECT_NEAR(irj.score, 2.0 / 3.0, 1e-12);
  EXPECT_EQ(irj.matched_entry->value, "45");

  auto overrides = Overrides::parse("name,rank_or_hindex\nInformation Retrieval Journal,50\nbad row only\n");
  EXPECT_EQ(overrides.issues().size(), 1u);
  auto o = match_journal("information retrieval journal", scimago, kDefaultThreshold, &overrides);
  EXPECT_TRUE(o.accepted);
  EXPECT_EQ(o.score, 1.0);
  EXPECT_EQ(o.matched_entry->value, "50");

  auto core = load_registry(RegistryKind::core_conference, testutil::fixture("registries/core.csv"));
  auto workshop = match_conference("Proceedings of the 3rd Workshop on Obscure Things", core, kDefaultThreshold);
  EXPECT_FALSE(workshop.accepted);
  EXPECT_EQ(workshop.extracted_name, "Workshop on Obscure Things");
}
