#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rwiki/biblio.hpp"
#include "rwiki/page_id.hpp"
#include "rwiki/sheets.hpp"
#include "rwiki/wiki_store.hpp"

namespace rwiki::analysis {

inline constexpr std::array<std::string_view, 10> kBibHeader = {
    "title", "author", "year", "conference", "core", "journal", "scimago_h_index", "institution", "publisher", "review"};

// One exported publication; every field is empty when unavailable.
struct BibRecord {
  std::string title;
  std::string author;  // names joined with '|'
  std::string year;
  std::string conference;
  std::string core;
  std::string journal;
  std::string scimago_h_index;
  std::string institution;
  std::string publisher;
  std::string review;

  std::vector<std::string> row() const;
  friend bool operator==(const BibRecord&, const BibRecord&) = default;
};

using DisplayNames = std::map<PageId, std::string>;
using VenueMatches = std::map<PageId, biblio::VenueMatch>;  // keyed by venue page id

// One record per sheet, ordered by sheet page id. `core` / `scimago_h_index`
// are filled only for accepted matches of the matching venue kind; `review`
// carries the summary of reviewed sheets.
std::vector<BibRecord> build_bib_table(std::span<const sheets::ReadingSheet> sheets, const VenueMatches& matches,
                                       const DisplayNames& names);

std::string bib_csv(std::span<const BibRecord> records);

struct MonthBucket {
  int year = 1970;
  unsigned month = 1;  // 1..12
  std::uint64_t count = 0;
  std::uint64_t cumulative = 0;

  std::string label() const;  // "YYYY-MM"
  friend bool operator==(const MonthBucket&, const MonthBucket&) = default;
};

struct TimeRange {
  std::optional<Timestamp> from;  // inclusive
  std::optional<Timestamp> to;    // exclusive
};

// Revisions of pages strictly below `ns`, bucketed by UTC calendar month.
// Every month between the first and last observed one is present.
std::vector<MonthBucket> changes_over_time(std::span<const WikiPage> pages, std::string_view ns, TimeRange range = {});

struct TermCount {
  std::string term;
  std::uint64_t frequency = 0;
  friend bool operator==(const TermCount&, const TermCount&) = default;
};

// Frequency descending, then term ascending.
using TermFreq = std::vector<TermCount>;

// Notes and summaries of all sheets, one per line, in sheet order.
std::string notes_corpus(std::span<const sheets::ReadingSheet> sheets);

TermFreq term_frequency(std::string_view text);
TermFreq term_frequency(std::span<const sheets::ReadingSheet> sheets);

enum class Dimension { author, conference, journal, year };
inline constexpr Dimension kDimensions[] = {Dimension::author, Dimension::conference, Dimension::journal, Dimension::year};
std::string_view to_string(Dimension d);

struct CountRow {
  std::string value;
  std::uint64_t count = 0;
  friend bool operator==(const CountRow&, const CountRow&) = default;
};

// Count descending, then value ascending; empty fields are not counted.
std::vector<CountRow> counts_by(std::span<const BibRecord> records, Dimension d);

using Histograms = std::map<Dimension, std::vector<CountRow>>;
Histograms histograms(std::span<const BibRecord> records);

struct Outputs {
  std::vector<BibRecord> records;
  std::string changes_namespace = "phd:bibliography";
  std::vector<MonthBucket> changes;
  TermFreq terms;
  Histograms counts;
};

// Rendered files as (file name, content), in file-name order.
std::vector<std::pair<std::string, std::string>> render_outputs(const Outputs& o);

// Writes render_outputs() into `dir`, creating it if needed. On failure the
// files written by this call are removed and rwiki::Error is thrown.
std::vector<std::filesystem::path> write_outputs(const Outputs& o, const std::filesystem::path& dir);

}  // namespace rwiki::analysis
