#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rwiki/error.hpp"
#include "rwiki/markup.hpp"
#include "rwiki/page_id.hpp"
#include "rwiki/wiki_store.hpp"

namespace rwiki::sheets {

enum class PageKind {
  reading_sheet,
  author_page,
  year_page,
  journal_page,
  conference_page,
  publisher_page,
  institution_page,
  collection_page,
  experiment_page,
  milestone_page,
  resource_page,
  infopage,
  other,
};

std::string_view to_string(PageKind k);

enum class EntityKind { author, year, journal, conference, publisher, institution };

inline constexpr EntityKind kEntityKinds[] = {EntityKind::author,     EntityKind::year,      EntityKind::journal,
                                              EntityKind::conference, EntityKind::publisher, EntityKind::institution};

std::string_view to_string(EntityKind k);
std::optional<EntityKind> parse_entity_kind(std::string_view s);
PageKind page_kind_of(EntityKind k);
std::optional<EntityKind> entity_kind_of(PageKind k);

// "phd:bibliography:<kind>"
std::string entity_namespace(EntityKind k);

// Total; depends only on the namespace prefix of the (normalized) id.
PageKind classify_page(const PageId& id);

// Pages whose links decide review status: `phd:bibliography` and the
// `phd:bibliography:list:*` reading lists.
bool is_bibliography_index(const PageId& id);

// "YYYY-MM-DD", optionally followed by " HH:MM" or " HH:MM:SS", read as UTC.
std::optional<Timestamp> parse_datetime(std::string_view s);

enum class ReviewStatus { reviewed, in_review, to_review, listed };
std::string_view to_string(ReviewStatus s);

// Status implied by inbound links from bibliography index pages: any bold
// link means reviewed, otherwise the strongest prefix, otherwise listed.
ReviewStatus derive_status(std::span<const markup::InternalLink> inbound);

enum class VenueKind { conference, journal };

struct Venue {
  PageId page;
  VenueKind kind = VenueKind::conference;
  friend bool operator==(const Venue&, const Venue&) = default;
};

struct Note {
  std::string heading;
  std::string text;
  friend bool operator==(const Note&, const Note&) = default;
};

// A metadata row whose label is not part of the template.
struct ExtraRow {
  std::string label;
  std::string value;
  friend bool operator==(const ExtraRow&, const ExtraRow&) = default;
};

struct ReadingSheet {
  PageId page_id;
  std::string title;
  std::vector<PageId> authors;
  std::optional<PageId> year;
  std::optional<Venue> venue;
  std::vector<Venue> venues;  // every conference/journal given; `venue` is the first
  std::optional<PageId> institution;
  std::optional<PageId> publisher;
  ReviewStatus status = ReviewStatus::listed;
  std::optional<std::string> summary;
  std::vector<Note> notes;

  bool has_metadata_table = false;
  std::vector<std::string> fields;  // canonical labels of recognized rows
  std::vector<ExtraRow> extra;
  std::vector<std::pair<PageId, std::string>> link_labels;  // entity id -> text used on the sheet
  std::vector<Issue> issues;
};

struct Evaluation {
  std::string task;
  std::string metric;
  std::string value;
  std::string citation;
  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

struct CollectionSource {
  std::optional<PageId> parent;  // set for subsets
  std::string url;               // external source otherwise
  friend bool operator==(const CollectionSource&, const CollectionSource&) = default;
};

struct CollectionSheet {
  PageId page_id;
  std::string name;
  CollectionSource source;
  std::string paper;
  std::optional<PageId> paper_link;
  std::string date;
  std::string size;
  std::vector<ExtraRow> stats;  // table order, labels verbatim
  std::vector<Evaluation> evaluations;
  std::vector<std::string> unparsed_evaluations;

  bool has_metadata_table = false;
  std::vector<std::string> fields;
  std::vector<Issue> issues;
};

struct TodoItem {
  bool checked = false;
  std::string text;
  friend bool operator==(const TodoItem&, const TodoItem&) = default;
};

struct Version {
  std::string name;
  std::string description;
  friend bool operator==(const Version&, const Version&) = default;
};

struct VersionScore {
  std::string version;
  std::string metric;
  std::string value;
  friend bool operator==(const VersionScore&, const VersionScore&) = default;
};

struct ExperimentSheet {
  PageId page_id;
  std::string label;
  std::string start;
  std::string end;
  std::string motivation;
  std::string strengths;
  std::string weaknesses;
  std::optional<PageId> test_collection;
  std::vector<TodoItem> todo;
  std::vector<Version> versions;
  std::vector<VersionScore> evaluations;
  std::vector<PageId> logs;  // sorted
  std::vector<Note> deprecated_sections;  // challenges, dependencies, traces

  bool has_metadata_table = false;
  std::vector<std::string> fields;
  std::vector<std::string> unparsed_rows;
  std::vector<Issue> issues;
};

// Row-label key: trimmed, lowercased, whitespace squashed, trailing ':' removed.
std::string canonical_label(std::string_view label);

ReadingSheet extract_reading_sheet(const WikiPage& page, const markup::Blocks& blocks,
                                   std::span<const markup::InternalLink> inbound);
ReadingSheet extract_reading_sheet(const WikiPage& page, std::span<const markup::InternalLink> inbound);

CollectionSheet extract_collection_sheet(const WikiPage& page, const markup::Blocks& blocks);
CollectionSheet extract_collection_sheet(const WikiPage& page);

ExperimentSheet extract_experiment_sheet(const WikiPage& page, const markup::Blocks& blocks,
                                         std::span<const PageId> all_page_ids);
ExperimentSheet extract_experiment_sheet(const WikiPage& page, std::span<const PageId> all_page_ids);

// True for `phd:experiments:<name>`; deeper pages are research logs.
bool is_experiment_root(const PageId& id);

}  // namespace rwiki::sheets
