#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rwiki/error.hpp"
#include "rwiki/page_id.hpp"

namespace rwiki {

using Timestamp = std::int64_t;  // seconds since the Unix epoch, UTC

enum class ChangeType { create, edit, minor_edit, remove };

std::string_view to_string(ChangeType t);

struct Revision {
  Timestamp timestamp = 0;
  ChangeType type = ChangeType::edit;
  std::string user;
  std::string summary;

  friend bool operator==(const Revision&, const Revision&) = default;
};

struct WikiRoot {
  std::filesystem::path root;
  std::filesystem::path pages_dir = "pages";
  std::filesystem::path meta_dir = "meta";

  std::filesystem::path pages_path() const { return root / pages_dir; }
  std::filesystem::path meta_path() const { return root / meta_dir; }
};

struct WikiPage {
  PageId id;
  std::string raw_text;
  std::vector<Revision> revisions;  // ascending by timestamp

  // Path segments as found on disk (before lowercasing), without ".txt".
  std::vector<std::string> file_segments;
  bool synthetic_revision = false;  // revisions came from the file mtime

  friend bool operator==(const WikiPage&, const WikiPage&) = default;
};

struct LoadedWiki {
  std::vector<WikiPage> pages;  // sorted by id
  std::vector<Issue> issues;    // sorted
};

// Files whose stem starts with '_' (namespace templates such as
// `_template.txt`) are engine metadata and are not loaded as pages.
bool is_template_file(const std::filesystem::path& p);

// Reads every page under root.pages_path(). Throws rwiki::Error if the pages
// directory is missing. `workers` > 1 reads files concurrently; the result is
// identical for any worker count.
LoadedWiki load_wiki(const WikiRoot& root, unsigned workers = 1);

struct ChangeLog {
  std::vector<Revision> revisions;  // ascending, ties keep line order
  std::vector<Issue> issues;
};

// Tab-separated records: timestamp, ip, type letter (C/E/e/D), page id,
// user, summary. Extra trailing fields are ignored.
ChangeLog parse_changes(std::string_view content, std::string_view where = {});

// meta/<path>.changes for `page`; empty when the file is absent.
ChangeLog load_changes(const WikiRoot& root, const PageId& page);

std::filesystem::path page_relative_path(const PageId& id, std::string_view extension);

struct ScaffoldReport {
  // Paths relative to the wiki root, in creation order.
  std::vector<std::filesystem::path> pages;
  std::vector<std::filesystem::path> templates;
  std::vector<std::filesystem::path> directories;
};

// Creates the research wiki skeleton under target/pages (plus an empty
// target/meta). Refuses a non-empty target without writing anything.
ScaffoldReport scaffold(const std::filesystem::path& target, std::string_view program_name = "program");

}  // namespace rwiki
