#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rwiki/error.hpp"

// Venue normalization against ranking registries by token-set Jaccard match.
namespace rwiki::biblio {

inline constexpr double kDefaultThreshold = 0.5;

enum class RegistryKind { core_conference, scimago_journal };

struct RegistryEntry {
  std::string name;
  std::string acronym;  // empty when absent
  std::string value;    // CORE rank, or h-index digits for journals

  friend bool operator==(const RegistryEntry&, const RegistryEntry&) = default;
};

struct VenueRegistry {
  RegistryKind kind = RegistryKind::core_conference;
  std::vector<RegistryEntry> entries;
  std::vector<Issue> issues;
};

// CORE: header `name,acronym,rank`. Scimago: header `title,h_index`.
// Malformed rows are skipped with an issue; duplicate names keep the first.
VenueRegistry parse_registry(RegistryKind kind, std::string_view content, std::string_view where = {});
// Throws rwiki::Error when the file cannot be read or the header is wrong.
VenueRegistry load_registry(RegistryKind kind, const std::filesystem::path& path);

// Strips a leading "Proceedings of (the)", ordinal tokens (41st, Tenth, ...)
// and everything from the first comma on. Throws rwiki::Error when nothing
// is left.
std::string extract_conference_name(std::string_view proceedings);

using TokenSet = std::set<std::string>;

// Lowercase alphanumeric runs.
TokenSet tokenize(std::string_view s);

// |a ∩ b| / |a ∪ b|; 0 when both are empty.
double jaccard(const TokenSet& a, const TokenSet& b);
std::size_t intersection_size(const TokenSet& a, const TokenSet& b);

struct VenueMatch {
  std::string raw;
  std::string extracted_name;
  std::optional<RegistryEntry> matched_entry;  // best entry with a positive score
  double score = 0.0;
  bool accepted = false;
};

// Best entry by Jaccard over name tokens; a case-insensitive acronym hit
// scores 1. Ties go to the larger token intersection, then the smaller name.
// Throws rwiki::Error unless 0 < threshold <= 1.
VenueMatch match_venue(std::string_view name, const VenueRegistry& registry, double threshold = kDefaultThreshold);

// Manual `name,rank_or_hindex` corrections, keyed case-insensitively.
class Overrides {
 public:
  static Overrides parse(std::string_view content, std::string_view where = {});
  static Overrides load(const std::filesystem::path& path);

  std::optional<std::string> find(std::string_view name) const;
  bool empty() const { return values_.empty(); }
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::map<std::string, std::string> values_;
  std::vector<Issue> issues_;
};

// Conference proceedings text: extract the name, then match. An override on
// the raw or extracted name wins with score 1.
VenueMatch match_conference(std::string_view proceedings, const VenueRegistry& registry, double threshold,
                            const Overrides* overrides = nullptr);
VenueMatch match_journal(std::string_view title, const VenueRegistry& registry, double threshold,
                         const Overrides* overrides = nullptr);

}  // namespace rwiki::biblio
