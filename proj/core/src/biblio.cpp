#include "rwiki/biblio.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

#include "rwiki/csv.hpp"
#include "rwiki/text.hpp"

namespace rwiki::biblio {
namespace {

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

std::string name_key(std::string_view s) { return text::lower(text::squash_spaces(s)); }

bool is_nonneg_integer(std::string_view s) {
  if (s.empty()) return false;
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc{} && p == s.data() + s.size() && v >= 0;
}

bool is_ordinal(std::string_view token) {
  static constexpr std::string_view kSpelled[] = {
      "first",   "second",   "third",     "fourth",    "fifth",     "sixth",    "seventh",
      "eighth",  "ninth",    "tenth",     "eleventh",  "twelfth",   "thirteenth", "fourteenth",
      "fifteenth", "sixteenth", "seventeenth", "eighteenth", "nineteenth", "twentieth"};
  for (auto s : kSpelled)
    if (text::iequals(token, s)) return true;
  std::size_t digits = 0;
  while (digits < token.size() && token[digits] >= '0' && token[digits] <= '9') ++digits;
  if (digits == 0 || token.size() != digits + 2) return false;
  auto suffix = text::lower(token.substr(digits));
  return suffix == "st" || suffix == "nd" || suffix == "rd" || suffix == "th";
}

// One pass of the three rules.
std::string extract_once(std::string_view s) {
  const auto squashed = text::squash_spaces(s);
  auto words = text::split(squashed, ' ');
  std::size_t start = 0;
  if (words.size() >= 2 && text::iequals(words[0], "proceedings") && text::iequals(words[1], "of")) {
    start = 2;
    if (words.size() > 2 && text::iequals(words[2], "the")) start = 3;
  }
  std::vector<std::string> kept;
  for (std::size_t i = start; i < words.size(); ++i)
    if (!words[i].empty() && !is_ordinal(words[i])) kept.emplace_back(words[i]);
  auto joined = text::join(kept, " ");
  if (auto comma = joined.find(','); comma != std::string::npos) joined.resize(comma);
  return std::string(text::trim(joined));
}

VenueMatch from_override(std::string_view raw, std::string_view extracted, const Overrides* overrides) {
  VenueMatch m;
  if (!overrides) return m;
  auto hit = overrides->find(raw);
  if (!hit) hit = overrides->find(extracted);
  if (!hit) return m;
  m.raw = std::string(raw);
  m.extracted_name = std::string(extracted);
  m.matched_entry = RegistryEntry{std::string(extracted), {}, *hit};
  m.score = 1.0;
  m.accepted = true;
  return m;
}

}  // namespace

VenueRegistry parse_registry(RegistryKind kind, std::string_view content, std::string_view where) {
  VenueRegistry reg;
  reg.kind = kind;
  auto rows = csv::parse(content);
  const bool core = kind == RegistryKind::core_conference;
  const std::vector<std::string> header = core ? std::vector<std::string>{"name", "acronym", "rank"}
                                               : std::vector<std::string>{"title", "h_index"};
  if (rows.empty()) {
    reg.issues.push_back({std::string(where), "registry file is empty"});
    return reg;
  }
  auto& head = rows.front().fields;
  bool header_ok = head.size() == header.size();
  for (std::size_t i = 0; header_ok && i < head.size(); ++i)
    header_ok = text::iequals(text::trim(head[i]), header[i]);
  if (!header_ok) throw Error(std::string(where) + ": expected header '" + text::join(header, ",") + "'");

  std::set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    auto at = std::string(where) + ":" + std::to_string(row.line);
    if (!row.well_formed || row.fields.size() != header.size()) {
      reg.issues.push_back({at, "malformed registry row, skipped"});
      continue;
    }
    RegistryEntry e;
    e.name = text::squash_spaces(row.fields[0]);
    if (core) {
      e.acronym = std::string(text::trim(row.fields[1]));
      e.value = std::string(text::trim(row.fields[2]));
    } else {
      e.value = std::string(text::trim(row.fields[1]));
    }
    if (e.name.empty() || e.value.empty() || (!core && !is_nonneg_integer(e.value))) {
      reg.issues.push_back({at, "malformed registry row, skipped"});
      continue;
    }
    if (!seen.insert(name_key(e.name)).second) {
      reg.issues.push_back({at, "duplicate entry '" + e.name + "', keeping the first"});
      continue;
    }
    reg.entries.push_back(std::move(e));
  }
  return reg;
}

VenueRegistry load_registry(RegistryKind kind, const std::filesystem::path& path) {
  return parse_registry(kind, read_all(path), path.generic_string());
}

std::string extract_conference_name(std::string_view proceedings) {
  std::string current(text::trim(proceedings));
  for (;;) {
    auto next = extract_once(current);
    if (next == current) break;
    current = std::move(next);
  }
  if (current.empty()) throw Error("no conference name left in '" + std::string(proceedings) + "'");
  return current;
}

TokenSet tokenize(std::string_view s) {
  auto tokens = text::alnum_tokens(s);
  return TokenSet(tokens.begin(), tokens.end());
}

std::size_t intersection_size(const TokenSet& a, const TokenSet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

double jaccard(const TokenSet& a, const TokenSet& b) {
  const auto inter = intersection_size(a, b);
  const auto uni = a.size() + b.size() - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

VenueMatch match_venue(std::string_view name, const VenueRegistry& registry, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) throw Error("match threshold must lie in (0, 1]");
  VenueMatch m;
  m.raw = std::string(name);
  m.extracted_name = std::string(text::trim(name));
  const auto tokens = tokenize(name);
  const auto trimmed = text::trim(name);

  const RegistryEntry* best = nullptr;
  double best_score = 0.0;
  std::size_t best_inter = 0;
  for (const auto& e : registry.entries) {
    const auto entry_tokens = tokenize(e.name);
    const auto inter = intersection_size(tokens, entry_tokens);
    double score = jaccard(tokens, entry_tokens);
    if (!e.acronym.empty() && text::iequals(trimmed, e.acronym)) score = 1.0;
    if (score <= 0.0) continue;
    if (!best || std::tie(score, inter) > std::tie(best_score, best_inter) ||
        (score == best_score && inter == best_inter && e.name < best->name)) {
      best = &e;
      best_score = score;
      best_inter = inter;
    }
  }
  if (best) {
    m.matched_entry = *best;
    m.score = best_score;
    m.accepted = best_score >= threshold;
  }
  return m;
}

Overrides Overrides::parse(std::string_view content, std::string_view where) {
  Overrides o;
  auto rows = csv::parse(content);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (r == 0 && row.fields.size() == 2 && text::iequals(text::trim(row.fields[0]), "name")) continue;
    if (!row.well_formed || row.fields.size() != 2 || text::trim(row.fields[0]).empty()) {
      o.issues_.push_back({std::string(where) + ":" + std::to_string(row.line), "malformed override row, skipped"});
      continue;
    }
    o.values_.emplace(name_key(row.fields[0]), std::string(text::trim(row.fields[1])));
  }
  return o;
}

Overrides Overrides::load(const std::filesystem::path& path) { return parse(read_all(path), path.generic_string()); }

std::optional<std::string> Overrides::find(std::string_view name) const {
  auto it = values_.find(name_key(name));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

VenueMatch match_conference(std::string_view proceedings, const VenueRegistry& registry, double threshold,
                            const Overrides* overrides) {
  std::string extracted;
  try {
    extracted = extract_conference_name(proceedings);
  } catch (const Error&) {
    extracted = std::string(text::trim(proceedings));
  }
  if (auto o = from_override(proceedings, extracted, overrides); o.accepted) return o;
  auto m = match_venue(extracted, registry, threshold);
  m.raw = std::string(proceedings);
  return m;
}

VenueMatch match_journal(std::string_view title, const VenueRegistry& registry, double threshold,
                         const Overrides* overrides) {
  auto trimmed = text::trim(title);
  if (auto o = from_override(title, trimmed, overrides); o.accepted) return o;
  return match_venue(trimmed, registry, threshold);
}

}  // namespace rwiki::biblio
