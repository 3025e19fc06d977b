#pragma once

// Reference implementations used by the tests. Written without the library's
// text helpers so that a shared bug cannot hide on both sides.

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "rwiki/biblio.hpp"
#include "rwiki/graph.hpp"

namespace rwiki::oracle {

inline bool ascii_alnum(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); }

inline char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c; }

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), ascii_lower);
  return s;
}

// Lowercase ASCII alphanumeric runs joined by '-'; empty when there are none.
inline std::string slug(const std::string& s) {
  std::string out;
  std::string run;
  for (char c : s + " ") {
    if (ascii_alnum(c)) {
      run += ascii_lower(c);
    } else if (!run.empty()) {
      out += (out.empty() ? "" : "-") + run;
      run.clear();
    }
  }
  return out;
}

inline std::set<std::string> token_set(const std::string& s) {
  std::set<std::string> out;
  static const std::regex word("[A-Za-z0-9]+");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), word); it != std::sregex_iterator(); ++it)
    out.insert(lower(it->str()));
  return out;
}

inline std::map<std::string, std::uint64_t> term_counts(const std::string& s) {
  std::map<std::string, std::uint64_t> out;
  static const std::regex word("[A-Za-z0-9]+");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), word); it != std::sregex_iterator(); ++it)
    ++out[lower(it->str())];
  return out;
}

struct Candidate {
  const biblio::RegistryEntry* entry = nullptr;
  std::size_t num = 0;  // score = num / den, compared exactly
  std::size_t den = 1;
  std::size_t inter = 0;
  double score() const { return double(num) / double(den); }
};

// Exhaustive argmax over every registry entry.
inline Candidate best_match(const std::string& name, const biblio::VenueRegistry& reg) {
  const auto a = token_set(name);
  Candidate best;
  for (const auto& e : reg.entries) {
    const auto b = token_set(e.name);
    std::size_t inter = 0;
    for (const auto& t : a) inter += b.count(t);
    Candidate c{&e, inter, a.size() + b.size() - inter, inter};
    if (!e.acronym.empty() && lower(name) == lower(e.acronym)) {
      c.num = 1;
      c.den = 1;
    }
    if (c.num == 0) continue;
    if (!best.entry) {
      best = c;
      continue;
    }
    auto lhs = c.num * best.den;
    auto rhs = best.num * c.den;
    if (lhs > rhs || (lhs == rhs && (c.inter > best.inter || (c.inter == best.inter && e.name < best.entry->name))))
      best = c;
  }
  return best;
}

// Sources of every link occurrence into `target`, by linear scan.
inline std::vector<PageId> scan_backlinks(std::span<const graph::PageLinks> pages, const PageId& target) {
  std::set<PageId> out;
  for (const auto& p : pages)
    for (const auto& l : p.links)
      if (l.target == target) out.insert(l.source);
  return {out.begin(), out.end()};
}

}  // namespace rwiki::oracle
