#include <algorithm>
#include <tuple>

#include "rwiki/graph.hpp"
#include "rwiki/text.hpp"

namespace rwiki::graph {
namespace {

using markup::ReviewPrefix;
using sheets::PageKind;

void check_status_listing(const LintInput& in, std::string_view status_page, ReviewPrefix prefix,
                          std::vector<Diagnostic>& out) {
  auto status_id = PageId::of(status_page);
  if (!in.graph.has_page(status_id)) return;

  std::set<PageId> listed;
  for (const auto& t : in.graph.outlinks(status_id))
    if (sheets::classify_page(t) == PageKind::reading_sheet) listed.insert(t);
  // A page that only embeds a backlinks listing has no explicit entries to compare.
  if (listed.empty()) return;

  std::set<PageId> prefixed;
  for (const auto& [key, flags] : in.graph.edges())
    if (flags.prefix == prefix && sheets::classify_page(key.second) == PageKind::reading_sheet)
      prefixed.insert(key.second);

  const auto label = std::string(markup::to_string(prefix));
  for (const auto& id : listed)
    if (!prefixed.contains(id))
      out.push_back({Severity::warning, id, Rule::R08,
                     "listed on " + status_id.str() + " but never linked with the " + label + " prefix"});
  for (const auto& id : prefixed)
    if (!listed.contains(id))
      out.push_back({Severity::warning, id, Rule::R08,
                     "linked with the " + label + " prefix but missing from " + status_id.str()});
}

}  // namespace

std::vector<Diagnostic> lint(const LintInput& in) {
  std::vector<Diagnostic> out;

  for (const auto& page : in.pages) {
    for (const auto& seg : page.file_segments) {
      if (!markup::is_slug(seg)) {
        out.push_back({Severity::error, page.id, Rule::R01, "'" + seg + "' is not a lowercase dash-separated slug"});
        break;
      }
    }
  }

  for (const auto& [key, flags] : in.graph.edges())
    if (!in.graph.has_page(key.second))
      out.push_back({Severity::warning, key.first, Rule::R02, "link to nonexistent page " + key.second.str()});

  for (const auto& sheet : in.reading) {
    if (!sheet.has_metadata_table) {
      out.push_back({Severity::error, sheet.page_id, Rule::R03, "reading sheet has no metadata table"});
    } else if (sheet.authors.empty()) {
      out.push_back({Severity::warning, sheet.page_id, Rule::R03, "metadata table lists no authors"});
    }
    if (sheet.status == sheets::ReviewStatus::reviewed && !sheet.summary)
      out.push_back({Severity::warning, sheet.page_id, Rule::R04, "reviewed publication has no summary"});
  }

  for (const auto& id : in.graph.pages()) {
    if (!sheets::entity_kind_of(sheets::classify_page(id))) continue;
    if (in.graph.backlinks(id).empty())
      out.push_back({Severity::warning, id, Rule::R05, "entity page has no backlinks"});
  }

  for (const auto& exp : in.experiments) {
    if (text::iequals(text::trim(exp.end), "ongoing")) continue;
    auto start = sheets::parse_datetime(exp.start);
    auto end = sheets::parse_datetime(exp.end);
    if (start && end && *end < *start)
      out.push_back({Severity::warning, exp.page_id, Rule::R06,
                     "End Date " + std::string(text::trim(exp.end)) + " is earlier than Start Date " +
                         std::string(text::trim(exp.start))});
  }

  for (const auto& c : in.collections)
    if (c.source.parent && !in.graph.has_page(*c.source.parent))
      out.push_back({Severity::warning, c.page_id, Rule::R07, "parent collection " + c.source.parent->str() + " does not exist"});

  for (const auto& [key, flags] : in.graph.edges()) {
    if (!sheets::is_bibliography_index(key.first)) continue;
    if (sheets::classify_page(key.second) != PageKind::reading_sheet) continue;
    if (flags.bold && flags.prefix != ReviewPrefix::none)
      out.push_back({Severity::warning, key.second, Rule::R08,
                     "shown as reviewed (bold) and " + std::string(markup::to_string(flags.prefix)) + " on " +
                         key.first.str()});
  }
  check_status_listing(in, markup::kInReviewPage, ReviewPrefix::in_review, out);
  check_status_listing(in, markup::kToReviewPage, ReviewPrefix::to_review, out);

  std::sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.page, a.rule, a.message, a.severity) < std::tie(b.page, b.rule, b.message, b.severity);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rwiki::graph
