#include "rwiki/graph.hpp"

#include <algorithm>

namespace rwiki::graph {

LinkGraph::LinkGraph(std::span<const PageLinks> pages) {
  for (const auto& p : pages) {
    pages_.insert(p.page);
    nodes_.insert(p.page);
  }
  for (const auto& p : pages) {
    for (const auto& link : p.links) {
      auto& flags = edges_[{p.page, link.target}];
      flags.bold = flags.bold || link.bold;
      flags.prefix = std::max(flags.prefix, link.prefix);
      nodes_.insert(link.target);
      if (!pages_.contains(link.target)) dangling_.insert(link.target);
    }
  }
  // Map iteration is ordered by (source, target), so both lists come out sorted.
  for (const auto& [key, flags] : edges_) {
    inbound_[key.second].push_back(key.first);
    outbound_[key.first].push_back(key.second);
  }
}

std::span<const PageId> LinkGraph::backlinks(const PageId& target) const {
  auto it = inbound_.find(target);
  if (it == inbound_.end()) return {};
  return it->second;
}

std::span<const PageId> LinkGraph::outlinks(const PageId& source) const {
  auto it = outbound_.find(source);
  if (it == outbound_.end()) return {};
  return it->second;
}

LinkGraph build_graph(std::span<const PageLinks> pages) { return LinkGraph(pages); }

std::vector<PageId> backlinks(const LinkGraph& g, const PageId& page) {
  auto s = g.backlinks(page);
  return {s.begin(), s.end()};
}

std::map<PageId, std::vector<PageId>> entity_index(const LinkGraph& g, sheets::EntityKind kind) {
  std::map<PageId, std::vector<PageId>> index;
  const auto wanted = sheets::page_kind_of(kind);
  for (const auto& node : g.nodes()) {
    if (sheets::classify_page(node) != wanted) continue;
    auto& sheets_list = index[node];
    for (const auto& src : g.backlinks(node))
      if (g.has_page(src) && sheets::classify_page(src) == sheets::PageKind::reading_sheet) sheets_list.push_back(src);
  }
  return index;
}

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::error:
      return "error";
    case Severity::warning:
      return "warning";
    case Severity::info:
      break;
  }
  return "info";
}

std::string_view to_string(Rule r) {
  static constexpr std::string_view kNames[] = {"R01", "R02", "R03", "R04", "R05", "R06", "R07", "R08"};
  return kNames[static_cast<int>(r)];
}

std::string render(const Diagnostic& d) {
  std::string out;
  out += to_string(d.severity);
  out += '\t';
  out += to_string(d.rule);
  out += '\t';
  out += d.page.str();
  out += '\t';
  out += d.message;
  return out;
}

}  // namespace rwiki::graph
