#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rwiki/markup.hpp"
#include "rwiki/page_id.hpp"
#include "rwiki/sheets.hpp"
#include "rwiki/wiki_store.hpp"

namespace rwiki::graph {

struct EdgeFlags {
  bool bold = false;
  markup::ReviewPrefix prefix = markup::ReviewPrefix::none;
  friend bool operator==(const EdgeFlags&, const EdgeFlags&) = default;
};

using EdgeKey = std::pair<PageId, PageId>;  // (source, target)

struct PageLinks {
  PageId page;
  std::vector<markup::InternalLink> links;
};

// Directed page-to-page links, one edge per (source, target). Repeated links
// merge: bold if any occurrence is bold, prefix is the strongest seen.
class LinkGraph {
 public:
  LinkGraph() = default;
  explicit LinkGraph(std::span<const PageLinks> pages);

  const std::set<PageId>& nodes() const { return nodes_; }
  const std::set<PageId>& pages() const { return pages_; }
  const std::set<PageId>& dangling() const { return dangling_; }
  const std::map<EdgeKey, EdgeFlags>& edges() const { return edges_; }

  bool has_page(const PageId& id) const { return pages_.contains(id); }

  // Sources of edges into `target`, sorted.
  std::span<const PageId> backlinks(const PageId& target) const;
  std::span<const PageId> outlinks(const PageId& source) const;

  friend bool operator==(const LinkGraph& a, const LinkGraph& b) { return a.nodes_ == b.nodes_ && a.pages_ == b.pages_ && a.edges_ == b.edges_; }

 private:
  std::set<PageId> nodes_;
  std::set<PageId> pages_;
  std::set<PageId> dangling_;
  std::map<EdgeKey, EdgeFlags> edges_;
  std::map<PageId, std::vector<PageId>> inbound_;
  std::map<PageId, std::vector<PageId>> outbound_;
};

LinkGraph build_graph(std::span<const PageLinks> pages);

std::vector<PageId> backlinks(const LinkGraph& g, const PageId& page);

// Every node of the given entity kind (page file or dangling link target),
// mapped to the reading sheets that link to it.
std::map<PageId, std::vector<PageId>> entity_index(const LinkGraph& g, sheets::EntityKind kind);

enum class Severity { error, warning, info };
std::string_view to_string(Severity s);

enum class Rule {
  R01,  // page id not a valid slug
  R02,  // link to a nonexistent page
  R03,  // reading sheet without metadata table (or without authors)
  R04,  // reviewed sheet without summary
  R05,  // entity page without backlinks
  R06,  // experiment ends before it starts
  R07,  // collection subset whose parent page is missing
  R08,  // review listing disagrees with link prefixes
};
std::string_view to_string(Rule r);

struct Diagnostic {
  Severity severity = Severity::warning;
  PageId page;
  Rule rule = Rule::R01;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// `<severity>\t<rule>\t<page-id>\t<message>`
std::string render(const Diagnostic& d);

struct LintInput {
  std::span<const WikiPage> pages;
  const LinkGraph& graph;
  std::span<const sheets::ReadingSheet> reading;
  std::span<const sheets::CollectionSheet> collections;
  std::span<const sheets::ExperimentSheet> experiments;
};

// Sorted by page id, then rule, then message.
std::vector<Diagnostic> lint(const LintInput& in);

}  // namespace rwiki::graph
