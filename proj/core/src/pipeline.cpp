#include "rwiki/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "rwiki/text.hpp"

namespace rwiki::pipeline {
namespace {

template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
}

std::string top_heading(const markup::Blocks& blocks) {
  for (const auto& b : blocks)
    if (b.kind == markup::BlockKind::heading) return std::string(text::trim(markup::span_text(b.spans)));
  return {};
}

}  // namespace

const WikiPage* Wiki::find(const PageId& id) const {
  auto it = std::lower_bound(pages.begin(), pages.end(), id, [](const WikiPage& p, const PageId& k) { return p.id < k; });
  return it != pages.end() && it->id == id ? &*it : nullptr;
}

Wiki ingest(const WikiRoot& root, unsigned workers) {
  Wiki w;
  w.root = root;
  auto loaded = load_wiki(root, workers);
  w.pages = std::move(loaded.pages);
  w.issues = std::move(loaded.issues);

  const auto n = w.pages.size();
  w.blocks.resize(n);
  w.links.resize(n);
  parallel_for(n, workers, [&](std::size_t i) {
    w.blocks[i] = markup::parse_page(w.pages[i].raw_text);
    w.links[i] = {w.pages[i].id, markup::extract_links(w.blocks[i], w.pages[i].id)};
  });
  w.graph = graph::build_graph(w.links);

  std::map<PageId, std::vector<markup::InternalLink>> inbound;
  for (const auto& pl : w.links)
    for (const auto& l : pl.links) inbound[l.target].push_back(l);

  std::vector<PageId> ids;
  for (const auto& p : w.pages) ids.push_back(p.id);

  std::vector<std::size_t> reading_idx, collection_idx, experiment_idx;
  for (std::size_t i = 0; i < n; ++i) {
    switch (sheets::classify_page(w.pages[i].id)) {
      case sheets::PageKind::reading_sheet:
        reading_idx.push_back(i);
        break;
      case sheets::PageKind::collection_page:
        collection_idx.push_back(i);
        break;
      case sheets::PageKind::experiment_page:
        if (sheets::is_experiment_root(w.pages[i].id)) experiment_idx.push_back(i);
        break;
      default:
        break;
    }
  }

  static const std::vector<markup::InternalLink> kNone;
  w.reading.resize(reading_idx.size());
  parallel_for(reading_idx.size(), workers, [&](std::size_t k) {
    const auto i = reading_idx[k];
    auto it = inbound.find(w.pages[i].id);
    const auto& in = it == inbound.end() ? kNone : it->second;
    w.reading[k] = sheets::extract_reading_sheet(w.pages[i], w.blocks[i], in);
  });
  w.collections.resize(collection_idx.size());
  parallel_for(collection_idx.size(), workers, [&](std::size_t k) {
    const auto i = collection_idx[k];
    w.collections[k] = sheets::extract_collection_sheet(w.pages[i], w.blocks[i]);
  });
  w.experiments.resize(experiment_idx.size());
  parallel_for(experiment_idx.size(), workers, [&](std::size_t k) {
    const auto i = experiment_idx[k];
    w.experiments[k] = sheets::extract_experiment_sheet(w.pages[i], w.blocks[i], ids);
  });

  auto take = [&](auto& list) {
    for (auto& s : list)
      for (auto& issue : s.issues) w.issues.push_back(issue);
  };
  take(w.reading);
  take(w.collections);
  take(w.experiments);
  std::sort(w.issues.begin(), w.issues.end());
  return w;
}

std::vector<graph::Diagnostic> lint(const Wiki& wiki) {
  return graph::lint({wiki.pages, wiki.graph, wiki.reading, wiki.collections, wiki.experiments});
}

analysis::DisplayNames display_names(const Wiki& wiki) {
  analysis::DisplayNames names;
  for (const auto& sheet : wiki.reading)
    for (const auto& [id, label] : sheet.link_labels) names.emplace(id, label);  // first label wins
  for (std::size_t i = 0; i < wiki.pages.size(); ++i) {
    if (!sheets::entity_kind_of(sheets::classify_page(wiki.pages[i].id))) continue;
    auto heading = top_heading(wiki.blocks[i]);
    // Unexpanded template placeholders like @!!PAGE@ are not names.
    if (!heading.empty() && heading.find('@') == std::string::npos) names[wiki.pages[i].id] = heading;
  }
  return names;
}

analysis::VenueMatches match_venues(const Wiki& wiki, const analysis::DisplayNames& names, const Registries& reg) {
  analysis::VenueMatches matches;
  for (const auto& sheet : wiki.reading) {
    for (const auto& venue : sheet.venues) {
      if (matches.contains(venue.page)) continue;
      auto it = names.find(venue.page);
      const std::string raw = it != names.end() ? it->second : std::string(venue.page.name());
      static const biblio::VenueRegistry kEmpty;
      if (venue.kind == sheets::VenueKind::conference) {
        matches[venue.page] = biblio::match_conference(raw, reg.core ? *reg.core : kEmpty, reg.threshold, reg.overrides);
      } else {
        matches[venue.page] = biblio::match_journal(raw, reg.scimago ? *reg.scimago : kEmpty, reg.threshold, reg.overrides);
      }
    }
  }
  return matches;
}

std::vector<analysis::BibRecord> bibliography(const Wiki& wiki, const Registries& reg) {
  const auto names = display_names(wiki);
  return analysis::build_bib_table(wiki.reading, match_venues(wiki, names, reg), names);
}

analysis::Outputs analyze(const Wiki& wiki, const Registries& reg, std::string_view changes_namespace) {
  analysis::Outputs out;
  out.records = bibliography(wiki, reg);
  out.changes_namespace = std::string(changes_namespace);
  out.changes = analysis::changes_over_time(wiki.pages, changes_namespace);
  out.terms = analysis::term_frequency(wiki.reading);
  out.counts = analysis::histograms(out.records);
  return out;
}

}  // namespace rwiki::pipeline
