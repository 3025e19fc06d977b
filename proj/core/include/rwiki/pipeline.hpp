#pragma once

#include <filesystem>
#include <vector>

#include "rwiki/analysis.hpp"
#include "rwiki/biblio.hpp"
#include "rwiki/graph.hpp"
#include "rwiki/markup.hpp"
#include "rwiki/sheets.hpp"
#include "rwiki/wiki_store.hpp"

// End-to-end ingestion: load, parse, link, extract. Per-page stages run on
// `workers` threads; every result is merged in page-id order, so the output
// does not depend on the worker count.
namespace rwiki::pipeline {

struct Wiki {
  WikiRoot root;
  std::vector<WikiPage> pages;          // sorted by id
  std::vector<markup::Blocks> blocks;   // parallel to pages
  std::vector<graph::PageLinks> links;  // parallel to pages
  graph::LinkGraph graph;
  std::vector<sheets::ReadingSheet> reading;
  std::vector<sheets::CollectionSheet> collections;
  std::vector<sheets::ExperimentSheet> experiments;
  std::vector<Issue> issues;

  const WikiPage* find(const PageId& id) const;
};

Wiki ingest(const WikiRoot& root, unsigned workers = 1);

std::vector<graph::Diagnostic> lint(const Wiki& wiki);

// Entity display names: the entity page's top heading, else the first label
// used for it on a reading sheet, else its last id segment.
analysis::DisplayNames display_names(const Wiki& wiki);

struct Registries {
  const biblio::VenueRegistry* core = nullptr;
  const biblio::VenueRegistry* scimago = nullptr;
  const biblio::Overrides* overrides = nullptr;
  double threshold = biblio::kDefaultThreshold;
};

analysis::VenueMatches match_venues(const Wiki& wiki, const analysis::DisplayNames& names, const Registries& reg);

std::vector<analysis::BibRecord> bibliography(const Wiki& wiki, const Registries& reg);

analysis::Outputs analyze(const Wiki& wiki, const Registries& reg, std::string_view changes_namespace);

}  // namespace rwiki::pipeline
