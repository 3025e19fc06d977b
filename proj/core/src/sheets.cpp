#include "rwiki/sheets.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>

#include "rwiki/text.hpp"

namespace rwiki::sheets {

using markup::Block;
using markup::BlockKind;
using markup::Blocks;
using markup::Cell;
using markup::InternalLink;

namespace {

constexpr std::string_view kBibliography = "phd:bibliography";

struct EntityInfo {
  EntityKind kind;
  std::string_view name;
  PageKind page;
};

constexpr EntityInfo kEntities[] = {
    {EntityKind::author, "author", PageKind::author_page},
    {EntityKind::year, "year", PageKind::year_page},
    {EntityKind::journal, "journal", PageKind::journal_page},
    {EntityKind::conference, "conference", PageKind::conference_page},
    {EntityKind::publisher, "publisher", PageKind::publisher_page},
    {EntityKind::institution, "institution", PageKind::institution_page},
};

// A row of the first table on a page, split into label and value cells.
struct MetaRow {
  std::string label;      // as written
  std::string key;        // canonical_label(label)
  std::span<const Cell> values;
  PageId source;

  std::string text() const {
    std::vector<std::string> parts;
    for (const auto& c : values)
      if (auto t = std::string(text::trim(markup::span_text(c.spans))); !t.empty()) parts.push_back(std::move(t));
    return text::join(parts, " ");
  }

  struct Ref {
    std::optional<PageId> page;
    std::string external;
    std::string label;
  };

  std::vector<Ref> refs() const {
    std::vector<Ref> out;
    for (const auto& c : values)
      for (const auto& s : c.spans) {
        if (s.kind == markup::Span::Kind::link) {
          if (auto id = markup::resolve_target(s.target, source)) out.push_back({*id, {}, s.text});
        } else if (s.kind == markup::Span::Kind::external_link) {
          out.push_back({std::nullopt, s.target, s.text});
        }
      }
    return out;
  }

  std::optional<PageId> first_link() const {
    for (auto& r : refs())
      if (r.page) return r.page;
    return std::nullopt;
  }
};

const Block* first_table(const Blocks& blocks, std::size_t* index = nullptr) {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].kind == BlockKind::table) {
      if (index) *index = i;
      return &blocks[i];
    }
  return nullptr;
}

std::vector<MetaRow> meta_rows(const Block& table, const PageId& source) {
  std::vector<MetaRow> rows;
  for (const auto& row : table.rows) {
    if (row.empty()) continue;
    auto label = std::string(text::trim(markup::span_text(row.front().spans)));
    if (label.empty()) continue;
    rows.push_back({label, canonical_label(label), std::span<const Cell>(row).subspan(1), source});
  }
  return rows;
}

std::string heading_text(const Block& b) { return std::string(text::trim(markup::span_text(b.spans))); }

// Table following the first heading whose canonical text is one of `names`,
// stopping at the next heading.
const Block* section_table(const Blocks& blocks, std::initializer_list<std::string_view> names) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].kind != BlockKind::heading) continue;
    auto key = canonical_label(heading_text(blocks[i]));
    if (std::find(names.begin(), names.end(), key) == names.end()) continue;
    for (std::size_t j = i + 1; j < blocks.size() && blocks[j].kind != BlockKind::heading; ++j)
      if (blocks[j].kind == BlockKind::table) return &blocks[j];
    return nullptr;
  }
  return nullptr;
}

std::vector<Note> sections_after(const Blocks& blocks, std::size_t start) {
  std::vector<Note> notes;
  for (std::size_t i = start; i < blocks.size(); ++i) {
    if (blocks[i].kind != BlockKind::heading) continue;
    std::size_t j = i + 1;
    while (j < blocks.size() && blocks[j].kind != BlockKind::heading) ++j;
    Blocks body(blocks.begin() + static_cast<std::ptrdiff_t>(i + 1), blocks.begin() + static_cast<std::ptrdiff_t>(j));
    notes.push_back({heading_text(blocks[i]), markup::strip_markup(body)});
    i = j - 1;
  }
  return notes;
}

std::vector<std::string> cell_texts(const std::vector<Cell>& row) {
  std::vector<std::string> out;
  for (const auto& c : row) out.emplace_back(text::trim(markup::span_text(c.spans)));
  return out;
}

bool is_header_row(const std::vector<Cell>& row) {
  return std::all_of(row.begin(), row.end(), [](const Cell& c) { return c.header; });
}

void add_field(std::vector<std::string>& fields, std::string key) {
  if (std::find(fields.begin(), fields.end(), key) == fields.end()) fields.push_back(std::move(key));
}

std::optional<std::string_view> reading_field(std::string_view key) {
  static constexpr std::pair<std::string_view, std::string_view> kAliases[] = {
      {"title", "title"},           {"author", "authors"},         {"authors", "authors"},
      {"author(s)", "authors"},     {"year", "year"},              {"conference", "conference"},
      {"proceedings", "conference"}, {"journal", "journal"},        {"institution", "institution"},
      {"publisher", "publisher"},
  };
  for (auto [alias, field] : kAliases)
    if (key == alias) return field;
  return std::nullopt;
}

// Plain-text metadata values still name an entity: derive its page id.
std::vector<MetaRow::Ref> entity_refs(const MetaRow& row, EntityKind kind, bool split_list) {
  auto refs = row.refs();
  std::erase_if(refs, [](const MetaRow::Ref& r) { return !r.page; });
  if (!refs.empty()) return refs;
  auto value = row.text();
  std::vector<std::string_view> names;
  if (split_list) {
    for (auto part : text::split(value, ';'))
      for (auto name : text::split(part, ',')) names.push_back(name);
  } else {
    names.push_back(value);
  }
  for (auto name : names) {
    name = text::trim(name);
    if (std::none_of(name.begin(), name.end(), text::is_alnum)) continue;
    refs.push_back({PageId::of(entity_namespace(kind) + ":" + markup::slugify(name)), {}, std::string(name)});
  }
  return refs;
}

}  // namespace

std::string_view to_string(PageKind k) {
  switch (k) {
    case PageKind::reading_sheet:
      return "reading-sheet";
    case PageKind::author_page:
      return "author-page";
    case PageKind::year_page:
      return "year-page";
    case PageKind::journal_page:
      return "journal-page";
    case PageKind::conference_page:
      return "conference-page";
    case PageKind::publisher_page:
      return "publisher-page";
    case PageKind::institution_page:
      return "institution-page";
    case PageKind::collection_page:
      return "collection-page";
    case PageKind::experiment_page:
      return "experiment-page";
    case PageKind::milestone_page:
      return "milestone-page";
    case PageKind::resource_page:
      return "resource-page";
    case PageKind::infopage:
      return "infopage";
    case PageKind::other:
      break;
  }
  return "other";
}

std::string_view to_string(EntityKind k) {
  for (const auto& e : kEntities)
    if (e.kind == k) return e.name;
  return "author";
}

std::optional<EntityKind> parse_entity_kind(std::string_view s) {
  for (const auto& e : kEntities)
    if (text::iequals(s, e.name)) return e.kind;
  return std::nullopt;
}

PageKind page_kind_of(EntityKind k) {
  for (const auto& e : kEntities)
    if (e.kind == k) return e.page;
  return PageKind::other;
}

std::optional<EntityKind> entity_kind_of(PageKind k) {
  for (const auto& e : kEntities)
    if (e.page == k) return e.kind;
  return std::nullopt;
}

std::string entity_namespace(EntityKind k) { return std::string(kBibliography) + ":" + std::string(to_string(k)); }

bool is_bibliography_index(const PageId& id) {
  return id.str() == kBibliography || id.is_under("phd:bibliography:list");
}

PageKind classify_page(const PageId& raw) {
  const PageId id = PageId::parse(raw.str()).value_or(raw);
  if (id.is_under(kBibliography)) {
    for (const auto& e : kEntities) {
      auto ns = std::string(kBibliography) + ":" + std::string(e.name);
      if (id.is_under(ns)) return e.page;
      if (id.str() == ns) return PageKind::other;  // alphabetical entity index
    }
    if (id.str() == "phd:bibliography:list" || id.is_under("phd:bibliography:list") ||
        id.str() == markup::kInReviewPage || id.str() == markup::kToReviewPage)
      return PageKind::other;
    return PageKind::reading_sheet;
  }
  if (id.is_under("phd:collections")) return PageKind::collection_page;
  if (id.is_under("phd:experiments")) return PageKind::experiment_page;
  if (id.is_under("phd:milestones")) return PageKind::milestone_page;
  if (id.is_under("phd:resources")) return PageKind::resource_page;
  if (id.is_under("infopages")) return PageKind::infopage;
  return PageKind::other;
}

bool is_experiment_root(const PageId& id) {
  return id.is_under("phd:experiments") && id.segments().size() == 3;
}

std::optional<Timestamp> parse_datetime(std::string_view s) {
  s = text::trim(s);
  auto num = [&](std::size_t pos, std::size_t len, int& out) {
    if (pos + len > s.size()) return false;
    auto [p, ec] = std::from_chars(s.data() + pos, s.data() + pos + len, out);
    return ec == std::errc{} && p == s.data() + pos + len;
  };
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
  if (s.size() < 10 || s[4] != '-' || s[7] != '-' || !num(0, 4, y) || !num(5, 2, mo) || !num(8, 2, d))
    return std::nullopt;
  if (s.size() > 10) {
    if ((s[10] != ' ' && s[10] != 'T') || s.size() < 16 || s[13] != ':' || !num(11, 2, h) || !num(14, 2, mi))
      return std::nullopt;
    if (s.size() > 16 && (s.size() != 19 || s[16] != ':' || !num(17, 2, sec))) return std::nullopt;
  }
  using namespace std::chrono;
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || sec > 59) return std::nullopt;
  auto tp = sys_days{ymd} + hours{h} + minutes{mi} + seconds{sec};
  return duration_cast<seconds>(tp.time_since_epoch()).count();
}

std::string_view to_string(ReviewStatus s) {
  switch (s) {
    case ReviewStatus::reviewed:
      return "reviewed";
    case ReviewStatus::in_review:
      return "in-review";
    case ReviewStatus::to_review:
      return "to-review";
    case ReviewStatus::listed:
      break;
  }
  return "listed";
}

ReviewStatus derive_status(std::span<const InternalLink> inbound) {
  bool bold = false;
  auto prefix = markup::ReviewPrefix::none;
  for (const auto& l : inbound) {
    if (!is_bibliography_index(l.source)) continue;
    bold = bold || l.bold;
    prefix = std::max(prefix, l.prefix);
  }
  if (bold) return ReviewStatus::reviewed;
  if (prefix == markup::ReviewPrefix::in_review) return ReviewStatus::in_review;
  if (prefix == markup::ReviewPrefix::to_review) return ReviewStatus::to_review;
  return ReviewStatus::listed;
}

std::string canonical_label(std::string_view label) {
  auto s = text::lower(text::squash_spaces(label));
  while (!s.empty() && s.back() == ':') s.pop_back();
  return std::string(text::trim(s));
}

ReadingSheet extract_reading_sheet(const WikiPage& page, const Blocks& blocks, std::span<const InternalLink> inbound) {
  ReadingSheet sheet;
  sheet.page_id = page.id;
  sheet.status = derive_status(inbound);

  std::size_t table_index = 0;
  const Block* table = first_table(blocks, &table_index);
  if (!table) {
    sheet.issues.push_back({page.id.str(), "reading sheet has no metadata table"});
    return sheet;
  }
  sheet.has_metadata_table = true;

  auto remember = [&](const MetaRow::Ref& r) {
    if (r.page && !r.label.empty()) sheet.link_labels.emplace_back(*r.page, r.label);
  };
  auto single = [&](const MetaRow& row, EntityKind kind) -> std::optional<PageId> {
    auto refs = entity_refs(row, kind, false);
    if (refs.empty()) return std::nullopt;
    remember(refs.front());
    return refs.front().page;
  };

  for (const auto& row : meta_rows(*table, page.id)) {
    auto field = reading_field(row.key);
    if (!field) {
      sheet.extra.push_back({row.label, row.text()});
      continue;
    }
    add_field(sheet.fields, std::string(*field));
    if (*field == "title") {
      sheet.title = row.text();
    } else if (*field == "authors") {
      for (auto& r : entity_refs(row, EntityKind::author, true)) {
        remember(r);
        sheet.authors.push_back(*r.page);
      }
    } else if (*field == "year") {
      if (auto id = single(row, EntityKind::year)) sheet.year = id;
    } else if (*field == "conference") {
      if (auto id = single(row, EntityKind::conference)) sheet.venues.push_back({*id, VenueKind::conference});
    } else if (*field == "journal") {
      if (auto id = single(row, EntityKind::journal)) sheet.venues.push_back({*id, VenueKind::journal});
    } else if (*field == "institution") {
      if (auto id = single(row, EntityKind::institution)) sheet.institution = id;
    } else if (*field == "publisher") {
      if (auto id = single(row, EntityKind::publisher)) sheet.publisher = id;
    }
  }
  std::stable_sort(sheet.venues.begin(), sheet.venues.end(),
                   [](const Venue& a, const Venue& b) { return a.kind < b.kind; });
  if (!sheet.venues.empty()) sheet.venue = sheet.venues.front();

  if (sheet.title.empty()) {
    for (const auto& b : blocks)
      if (b.kind == BlockKind::heading) {
        sheet.title = heading_text(b);
        break;
      }
  }
  if (sheet.title.empty()) sheet.title = std::string(page.id.name());

  std::size_t i = table_index + 1;
  for (; i < blocks.size() && blocks[i].kind != BlockKind::heading; ++i) {
    if (blocks[i].kind == BlockKind::paragraph && !sheet.summary) {
      auto s = markup::strip_markup(Blocks{blocks[i]});
      if (!text::trim(s).empty()) sheet.summary = std::string(text::trim(s));
    }
  }
  sheet.notes = sections_after(blocks, i);
  return sheet;
}

ReadingSheet extract_reading_sheet(const WikiPage& page, std::span<const InternalLink> inbound) {
  return extract_reading_sheet(page, markup::parse_page(page.raw_text), inbound);
}

CollectionSheet extract_collection_sheet(const WikiPage& page, const Blocks& blocks) {
  CollectionSheet sheet;
  sheet.page_id = page.id;
  const Block* table = first_table(blocks);
  if (!table) {
    sheet.issues.push_back({page.id.str(), "collection sheet has no metadata table"});
    return sheet;
  }
  sheet.has_metadata_table = true;

  for (const auto& b : blocks)
    if (b.kind == BlockKind::heading) {
      sheet.name = heading_text(b);
      break;
    }

  for (const auto& row : meta_rows(*table, page.id)) {
    if (row.key == "source") {
      add_field(sheet.fields, "source");
      auto refs = row.refs();
      auto internal = std::find_if(refs.begin(), refs.end(), [](auto& r) { return r.page.has_value(); });
      if (internal != refs.end()) {
        sheet.source.parent = internal->page;
      } else if (!refs.empty()) {
        sheet.source.url = refs.front().external;
      } else {
        sheet.source.url = row.text();
      }
    } else if (row.key == "paper") {
      add_field(sheet.fields, "paper");
      sheet.paper = row.text();
      sheet.paper_link = row.first_link();
    } else if (row.key == "date") {
      add_field(sheet.fields, "date");
      sheet.date = row.text();
    } else if (row.key == "size") {
      add_field(sheet.fields, "size");
      sheet.size = row.text();
    } else if (row.key == "name") {
      add_field(sheet.fields, "name");
      sheet.name = row.text();
    } else {
      add_field(sheet.fields, row.key);
      sheet.stats.push_back({row.label, row.text()});
    }
  }
  if (sheet.name.empty()) sheet.name = std::string(page.id.name());

  if (const Block* evals = section_table(blocks, {"evaluations", "evaluation"})) {
    for (const auto& row : evals->rows) {
      if (is_header_row(row)) continue;
      auto cells = cell_texts(row);
      if (cells.size() == 4) {
        sheet.evaluations.push_back({cells[0], cells[1], cells[2], cells[3]});
      } else {
        auto raw = text::join(cells, " | ");
        sheet.issues.push_back({page.id.str(), "evaluation row is not (task, metric, value, citation): " + raw});
        sheet.unparsed_evaluations.push_back(std::move(raw));
      }
    }
  }
  return sheet;
}

CollectionSheet extract_collection_sheet(const WikiPage& page) {
  return extract_collection_sheet(page, markup::parse_page(page.raw_text));
}

ExperimentSheet extract_experiment_sheet(const WikiPage& page, const Blocks& blocks,
                                         std::span<const PageId> all_page_ids) {
  ExperimentSheet sheet;
  sheet.page_id = page.id;
  for (const auto& id : all_page_ids)
    if (id.is_under(page.id)) sheet.logs.push_back(id);
  std::sort(sheet.logs.begin(), sheet.logs.end());

  const Block* table = first_table(blocks);
  if (!table) {
    sheet.issues.push_back({page.id.str(), "experiment sheet has no metadata table"});
    return sheet;
  }
  sheet.has_metadata_table = true;

  for (const auto& row : meta_rows(*table, page.id)) {
    const auto& k = row.key;
    if (k == "id") {
      sheet.label = row.text();
    } else if (k == "start date" || k == "start") {
      sheet.start = row.text();
    } else if (k == "end date" || k == "end") {
      sheet.end = row.text();
    } else if (k == "why do it?" || k == "why do it") {
      sheet.motivation = row.text();
    } else if (k == "main strengths" || k == "strengths") {
      sheet.strengths = row.text();
    } else if (k == "main weaknesses" || k == "weaknesses") {
      sheet.weaknesses = row.text();
    } else if (k == "test collection") {
      sheet.test_collection = row.first_link();
      if (!sheet.test_collection) {
        auto name = row.text();
        if (std::any_of(name.begin(), name.end(), text::is_alnum))
          sheet.test_collection = PageId::of("phd:collections:" + markup::slugify(name));
      }
    } else {
      sheet.unparsed_rows.push_back(row.label + ": " + row.text());
      continue;
    }
    add_field(sheet.fields, k.back() == '?' || k == "why do it" ? std::string("why do it?") : k);
  }

  for (const auto& b : blocks)
    if (b.kind == BlockKind::todo_item) sheet.todo.push_back({b.checked, std::string(text::trim(markup::span_text(b.spans)))});

  if (const Block* versions = section_table(blocks, {"versions", "model versions"})) {
    for (const auto& row : versions->rows) {
      if (is_header_row(row)) continue;
      auto cells = cell_texts(row);
      if (cells.size() >= 2) {
        std::vector<std::string> rest(cells.begin() + 1, cells.end());
        sheet.versions.push_back({cells[0], text::join(rest, " ")});
      } else {
        sheet.unparsed_rows.push_back(text::join(cells, " | "));
      }
    }
  }
  if (const Block* evals = section_table(blocks, {"evaluation", "evaluations"})) {
    for (const auto& row : evals->rows) {
      if (is_header_row(row)) continue;
      auto cells = cell_texts(row);
      if (cells.size() == 3) {
        sheet.evaluations.push_back({cells[0], cells[1], cells[2]});
      } else {
        sheet.unparsed_rows.push_back(text::join(cells, " | "));
      }
    }
  }
  for (const auto& note : sections_after(blocks, 0)) {
    auto key = canonical_label(note.heading);
    if (key == "challenges" || key == "dependencies" || key == "traces") sheet.deprecated_sections.push_back(note);
  }
  for (const auto& raw : sheet.unparsed_rows) sheet.issues.push_back({page.id.str(), "unrecognized row: " + raw});
  return sheet;
}

ExperimentSheet extract_experiment_sheet(const WikiPage& page, std::span<const PageId> all_page_ids) {
  return extract_experiment_sheet(page, markup::parse_page(page.raw_text), all_page_ids);
}

}  // namespace rwiki::sheets
