#include "rwiki/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <fmt/format.h>
#include <fstream>
#include <unordered_map>

#include "rwiki/csv.hpp"
#include "rwiki/svg.hpp"
#include "rwiki/text.hpp"

namespace fs = std::filesystem;

namespace rwiki::analysis {
namespace {

std::string display(const DisplayNames& names, const std::optional<PageId>& id) {
  if (!id) return {};
  if (auto it = names.find(*id); it != names.end()) return it->second;
  return std::string(id->name());
}

const sheets::Venue* first_venue(const sheets::ReadingSheet& s, sheets::VenueKind kind) {
  for (const auto& v : s.venues)
    if (v.kind == kind) return &v;
  return nullptr;
}

void sort_counts(std::vector<CountRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const CountRow& a, const CountRow& b) {
    return a.count != b.count ? a.count > b.count : a.value < b.value;
  });
}

// Months since 1970-01, so consecutive months are consecutive integers.
long month_index(Timestamp ts) {
  using namespace std::chrono;
  const sys_days day = floor<days>(sys_seconds{seconds{ts}});
  const year_month_day ymd{day};
  return (static_cast<int>(ymd.year()) - 1970) * 12L + static_cast<long>(static_cast<unsigned>(ymd.month())) - 1;
}

std::string namespace_file_stem(std::string_view ns) {
  std::string out(ns);
  std::replace(out.begin(), out.end(), ':', '-');
  return out;
}

}  // namespace

std::vector<std::string> BibRecord::row() const {
  return {title, author, year, conference, core, journal, scimago_h_index, institution, publisher, review};
}

std::vector<BibRecord> build_bib_table(std::span<const sheets::ReadingSheet> sheet_list, const VenueMatches& matches,
                                       const DisplayNames& names) {
  std::vector<const sheets::ReadingSheet*> ordered;
  for (const auto& s : sheet_list) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) { return a->page_id < b->page_id; });

  std::vector<BibRecord> records;
  for (const auto* s : ordered) {
    BibRecord r;
    r.title = s->title;
    std::vector<std::string> authors;
    for (const auto& a : s->authors) {
      auto name = display(names, a);
      std::replace(name.begin(), name.end(), '|', '/');
      authors.push_back(std::move(name));
    }
    r.author = text::join(authors, "|");
    r.year = display(names, s->year);

    auto fill = [&](const sheets::Venue* v, std::string& name_col, std::string& value_col) {
      if (!v) return;
      name_col = display(names, v->page);
      auto it = matches.find(v->page);
      if (it == matches.end()) return;
      const auto& m = it->second;
      if (m.accepted && m.matched_entry) {
        name_col = m.matched_entry->name;
        value_col = m.matched_entry->value;
      } else if (!m.extracted_name.empty()) {
        name_col = m.extracted_name;
      }
    };
    fill(first_venue(*s, sheets::VenueKind::conference), r.conference, r.core);
    fill(first_venue(*s, sheets::VenueKind::journal), r.journal, r.scimago_h_index);

    r.institution = display(names, s->institution);
    r.publisher = display(names, s->publisher);
    if (s->status == sheets::ReviewStatus::reviewed && s->summary) r.review = *s->summary;
    records.push_back(std::move(r));
  }
  return records;
}

std::string bib_csv(std::span<const BibRecord> records) {
  csv::Writer w;
  w.write_row(csv::Row(kBibHeader.begin(), kBibHeader.end()));
  for (const auto& r : records) w.write_row(r.row());
  return w.str();
}

std::string MonthBucket::label() const { return fmt::format("{:04d}-{:02d}", year, month); }

std::vector<MonthBucket> changes_over_time(std::span<const WikiPage> pages, std::string_view ns, TimeRange range) {
  std::map<long, std::uint64_t> counts;
  for (const auto& p : pages) {
    if (!p.id.is_under(ns)) continue;
    for (const auto& r : p.revisions) {
      if (range.from && r.timestamp < *range.from) continue;
      if (range.to && r.timestamp >= *range.to) continue;
      ++counts[month_index(r.timestamp)];
    }
  }
  std::vector<MonthBucket> series;
  if (counts.empty()) return series;
  std::uint64_t cumulative = 0;
  for (long m = counts.begin()->first; m <= counts.rbegin()->first; ++m) {
    MonthBucket b;
    b.year = 1970 + static_cast<int>(m / 12);
    b.month = static_cast<unsigned>(m % 12) + 1;
    if (auto it = counts.find(m); it != counts.end()) b.count = it->second;
    cumulative += b.count;
    b.cumulative = cumulative;
    series.push_back(b);
  }
  return series;
}

std::string notes_corpus(std::span<const sheets::ReadingSheet> sheet_list) {
  std::vector<std::string> parts;
  for (const auto& s : sheet_list) {
    if (s.summary) parts.push_back(*s.summary);
    for (const auto& n : s.notes) parts.push_back(n.text);
  }
  return text::join(parts, "\n");
}

TermFreq term_frequency(std::string_view input) {
  std::unordered_map<std::string, std::uint64_t> counts;
  for (auto& t : text::alnum_tokens(input)) ++counts[std::move(t)];
  TermFreq out;
  out.reserve(counts.size());
  for (auto& [term, n] : counts) out.push_back({term, n});
  std::sort(out.begin(), out.end(), [](const TermCount& a, const TermCount& b) {
    return a.frequency != b.frequency ? a.frequency > b.frequency : a.term < b.term;
  });
  return out;
}

TermFreq term_frequency(std::span<const sheets::ReadingSheet> sheet_list) {
  return term_frequency(notes_corpus(sheet_list));
}

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::author:
      return "author";
    case Dimension::conference:
      return "conference";
    case Dimension::journal:
      return "journal";
    case Dimension::year:
      break;
  }
  return "year";
}

std::vector<CountRow> counts_by(std::span<const BibRecord> records, Dimension d) {
  std::map<std::string, std::uint64_t> counts;
  for (const auto& r : records) {
    switch (d) {
      case Dimension::author:
        if (!r.author.empty())
          for (auto name : text::split(r.author, '|')) ++counts[std::string(name)];
        break;
      case Dimension::conference:
        if (!r.conference.empty()) ++counts[r.conference];
        break;
      case Dimension::journal:
        if (!r.journal.empty()) ++counts[r.journal];
        break;
      case Dimension::year:
        if (!r.year.empty()) ++counts[r.year];
        break;
    }
  }
  std::vector<CountRow> rows;
  for (auto& [v, n] : counts) rows.push_back({v, n});
  sort_counts(rows);
  return rows;
}

Histograms histograms(std::span<const BibRecord> records) {
  Histograms h;
  for (auto d : kDimensions) h[d] = counts_by(records, d);
  return h;
}

std::vector<std::pair<std::string, std::string>> render_outputs(const Outputs& o) {
  std::vector<std::pair<std::string, std::string>> files;
  files.emplace_back("bibliography.csv", bib_csv(o.records));

  const auto stem = "changes-" + namespace_file_stem(o.changes_namespace);
  {
    csv::Writer w;
    w.write_row({"bucket", "count", "cumulative"});
    for (const auto& b : o.changes) w.write_row({b.label(), std::to_string(b.count), std::to_string(b.cumulative)});
    files.emplace_back(stem + ".csv", w.str());

    svg::Chart chart;
    chart.title = "Wiki changes over time: " + o.changes_namespace;
    chart.x_label = "month";
    chart.y_label = "changes";
    svg::Series per_month{"changes per month", {}};
    svg::Series total{"cumulative changes", {}};
    for (std::size_t i = 0; i < o.changes.size(); ++i) {
      const double x = static_cast<double>(i);
      per_month.points.emplace_back(x, static_cast<double>(o.changes[i].count));
      total.points.emplace_back(x, static_cast<double>(o.changes[i].cumulative));
      chart.x_ticks.emplace_back(x, o.changes[i].label());
    }
    chart.series = {std::move(per_month), std::move(total)};
    files.emplace_back(stem + ".svg", svg::render(std::span(&chart, 1)));
  }

  for (auto d : kDimensions) {
    csv::Writer w;
    w.write_row({std::string(to_string(d)), "count"});
    if (auto it = o.counts.find(d); it != o.counts.end())
      for (const auto& row : it->second) w.write_row({row.value, std::to_string(row.count)});
    files.emplace_back("counts-by-" + std::string(to_string(d)) + ".csv", w.str());
  }

  {
    csv::Writer w;
    w.write_row({"rank", "term", "frequency"});
    svg::Series freq{"term frequency", {}};
    for (std::size_t i = 0; i < o.terms.size(); ++i) {
      w.write_row({std::to_string(i + 1), o.terms[i].term, std::to_string(o.terms[i].frequency)});
      freq.points.emplace_back(static_cast<double>(i + 1), static_cast<double>(o.terms[i].frequency));
    }
    files.emplace_back("term-frequency.csv", w.str());

    svg::Chart linear{"Term frequency distribution", "rank", "frequency", false, false, {freq}, {}};
    svg::Chart loglog{"Term frequency distribution (log-log)", "rank", "frequency", true, true, {freq}, {}};
    const svg::Chart charts[] = {linear, loglog};
    files.emplace_back("term-frequency.svg", svg::render(charts));
  }

  std::sort(files.begin(), files.end());
  return files;
}

std::vector<fs::path> write_outputs(const Outputs& o, const fs::path& dir) {
  const auto files = render_outputs(o);
  std::error_code ec;
  const bool existed = fs::exists(dir, ec);
  if (!existed && !fs::create_directories(dir, ec))
    throw Error("cannot create output directory " + dir.string() + ": " + ec.message());
  if (!fs::is_directory(dir, ec)) throw Error("output path is not a directory: " + dir.string());

  std::vector<fs::path> written;
  for (const auto& [name, content] : files) {
    auto path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    const bool opened = out.is_open();
    out << content;
    out.close();
    if (!out) {
      for (const auto& w : written) fs::remove(w, ec);
      if (opened) fs::remove(path, ec);
      if (!existed) fs::remove(dir, ec);
      throw Error("cannot write " + path.string());
    }
    written.push_back(std::move(path));
  }
  return written;
}

}  // namespace rwiki::analysis
