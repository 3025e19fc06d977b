#include "rwiki/wiki_store.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "rwiki/text.hpp"

namespace fs = std::filesystem;

namespace rwiki {
namespace {

bool read_file(const fs::path& p, std::string& out) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return false;
  out = std::move(ss).str();
  return true;
}

Timestamp mtime_seconds(const fs::path& p) {
  std::error_code ec;
  auto ft = fs::last_write_time(p, ec);
  if (ec) return 1;
  auto sys = std::chrono::file_clock::to_sys(ft);
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(sys.time_since_epoch()).count();
  return std::max<Timestamp>(secs, 1);
}

struct FileSlot {
  fs::path path;
  std::vector<std::string> segments;
  std::optional<PageId> id;
  WikiPage page;
  std::vector<Issue> issues;
  bool ok = false;
};

void load_slot(const WikiRoot& root, FileSlot& slot) {
  if (!slot.id) {
    slot.issues.push_back({slot.path.generic_string(), "cannot derive a page id from this path"});
    return;
  }
  if (!read_file(slot.path, slot.page.raw_text)) {
    slot.issues.push_back({slot.path.generic_string(), "unreadable page file, skipped"});
    return;
  }
  slot.page.id = *slot.id;
  slot.page.file_segments = slot.segments;

  auto log_path = root.meta_path() / page_relative_path(*slot.id, ".changes");
  std::error_code ec;
  if (fs::exists(log_path, ec)) {
    std::string content;
    if (read_file(log_path, content)) {
      auto log = parse_changes(content, log_path.generic_string());
      slot.page.revisions = std::move(log.revisions);
      for (auto& i : log.issues) slot.issues.push_back(std::move(i));
    } else {
      slot.issues.push_back({log_path.generic_string(), "unreadable change log, ignored"});
    }
  } else {
    slot.page.revisions.push_back(Revision{mtime_seconds(slot.path), ChangeType::edit, {}, {}});
    slot.page.synthetic_revision = true;
  }
  slot.ok = true;
}

std::optional<ChangeType> change_type(std::string_view letter) {
  if (letter == "C") return ChangeType::create;
  if (letter == "E" || letter == "R") return ChangeType::edit;
  if (letter == "e") return ChangeType::minor_edit;
  if (letter == "D") return ChangeType::remove;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ChangeType t) {
  switch (t) {
    case ChangeType::create:
      return "create";
    case ChangeType::edit:
      return "edit";
    case ChangeType::minor_edit:
      return "minor-edit";
    case ChangeType::remove:
      return "delete";
  }
  return "edit";
}

bool is_template_file(const fs::path& p) {
  auto stem = p.stem().string();
  return !stem.empty() && stem.front() == '_';
}

fs::path page_relative_path(const PageId& id, std::string_view extension) {
  fs::path rel;
  auto segs = id.segments();
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) rel /= std::string(segs[i]);
  rel /= std::string(id.name()) + std::string(extension);
  return rel;
}

ChangeLog parse_changes(std::string_view content, std::string_view where) {
  ChangeLog log;
  std::size_t line_no = 0;
  for (auto line : text::split_lines(content)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    auto fields = text::split(line, '\t');
    auto bad = [&](std::string_view why) {
      log.issues.push_back({std::string(where) + ":" + std::to_string(line_no),
                            "malformed change record (" + std::string(why) + "), skipped"});
    };
    if (fields.size() < 5) {
      bad("expected at least 5 tab-separated fields");
      continue;
    }
    Timestamp ts = 0;
    auto f0 = text::trim(fields[0]);
    auto [ptr, ec] = std::from_chars(f0.data(), f0.data() + f0.size(), ts);
    if (ec != std::errc{} || ptr != f0.data() + f0.size() || ts <= 0) {
      bad("timestamp");
      continue;
    }
    auto type = change_type(text::trim(fields[2]));
    if (!type) {
      bad("change type");
      continue;
    }
    Revision r{ts, *type, std::string(fields[4]), fields.size() > 5 ? std::string(fields[5]) : std::string{}};
    log.revisions.push_back(std::move(r));
  }
  std::stable_sort(log.revisions.begin(), log.revisions.end(),
                   [](const Revision& a, const Revision& b) { return a.timestamp < b.timestamp; });
  return log;
}

ChangeLog load_changes(const WikiRoot& root, const PageId& page) {
  auto path = root.meta_path() / page_relative_path(page, ".changes");
  std::error_code ec;
  if (!fs::exists(path, ec)) return {};
  std::string content;
  if (!read_file(path, content)) return {{}, {{path.generic_string(), "unreadable change log"}}};
  return parse_changes(content, path.generic_string());
}

LoadedWiki load_wiki(const WikiRoot& root, unsigned workers) {
  std::error_code ec;
  if (!fs::exists(root.root, ec)) throw Error("wiki root does not exist: " + root.root.string());
  const auto pages_dir = root.pages_path();
  if (!fs::is_directory(pages_dir, ec)) throw Error("pages directory not found: " + pages_dir.string());

  std::vector<FileSlot> slots;
  LoadedWiki out;
  fs::recursive_directory_iterator it(pages_dir, fs::directory_options::skip_permission_denied, ec);
  for (; !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    const auto& entry = *it;
    if (!entry.is_regular_file(ec) || entry.path().extension() != ".txt") continue;
    if (is_template_file(entry.path())) continue;
    FileSlot slot;
    slot.path = entry.path();
    auto rel = fs::relative(entry.path(), pages_dir, ec);
    std::string joined;
    for (auto part = rel.begin(); part != rel.end(); ++part) {
      auto seg = std::next(part) == rel.end() ? part->stem().string() : part->string();
      slot.segments.push_back(seg);
      if (!joined.empty()) joined += ':';
      joined += seg;
    }
    // Colons inside a file name would forge extra namespace levels.
    if (std::none_of(slot.segments.begin(), slot.segments.end(),
                     [](const std::string& seg) { return seg.find(':') != std::string::npos; }))
      slot.id = PageId::parse(joined);
    slots.push_back(std::move(slot));
  }
  if (ec) out.issues.push_back({pages_dir.generic_string(), "directory walk stopped: " + ec.message()});

  std::sort(slots.begin(), slots.end(), [](const FileSlot& a, const FileSlot& b) { return a.path < b.path; });

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(slots.size())));
  if (workers == 1) {
    for (auto& s : slots) load_slot(root, s);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < slots.size(); i += workers) load_slot(root, slots[i]);
      });
  }

  std::map<PageId, std::size_t> seen;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    auto& s = slots[i];
    for (auto& issue : s.issues) out.issues.push_back(std::move(issue));
    if (!s.ok) continue;
    if (auto [pos, inserted] = seen.emplace(s.page.id, i); !inserted) {
      out.issues.push_back({s.path.generic_string(), "page id '" + s.page.id.str() + "' already taken by " +
                                                         slots[pos->second].path.generic_string() + ", skipped"});
      continue;
    }
    out.pages.push_back(std::move(s.page));
  }
  std::sort(out.pages.begin(), out.pages.end(), [](const WikiPage& a, const WikiPage& b) { return a.id < b.id; });
  std::sort(out.issues.begin(), out.issues.end());
  return out;
}

}  // namespace rwiki
