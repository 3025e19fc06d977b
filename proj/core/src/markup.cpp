#include "rwiki/markup.hpp"

#include <optional>

#include "rwiki/error.hpp"
#include "rwiki/text.hpp"

namespace rwiki::markup {
namespace {

bool is_external(std::string_view target) {
  return target.find("://") != std::string_view::npos || text::istarts_with(target, "mailto:") ||
         target.find('>') != std::string_view::npos || target.starts_with("\\\\");
}

class InlineParser {
 public:
  explicit InlineParser(std::string_view s) : s_(s) {}

  Spans run() {
    std::size_t i = 0;
    while (i < s_.size()) {
      if (s_.compare(i, 2, "[[") == 0) {
        if (auto next = link_at(i)) {
          i = *next;
          continue;
        }
      }
      if (s_.compare(i, 2, "**") == 0) {
        if (bold_ || s_.find("**", i + 2) != std::string_view::npos) {
          flush();
          bold_ = !bold_;
          i += 2;
          continue;
        }
      }
      buf_ += s_[i++];
    }
    flush();
    return std::move(spans_);
  }

 private:
  // Parses a [[...]] link starting at `i`; returns the index after it.
  std::optional<std::size_t> link_at(std::size_t i) {
    auto close = s_.find("]]", i + 2);
    if (close == std::string_view::npos) return std::nullopt;
    auto inner = s_.substr(i + 2, close - i - 2);
    auto bar = inner.find('|');
    std::size_t end = close + 2;

    Span link;
    link.bold = bold_;
    if (bar == std::string_view::npos) {
      link.target = std::string(text::trim(inner));
      auto colon = link.target.rfind(':');
      link.text = colon == std::string::npos ? link.target : link.target.substr(colon + 1);
    } else {
      link.target = std::string(text::trim(inner.substr(0, bar)));
      std::string label(inner.substr(bar + 1));
      // A label ending in ']' (e.g. "[In Review]") yields a run of three or
      // more closing brackets; only the last two close the link.
      while (end < s_.size() && s_[end] == ']') {
        label += ']';
        ++end;
      }
      link.text = std::string(text::trim(label));
    }
    link.kind = is_external(link.target) ? Span::Kind::external_link : Span::Kind::link;
    flush();
    spans_.push_back(std::move(link));
    return end;
  }

  void flush() {
    if (buf_.empty()) return;
    spans_.push_back(Span{bold_ ? Span::Kind::bold : Span::Kind::plain, std::move(buf_), {}, bold_});
    buf_.clear();
  }

  std::string_view s_;
  std::string buf_;
  Spans spans_;
  bool bold_ = false;
};

std::optional<Block> heading(std::string_view line) {
  auto t = text::trim(line);
  std::size_t open = 0;
  while (open < t.size() && t[open] == '=') ++open;
  if (open < 2 || open > 6) return std::nullopt;
  std::size_t close = 0;
  while (close < t.size() - open && t[t.size() - 1 - close] == '=') ++close;
  if (close < 2) return std::nullopt;
  auto title = text::trim(t.substr(open, t.size() - open - close));
  if (title.empty()) return std::nullopt;
  Block b;
  b.kind = BlockKind::heading;
  b.level = 7 - static_cast<int>(open);
  b.spans = parse_inline(title);
  return b;
}

bool is_table_line(std::string_view line) {
  auto t = text::trim(line);
  return !t.empty() && (t.front() == '|' || t.front() == '^');
}

std::vector<Cell> table_row(std::string_view line) {
  auto t = text::trim(line);
  std::vector<Cell> cells;
  std::size_t i = 0;
  while (i < t.size()) {
    bool header = t[i] == '^';
    std::size_t j = i + 1;
    while (j < t.size() && t[j] != '|' && t[j] != '^') {
      if (t.compare(j, 2, "[[") == 0) {
        auto close = t.find("]]", j + 2);
        if (close != std::string_view::npos) {
          j = close + 2;
          while (j < t.size() && t[j] == ']') ++j;
          continue;
        }
      }
      ++j;
    }
    auto content = text::trim(t.substr(i + 1, j - i - 1));
    // The trailing delimiter closes the row and opens no cell.
    if (j < t.size() || !content.empty()) cells.push_back(Cell{header, parse_inline(content)});
    i = j;
  }
  return cells;
}

struct ListLine {
  BlockKind kind;
  int depth;
  std::string_view content;
};

std::optional<ListLine> list_line(std::string_view line) {
  std::size_t indent = 0;
  while (indent < line.size() && (line[indent] == ' ' || line[indent] == '\t'))
    indent += line[indent] == '\t' ? 2 : 1;
  // Tabs count as two spaces; recompute the byte offset of the marker.
  std::size_t pos = 0;
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  if (indent < 2 || pos >= line.size()) return std::nullopt;
  char marker = line[pos];
  if (marker != '*' && marker != '-') return std::nullopt;
  if (pos + 1 < line.size() && line[pos + 1] != ' ') return std::nullopt;
  return ListLine{marker == '*' ? BlockKind::unordered_list : BlockKind::ordered_list,
                  static_cast<int>(indent / 2), text::trim(line.substr(pos + 1))};
}

std::optional<Block> todo_item(std::string_view content) {
  if (content.size() < 3 || content[0] != '[' || content[2] != ']') return std::nullopt;
  char mark = content[1];
  if (mark != ' ' && mark != 'x' && mark != 'X') return std::nullopt;
  if (content.size() > 3 && content[3] != ' ') return std::nullopt;
  Block b;
  b.kind = BlockKind::todo_item;
  b.checked = mark != ' ';
  b.spans = parse_inline(text::trim(content.substr(3)));
  return b;
}

class BlockParser {
 public:
  Blocks run(std::string_view raw) {
    for (auto line : text::split_lines(raw)) feed(line);
    flush();
    return std::move(blocks_);
  }

 private:
  enum class Open { none, paragraph, blockquote, table, list };

  void feed(std::string_view line) {
    if (text::trim(line).empty()) {
      flush();
      return;
    }
    if (auto h = heading(line)) {
      flush();
      blocks_.push_back(std::move(*h));
      return;
    }
    if (is_table_line(line)) {
      if (open_ != Open::table) {
        flush();
        open_ = Open::table;
        current_ = Block{};
        current_.kind = BlockKind::table;
      }
      auto row = table_row(line);
      if (!row.empty()) current_.rows.push_back(std::move(row));
      return;
    }
    if (auto item = list_line(line)) {
      if (auto todo = todo_item(item->content)) {
        flush();
        blocks_.push_back(std::move(*todo));
        return;
      }
      if (open_ != Open::list || current_.kind != item->kind) {
        flush();
        open_ = Open::list;
        current_ = Block{};
        current_.kind = item->kind;
      }
      current_.items.push_back(ListItem{item->depth, parse_inline(item->content)});
      return;
    }
    if (line.front() == '>') {
      auto content = line;
      while (!content.empty() && content.front() == '>') content.remove_prefix(1);
      if (open_ != Open::blockquote) {
        flush();
        open_ = Open::blockquote;
      }
      append_text(text::trim(content));
      return;
    }
    if (open_ != Open::paragraph) {
      flush();
      open_ = Open::paragraph;
    }
    append_text(text::trim(line));
  }

  void append_text(std::string_view s) {
    if (!pending_.empty() && !s.empty()) pending_ += ' ';
    pending_ += s;
  }

  void flush() {
    switch (open_) {
      case Open::none:
        break;
      case Open::paragraph:
      case Open::blockquote: {
        Block b;
        b.kind = open_ == Open::paragraph ? BlockKind::paragraph : BlockKind::blockquote;
        b.spans = parse_inline(pending_);
        blocks_.push_back(std::move(b));
        pending_.clear();
        break;
      }
      case Open::table:
        // A table whose lines held only delimiters carries no rows.
        if (!current_.rows.empty()) blocks_.push_back(std::move(current_));
        break;
      case Open::list:
        blocks_.push_back(std::move(current_));
        break;
    }
    open_ = Open::none;
    current_ = Block{};
  }

  Blocks blocks_;
  Block current_;
  std::string pending_;
  Open open_ = Open::none;
};

void append_links(const Spans& spans, const PageId& source, std::vector<InternalLink>& out) {
  ReviewPrefix pending = ReviewPrefix::none;
  for (const auto& span : spans) {
    if (!span.is_link()) {
      if (!text::trim(span.text).empty()) pending = ReviewPrefix::none;
      continue;
    }
    auto target = resolve_target(span.target, source);
    if (!target) continue;
    InternalLink link{source, *target, span.text, span.bold, pending};
    pending = ReviewPrefix::none;
    if (target->str() == kInReviewPage) pending = ReviewPrefix::in_review;
    if (target->str() == kToReviewPage) pending = ReviewPrefix::to_review;
    out.push_back(std::move(link));
  }
}

void strip_spans(const Spans& spans, std::string& out) {
  for (const auto& s : spans) out += s.text;
}

std::string stripped_cell(const Cell& c) {
  std::string s;
  strip_spans(c.spans, s);
  return std::string(text::trim(s));
}

}  // namespace

Spans parse_inline(std::string_view text) { return InlineParser(text).run(); }

Blocks parse_page(std::string_view raw_text) { return BlockParser{}.run(raw_text); }

std::string span_text(const Spans& spans) {
  std::string out;
  strip_spans(spans, out);
  return out;
}

std::string_view to_string(ReviewPrefix p) {
  switch (p) {
    case ReviewPrefix::in_review:
      return "in-review";
    case ReviewPrefix::to_review:
      return "to-review";
    case ReviewPrefix::none:
      break;
  }
  return "none";
}

std::optional<PageId> resolve_target(std::string_view target, const PageId& source) {
  auto t = text::trim(target);
  if (auto hash = t.find('#'); hash != std::string_view::npos) t = t.substr(0, hash);
  if (auto query = t.find('?'); query != std::string_view::npos) t = t.substr(0, query);
  t = text::trim(t);
  if (t.empty() || is_external(t)) return std::nullopt;
  if (t.front() != ':' && t.find(':') == std::string_view::npos && !source.ns().empty())
    return PageId::parse(std::string(source.ns()) + ":" + std::string(t));
  return PageId::parse(t);
}

std::vector<InternalLink> extract_links(const Blocks& blocks, const PageId& source) {
  std::vector<InternalLink> links;
  for (const auto& b : blocks) {
    append_links(b.spans, source, links);
    for (const auto& row : b.rows)
      for (const auto& cell : row) append_links(cell.spans, source, links);
    for (const auto& item : b.items) append_links(item.spans, source, links);
  }
  return links;
}

bool is_slug(std::string_view s) {
  if (s.empty() || s.front() == '-' || s.back() == '-') return false;
  char prev = 0;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok || (c == '-' && prev == '-')) return false;
    prev = c;
  }
  return true;
}

std::string slugify(std::string_view title) {
  std::string slug;
  bool dash = false;
  for (char c : title) {
    if (text::is_alnum(c)) {
      if (dash && !slug.empty()) slug += '-';
      dash = false;
      slug += text::to_lower(c);
    } else {
      dash = true;
    }
  }
  if (slug.empty()) throw Error("cannot slugify '" + std::string(title) + "': empty slug");
  return slug;
}

std::string strip_markup(const Blocks& blocks) {
  std::vector<std::string> parts;
  for (const auto& b : blocks) {
    std::string part;
    switch (b.kind) {
      case BlockKind::table: {
        std::vector<std::string> lines;
        for (const auto& row : b.rows) {
          std::vector<std::string> cells;
          for (const auto& cell : row)
            if (auto s = stripped_cell(cell); !s.empty()) cells.push_back(std::move(s));
          lines.push_back(text::join(cells, " "));
        }
        part = text::join(lines, "\n");
        break;
      }
      case BlockKind::unordered_list:
      case BlockKind::ordered_list: {
        std::vector<std::string> lines;
        for (const auto& item : b.items) lines.push_back(span_text(item.spans));
        part = text::join(lines, "\n");
        break;
      }
      default:
        part = span_text(b.spans);
    }
    parts.push_back(std::move(part));
  }
  std::string out = text::join(parts, "\n");

  // Unmatched delimiters survive inline parsing as literal text.
  for (auto delim : kDelimiters)
    for (auto pos = out.find(delim); pos != std::string::npos; pos = out.find(delim, pos))
      out.replace(pos, delim.size(), std::string(delim.size(), ' '));
  return out;
}

}  // namespace rwiki::markup
