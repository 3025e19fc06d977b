#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rwiki/page_id.hpp"

// The wiki markup subset used by the research templates: heading fences,
// tables, lists, blockquotes, todo items, **bold** and [[target|label]] links.
// Anything else passes through as paragraph text.
namespace rwiki::markup {

struct Span {
  enum class Kind { plain, bold, link, external_link };

  Kind kind = Kind::plain;
  std::string text;    // visible text; the label for links
  std::string target;  // link target exactly as written (links only)
  bool bold = false;   // inside a ** region

  bool is_link() const { return kind == Kind::link; }
  friend bool operator==(const Span&, const Span&) = default;
};

using Spans = std::vector<Span>;

struct Cell {
  bool header = false;  // introduced by '^'
  Spans spans;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct ListItem {
  int depth = 1;
  Spans spans;
  friend bool operator==(const ListItem&, const ListItem&) = default;
};

enum class BlockKind { heading, paragraph, table, unordered_list, ordered_list, blockquote, todo_item };

struct Block {
  BlockKind kind = BlockKind::paragraph;
  int level = 0;         // heading: 1 (six '=') .. 5 (two '=')
  bool checked = false;  // todo_item
  Spans spans;           // heading, paragraph, blockquote, todo_item
  std::vector<std::vector<Cell>> rows;  // table
  std::vector<ListItem> items;          // lists

  friend bool operator==(const Block&, const Block&) = default;
};

using Blocks = std::vector<Block>;

// Total: never fails, unknown constructs become paragraphs.
Blocks parse_page(std::string_view raw_text);

Spans parse_inline(std::string_view text);

// Concatenated visible text of a span run.
std::string span_text(const Spans& spans);

enum class ReviewPrefix { none = 0, to_review = 1, in_review = 2 };  // ordered by strength

std::string_view to_string(ReviewPrefix p);

struct InternalLink {
  PageId source;
  PageId target;
  std::string label;
  bool bold = false;
  ReviewPrefix prefix = ReviewPrefix::none;

  friend bool operator==(const InternalLink&, const InternalLink&) = default;
};

inline constexpr std::string_view kInReviewPage = "phd:bibliography:in-review";
inline constexpr std::string_view kToReviewPage = "phd:bibliography:to-review";

// Resolves a link target relative to the page it appears on: a leading ':'
// is absolute, a bare name is a sibling of `source`, anything else with a
// colon is absolute. Anchors are dropped.
std::optional<PageId> resolve_target(std::string_view target, const PageId& source);

// Internal links in document order. A link directly preceded, within the same
// paragraph, cell, or list item, by a link to one of the review status pages
// inherits that status as its prefix.
std::vector<InternalLink> extract_links(const Blocks& blocks, const PageId& source);

bool is_slug(std::string_view s);

// Lowercase dash-separated slug; throws rwiki::Error if `title` contains no
// ASCII alphanumeric character.
std::string slugify(std::string_view title);

// Markup delimiters that never survive strip_markup().
inline constexpr std::array<std::string_view, 6> kDelimiters = {"**", "[[", "]]", "==", "|", "^"};

std::string strip_markup(const Blocks& blocks);

}  // namespace rwiki::markup
