#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rwiki {

// Colon-separated page identifier, e.g. `phd:bibliography:author:w-bruce-croft`.
// Always normalized: lowercase, no empty segments, no surrounding whitespace.
class PageId {
 public:
  PageId() = default;

  // Normalizes `text` (trim, drop a leading ':', lowercase, inner whitespace
  // runs become '-'). Returns nullopt when any segment ends up empty.
  static std::optional<PageId> parse(std::string_view text);

  // Like parse() but throws rwiki::Error on malformed input.
  static PageId of(std::string_view text);

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  std::vector<std::string_view> segments() const;
  std::string_view name() const;  // last segment

  // Namespace part (everything before the last ':'); empty for top-level pages.
  std::string_view ns() const;

  // True when this id lies strictly below namespace `prefix`.
  bool is_under(std::string_view prefix) const;
  bool is_under(const PageId& prefix) const { return is_under(prefix.value_); }

  PageId child(std::string_view segment) const;

  friend bool operator==(const PageId&, const PageId&) = default;
  friend auto operator<=>(const PageId&, const PageId&) = default;

 private:
  explicit PageId(std::string v) : value_(std::move(v)) {}
  std::string value_;
};

}  // namespace rwiki

template <>
struct std::hash<rwiki::PageId> {
  std::size_t operator()(const rwiki::PageId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
