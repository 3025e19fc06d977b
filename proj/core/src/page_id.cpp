#include "rwiki/page_id.hpp"

#include "rwiki/error.hpp"
#include "rwiki/text.hpp"

namespace rwiki {

std::optional<PageId> PageId::parse(std::string_view text) {
  text = text::trim(text);
  if (!text.empty() && text.front() == ':') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;

  std::string out;
  for (auto seg : text::split(text, ':')) {
    auto squashed = text::squash_spaces(seg);
    if (squashed.empty()) return std::nullopt;
    for (char& c : squashed) c = c == ' ' ? '-' : text::to_lower(c);
    if (!out.empty()) out += ':';
    out += squashed;
  }
  return PageId(std::move(out));
}

PageId PageId::of(std::string_view text) {
  auto id = parse(text);
  if (!id) throw Error("malformed page id: '" + std::string(text) + "'");
  return *id;
}

std::vector<std::string_view> PageId::segments() const {
  if (value_.empty()) return {};
  return text::split(value_, ':');
}

std::string_view PageId::name() const {
  std::string_view v = value_;
  auto pos = v.rfind(':');
  return pos == std::string_view::npos ? v : v.substr(pos + 1);
}

std::string_view PageId::ns() const {
  std::string_view v = value_;
  auto pos = v.rfind(':');
  return pos == std::string_view::npos ? std::string_view{} : v.substr(0, pos);
}

bool PageId::is_under(std::string_view prefix) const {
  if (prefix.empty()) return !value_.empty();
  return value_.size() > prefix.size() + 1 && value_.compare(0, prefix.size(), prefix) == 0 &&
         value_[prefix.size()] == ':';
}

PageId PageId::child(std::string_view segment) const {
  return value_.empty() ? PageId::of(segment) : PageId::of(value_ + ":" + std::string(segment));
}

}  // namespace rwiki
