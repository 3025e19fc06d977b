#pragma once

#include <string>
#include <string_view>
#include <vector>

// ASCII-only helpers. Bytes outside [0-9A-Za-z] are never alphanumeric, so
// UTF-8 multibyte sequences always act as separators.
namespace rwiki::text {

constexpr bool is_alnum(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
constexpr bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}
constexpr char to_lower(char c) { return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c; }

std::string lower(std::string_view s);
std::string_view trim(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
bool istarts_with(std::string_view s, std::string_view prefix);

std::vector<std::string_view> split(std::string_view s, char sep);
std::vector<std::string_view> split_lines(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Collapses every whitespace run to one space and trims the ends.
std::string squash_spaces(std::string_view s);

// Maximal alphanumeric runs, lowercased, in input order.
std::vector<std::string> alnum_tokens(std::string_view s);

}  // namespace rwiki::text
