#pragma once

#include <string>
#include <string_view>
#include <vector>

// Comma-separated values with double-quote escaping. Output always uses LF
// line endings; input accepts LF or CRLF.
namespace rwiki::csv {

using Row = std::vector<std::string>;

struct ParsedRow {
  Row fields;
  std::size_t line = 0;  // 1-based line where the record starts
  bool well_formed = true;  // false on an unterminated quote
};

std::vector<ParsedRow> parse(std::string_view content);

std::string escape_field(std::string_view field);
std::string format_row(const Row& row);

class Writer {
 public:
  void write_row(const Row& row);
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

}  // namespace rwiki::csv
