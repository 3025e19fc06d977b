#include "rwiki/csv.hpp"

namespace rwiki::csv {

std::vector<ParsedRow> parse(std::string_view content) {
  std::vector<ParsedRow> rows;
  std::size_t i = 0;
  std::size_t line = 1;
  const std::size_t n = content.size();

  while (i < n) {
    ParsedRow row;
    row.line = line;
    std::string field;
    bool in_quotes = false;
    bool done = false;
    while (!done) {
      if (i >= n) {
        if (in_quotes) row.well_formed = false;
        row.fields.push_back(std::move(field));
        break;
      }
      char c = content[i];
      if (in_quotes) {
        if (c == '"') {
          if (i + 1 < n && content[i + 1] == '"') {
            field += '"';
            i += 2;
          } else {
            in_quotes = false;
            ++i;
          }
        } else {
          if (c == '\n') ++line;
          field += c;
          ++i;
        }
        continue;
      }
      switch (c) {
        case '"':
          in_quotes = true;
          ++i;
          break;
        case ',':
          row.fields.push_back(std::move(field));
          field.clear();
          ++i;
          break;
        case '\r':
          ++i;
          break;
        case '\n':
          row.fields.push_back(std::move(field));
          ++i;
          ++line;
          done = true;
          break;
        default:
          field += c;
          ++i;
      }
    }
    // Blank lines carry no record.
    if (row.fields.size() == 1 && row.fields[0].empty() && row.well_formed) continue;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string escape_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_row(const Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += escape_field(row[i]);
  }
  out += '\n';
  return out;
}

void Writer::write_row(const Row& row) { out_ += format_row(row); }

}  // namespace rwiki::csv
