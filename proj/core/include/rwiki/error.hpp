#pragma once

#include <stdexcept>
#include <string>

namespace rwiki {

// Fatal condition: missing inputs, refused writes, invalid arguments.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-fatal problem found while reading input; the offending item is skipped.
struct Issue {
  std::string where;    // file path or page id
  std::string message;

  friend bool operator==(const Issue&, const Issue&) = default;
  friend auto operator<=>(const Issue&, const Issue&) = default;
};

}  // namespace rwiki
