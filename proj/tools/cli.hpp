#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rwiki::cli {

// `args` excludes the program name. Returns 0 on success, 1 on lint errors
// or a fatal error, 2 on a usage error. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rwiki::cli
