#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rwiki/page_id.hpp"

namespace rwiki {
inline void PrintTo(const PageId& id, std::ostream* os) { *os << id.str(); }
}  // namespace rwiki

namespace rwiki::testutil {

namespace fs = std::filesystem;

inline fs::path fixture(std::string_view rel) { return fs::path(RWIKI_FIXTURE_DIR) / rel; }

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

inline void write_file(const fs::path& p, std::string_view content) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << content;
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    for (;;) {
      path_ = fs::temp_directory_path() / ("rwiki-test-" + std::to_string(rd()) + std::to_string(rd()));
      if (fs::create_directory(path_)) break;
    }
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }
  fs::path operator/(std::string_view rel) const { return path_ / rel; }

 private:
  fs::path path_;
};

// page id -> file under root/pages, one directory per namespace segment
inline fs::path page_file(const fs::path& root, std::string_view id) {
  fs::path p = root / "pages";
  std::string seg;
  for (char c : id) {
    if (c == ':') {
      p /= seg;
      seg.clear();
    } else {
      seg += c;
    }
  }
  return p / (seg + ".txt");
}

inline void write_pages(const fs::path& root, const std::map<std::string, std::string>& pages) {
  fs::create_directories(root / "pages");
  for (const auto& [id, text] : pages) write_file(page_file(root, id), text);
}

inline constexpr std::int64_t kPinnedMtime = 1515000000;  // 2018-01-03 UTC

inline void set_mtime(const fs::path& p, std::int64_t epoch_seconds) {
  auto sys = std::chrono::sys_seconds{std::chrono::seconds{epoch_seconds}};
  fs::last_write_time(p, std::chrono::file_clock::from_sys(sys));
}

// Copies the fixture wiki and pins every page mtime so revisions synthesized
// from file times do not depend on the checkout.
inline void copy_fixture_wiki(const fs::path& to, std::int64_t mtime = kPinnedMtime) {
  fs::copy(fixture("wiki"), to, fs::copy_options::recursive);
  for (const auto& e : fs::recursive_directory_iterator(to / "pages"))
    if (e.is_regular_file()) set_mtime(e.path(), mtime);
}

inline std::vector<std::string> tree_listing(const fs::path& root) {
  std::vector<std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    auto rel = fs::relative(e.path(), root).generic_string();
    out.push_back(e.is_directory() ? rel + "/" : rel + "\t" + read_file(e.path()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rwiki::testutil
