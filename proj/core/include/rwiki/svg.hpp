#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

// Minimal self-contained SVG line charts with deterministic output.
namespace rwiki::svg {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct Chart {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;  // log axes drop non-positive points
  bool log_y = false;
  std::vector<Series> series;
  // Optional labels for integer x positions (e.g. month buckets).
  std::vector<std::pair<double, std::string>> x_ticks;
};

// Charts are stacked vertically in a single document.
std::string render(std::span<const Chart> charts, int width = 720, int panel_height = 400);

std::string escape(std::string_view s);

}  // namespace rwiki::svg
