#include "rwiki/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace rwiki::svg {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
constexpr double kMarginLeft = 70, kMarginRight = 20, kMarginTop = 40, kMarginBottom = 60;

std::string num(double v) { return fmt::format("{:.2f}", v); }

struct Axis {
  double lo = 0, hi = 1;
  bool log = false;

  double map(double v, double px0, double px1) const {
    double a = log ? std::log10(v) : v;
    double l = log ? std::log10(lo) : lo;
    double h = log ? std::log10(hi) : hi;
    if (h == l) return (px0 + px1) / 2;
    return px0 + (a - l) / (h - l) * (px1 - px0);
  }

  std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      for (double p = std::floor(std::log10(lo)); p <= std::ceil(std::log10(hi)) + 1e-9; p += 1) {
        const double t = std::pow(10.0, p);
        if (t >= lo * (1 - 1e-9) && t <= hi * (1 + 1e-9)) out.push_back(t);
      }
      return out;
    }
    const double span = hi - lo;
    double step = std::pow(10.0, std::floor(std::log10(span > 0 ? span : 1)));
    if (span / step < 4) step /= 2;
    if (span / step > 10) step *= 2;
    for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) out.push_back(t);
    return out;
  }
};

std::string tick_label(double v) {
  if (std::fabs(v - std::round(v)) < 1e-9) return fmt::format("{}", static_cast<long long>(std::llround(v)));
  return fmt::format("{:g}", v);
}

Axis fit(std::span<const Series> series, bool first, bool log) {
  Axis ax;
  ax.log = log;
  bool any = false;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      double v = first ? x : y;
      if (log && v <= 0) continue;
      if (!any) ax.lo = ax.hi = v;
      ax.lo = std::min(ax.lo, v);
      ax.hi = std::max(ax.hi, v);
      any = true;
    }
  if (!any) {
    ax.lo = log ? 1 : 0;
    ax.hi = log ? 10 : 1;
  } else if (!log) {
    if (!first) ax.lo = std::min(ax.lo, 0.0);
    if (ax.hi == ax.lo) ax.hi = ax.lo + 1;
  } else if (ax.hi == ax.lo) {
    ax.hi = ax.lo * 10;
  }
  return ax;
}

void panel(std::string& out, const Chart& c, double top, int width, int height) {
  const double x0 = kMarginLeft, x1 = width - kMarginRight;
  const double y0 = top + height - kMarginBottom, y1 = top + kMarginTop;
  const Axis ax = fit(c.series, true, c.log_x);
  const Axis ay = fit(c.series, false, c.log_y);

  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n", num(width / 2.0),
                     num(top + 24), escape(c.title));
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", num(x0), num(y0), num(x1));
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", num(x0), num(y0), num(y1));

  if (!c.x_ticks.empty()) {
    const std::size_t stride = std::max<std::size_t>(1, c.x_ticks.size() / 12);
    for (std::size_t i = 0; i < c.x_ticks.size(); i += stride) {
      const double px = ax.map(c.x_ticks[i].first, x0, x1);
      out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"10\">{}</text>\n", num(px),
                         num(y0 + 16), escape(c.x_ticks[i].second));
    }
  } else {
    for (double t : ax.ticks()) {
      const double px = ax.map(t, x0, x1);
      out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"10\">{}</text>\n", num(px),
                         num(y0 + 16), tick_label(t));
    }
  }
  for (double t : ay.ticks()) {
    const double py = ay.map(t, y0, y1);
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\" font-size=\"10\">{}</text>\n", num(x0 - 6),
                       num(py + 3), tick_label(t));
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#dddddd\"/>\n", num(x0), num(py),
                       num(x1));
  }
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"12\">{}</text>\n",
                     num((x0 + x1) / 2), num(y0 + 40), escape(c.x_label));
  out += fmt::format(
      "<text x=\"{0}\" y=\"{1}\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 {0} {1})\">{2}</text>\n",
      num(18), num((y0 + y1) / 2), escape(c.y_label));

  bool empty = true;
  for (std::size_t si = 0; si < c.series.size(); ++si) {
    const auto& s = c.series[si];
    const char* color = kPalette[si % std::size(kPalette)];
    std::string pts;
    for (const auto& [x, y] : s.points) {
      if ((c.log_x && x <= 0) || (c.log_y && y <= 0)) continue;
      if (!pts.empty()) pts += ' ';
      pts += num(ax.map(x, x0, x1)) + "," + num(ay.map(y, y0, y1));
    }
    if (pts.empty()) continue;
    empty = false;
    out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n", color, pts);
    out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\" fill=\"{}\">{}</text>\n", num(x0 + 10),
                       num(y1 + 14 * (si + 1)), color, escape(s.name));
  }
  if (empty)
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"13\">no data</text>\n",
                       num((x0 + x1) / 2), num((y0 + y1) / 2));
}

}  // namespace

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string render(std::span<const Chart> charts, int width, int panel_height) {
  const int height = panel_height * static_cast<int>(std::max<std::size_t>(1, charts.size()));
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      width, height);
  for (std::size_t i = 0; i < charts.size(); ++i) panel(out, charts[i], static_cast<double>(i) * panel_height, width, panel_height);
  out += "</svg>\n";
  return out;
}

}  // namespace rwiki::svg
