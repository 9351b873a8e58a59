#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "sfqm/errors.hpp"
#include "sfqm/export.hpp"

namespace sfqm {

namespace {

constexpr int kWidth = 860;
constexpr int kHeight = 520;
constexpr int kMarginL = 72;
constexpr int kMarginR = 190;
constexpr int kMarginT = 46;
constexpr int kMarginB = 58;
constexpr int kTicks = 6;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v, const char* spec = "%.2f") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool empty() const { return !(lo <= hi); }
  // Degenerate and empty ranges widen to something plottable.
  void finalize(double pad_fraction) {
    if (empty()) {
      lo = 0.0;
      hi = 1.0;
      return;
    }
    if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
      return;
    }
    double pad = pad_fraction * (hi - lo);
    lo -= pad;
    hi += pad;
  }
};

}  // namespace

std::string format_svg_lineplot(const Dataset& data) {
  if (data.columns.size() < 2) {
    throw domain_error("line plot needs an x column and at least one series");
  }
  std::size_t nseries = data.columns.size() - 1;

  Range xr, yr;
  for (const DataRow& row : data.rows) {
    if (row.values.empty()) continue;
    xr.add(row.values[0]);
    for (std::size_t s = 1; s < row.values.size(); ++s) yr.add(row.values[s]);
  }
  xr.finalize(0.0);
  yr.finalize(0.05);

  double pw = kWidth - kMarginL - kMarginR;
  double ph = kHeight - kMarginT - kMarginB;
  auto px = [&](double x) {
    return kMarginL + (x - xr.lo) / (xr.hi - xr.lo) * pw;
  };
  auto py = [&](double y) {
    return kMarginT + (yr.hi - y) / (yr.hi - yr.lo) * ph;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
         "\" viewBox=\"0 0 " + std::to_string(kWidth) + " " +
         std::to_string(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::string title;
  for (const auto& [key, value] : data.metadata) {
    if (key == "title") title = value;
  }
  if (!title.empty()) {
    svg += "<text x=\"" + num(kMarginL + pw / 2.0) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">" +
           xml_escape(title) + "</text>\n";
  }

  // Frame and ticks.
  svg += "<rect x=\"" + std::to_string(kMarginL) + "\" y=\"" +
         std::to_string(kMarginT) + "\" width=\"" + num(pw) + "\" height=\"" +
         num(ph) + "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int t = 0; t < kTicks; ++t) {
    double fx = xr.lo + (xr.hi - xr.lo) * t / (kTicks - 1);
    double gx = px(fx);
    svg += "<line x1=\"" + num(gx) + "\" y1=\"" + num(kMarginT + ph) +
           "\" x2=\"" + num(gx) + "\" y2=\"" + num(kMarginT + ph + 5) +
           "\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + num(gx) + "\" y=\"" + num(kMarginT + ph + 20) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           num(fx, "%.4g") + "</text>\n";

    double fy = yr.lo + (yr.hi - yr.lo) * t / (kTicks - 1);
    double gy = py(fy);
    svg += "<line x1=\"" + num(kMarginL - 5) + "\" y1=\"" + num(gy) +
           "\" x2=\"" + std::to_string(kMarginL) + "\" y2=\"" + num(gy) +
           "\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + num(kMarginL - 9) + "\" y=\"" + num(gy + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           num(fy, "%.4g") + "</text>\n";
  }
  svg += "<text x=\"" + num(kMarginL + pw / 2.0) + "\" y=\"" +
         num(kHeight - 14.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">" +
         xml_escape(data.columns[0]) + "</text>\n";

  // One polyline run per gap-free stretch of each series.
  for (std::size_t s = 0; s < nseries; ++s) {
    const char* color = kPalette[s % std::size(kPalette)];
    std::string points;
    auto flush = [&] {
      if (points.empty()) return;
      svg += "<polyline fill=\"none\" stroke=\"";
      svg += color;
      svg += "\" stroke-width=\"1.6\" points=\"" + points + "\"/>\n";
      points.clear();
    };
    for (const DataRow& row : data.rows) {
      bool ok = row.values.size() > s + 1 && std::isfinite(row.values[0]) &&
                std::isfinite(row.values[s + 1]);
      if (!ok) {
        flush();
        continue;
      }
      if (!points.empty()) points += " ";
      points += num(px(row.values[0])) + "," + num(py(row.values[s + 1]));
    }
    flush();

    double ly = kMarginT + 14.0 + 18.0 * static_cast<double>(s);
    double lx = kMarginL + pw + 16.0;
    svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
           num(lx + 22) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(lx + 28) + "\" y=\"" + num(ly) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" +
           xml_escape(data.columns[s + 1]) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

std::size_t write_svg_lineplot(const Dataset& data, const std::string& path) {
  std::string body = format_svg_lineplot(data);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw io_error("cannot open '" + path + "' for writing");
  }
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  out.flush();
  if (!out) {
    throw io_error("short write to '" + path + "'");
  }
  return body.size();
}

}  // namespace sfqm
