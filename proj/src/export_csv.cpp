#include <cmath>
#include <cstdio>
#include <fstream>

#include "sfqm/errors.hpp"
#include "sfqm/export.hpp"

namespace sfqm {

namespace {

// %.9g round-trips the 9 significant digits the datasets promise while
// keeping files stable across platforms (no locale, no %a surprises).
std::string fmt_cell(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

std::string format_csv(const Dataset& data) {
  std::string out;
  for (const auto& [key, value] : data.metadata) {
    out += "# ";
    out += key;
    out += " = ";
    out += value;
    out += "\n";
  }
  for (std::size_t c = 0; c < data.columns.size(); ++c) {
    if (c) out += ",";
    out += data.columns[c];
  }
  out += ",flag\n";
  for (const DataRow& row : data.rows) {
    for (std::size_t c = 0; c < data.columns.size(); ++c) {
      if (c) out += ",";
      out += c < row.values.size() ? fmt_cell(row.values[c]) : "";
    }
    out += ",";
    out += row.flag;
    out += "\n";
  }
  return out;
}

std::size_t write_csv(const Dataset& data, const std::string& path) {
  std::string body = format_csv(data);
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
