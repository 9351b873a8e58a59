#pragma once

#include <cstddef>
#include <string>

#include "sfqm/sweep.hpp"

namespace sfqm {

// CSV serialization: '#'-prefixed metadata preamble, then the header row
// (columns plus a trailing "flag"), then one row per DataRow. Floats are
// written with %.9g, NaN as an empty field, lines end with LF. Output is a
// pure function of the Dataset, byte for byte.
std::string format_csv(const Dataset& data);

// format_csv to a file (binary mode). Returns bytes written; io_error on
// failure, with the path in the message.
std::size_t write_csv(const Dataset& data, const std::string& path);

// Self-contained SVG 1.1 line plot: first column is x, every later column is
// one polyline series (rows with a NaN split the polyline). Wide-format
// figure datasets render as the published family-of-curves panels; long
// contour datasets are serviced but degenerate to overlapping traces.
std::string format_svg_lineplot(const Dataset& data);

std::size_t write_svg_lineplot(const Dataset& data, const std::string& path);

}  // namespace sfqm
