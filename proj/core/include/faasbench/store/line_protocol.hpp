#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "faasbench/store/point.hpp"

namespace faasbench::store {

// Text persistence format, one point per line:
//
//   measurement,tag=value,... field=value,... timestamp_ns
//
// Tags and fields are emitted sorted by key (the canonical, bit-exact form).
// Field values: 123i (int64), 1.5 (double, shortest round-trip form),
// t / f (bool), "quoted" (string, \" and \\ escapes). Measurement and tag
// tokens escape ',', ' ', '=' and '\' with a backslash.
std::string encode_line(const Point& point);
Point parse_line(const std::string& line);  // throws std::invalid_argument

std::vector<Point> parse_stream(std::istream& in);

}  // namespace faasbench::store
