#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "faasbench/store/point.hpp"

namespace faasbench::store {

enum class ExportFormat { Csv, LineProtocol, Plot };

ExportFormat export_format_from_string(const std::string& s);

// Writes points in a canonical order (measurement, tags, timestamp, fields)
// so identical logical content exports byte-identically regardless of append
// interleaving.
//
//   Csv          RFC-4180, header = measurement,timestamp + tag/field unions
//   LineProtocol the persistence format, one canonical line per point
//   Plot         gnuplot-ready numeric columns, one block per series
void export_points(std::span<const Point> points, ExportFormat format, std::ostream& out);

}  // namespace faasbench::store
