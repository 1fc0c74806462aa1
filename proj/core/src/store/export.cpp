#include "faasbench/store/export.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

#include "faasbench/store/line_protocol.hpp"
#include "faasbench/util/strings.hpp"

namespace faasbench::store {

namespace {

std::string csv_quote(const std::string& s) {
  const bool needs = s.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string field_to_text(const FieldValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) return util::format_double(*d);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<std::string>(v);
}

bool numeric_value(const FieldValue& v, double& out) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) {
    out = static_cast<double>(*i);
    return true;
  }
  if (const auto* d = std::get_if<double>(&v)) {
    out = *d;
    return true;
  }
  if (const auto* b = std::get_if<bool>(&v)) {
    out = *b ? 1.0 : 0.0;
    return true;
  }
  return false;
}

std::vector<Point> canonical_order(std::span<const Point> points) {
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
    const std::string ka = a.series_key();
    const std::string kb = b.series_key();
    if (ka != kb) return ka < kb;
    if (a.timestamp_ns != b.timestamp_ns) return a.timestamp_ns < b.timestamp_ns;
    return encode_line(a) < encode_line(b);
  });
  return sorted;
}

void export_csv(const std::vector<Point>& points, std::ostream& out) {
  std::set<std::string> tag_keys;
  std::set<std::string> field_keys;
  for (const Point& p : points) {
    for (const auto& [k, v] : p.tags) tag_keys.insert(k);
    for (const auto& [k, v] : p.fields) field_keys.insert(k);
  }
  out << "measurement,timestamp_ns";
  for (const auto& k : tag_keys) out << ',' << csv_quote(k);
  for (const auto& k : field_keys) out << ',' << csv_quote(k);
  out << "\r\n";
  for (const Point& p : points) {
    out << csv_quote(p.measurement) << ',' << p.timestamp_ns;
    for (const auto& k : tag_keys) {
      auto it = p.tags.find(k);
      out << ',' << (it == p.tags.end() ? "" : csv_quote(it->second));
    }
    for (const auto& k : field_keys) {
      auto it = p.fields.find(k);
      out << ',' << (it == p.fields.end() ? "" : csv_quote(field_to_text(it->second)));
    }
    out << "\r\n";
  }
}

void export_plot(const std::vector<Point>& points, std::ostream& out) {
  // One block per series, separated by two blank lines (gnuplot `index`).
  std::string current_series;
  bool first_block = true;
  std::vector<std::string> columns;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    const std::string key = p.series_key();
    if (key != current_series) {
      if (!first_block) out << "\n\n";
      first_block = false;
      current_series = key;
      columns.clear();
      for (const auto& [k, v] : p.fields) {
        double ignored;
        if (numeric_value(v, ignored)) columns.push_back(k);
      }
      out << "# series: " << p.measurement;
      for (const auto& [k, v] : p.tags) out << ' ' << k << '=' << v;
      out << "\n# columns: t_seconds";
      for (const auto& c : columns) out << ' ' << c;
      out << '\n';
    }
    out << util::format_double(static_cast<double>(p.timestamp_ns) / 1e9);
    for (const auto& c : columns) {
      double v = 0;
      auto it = p.fields.find(c);
      out << ' ';
      if (it != p.fields.end() && numeric_value(it->second, v)) {
        out << util::format_double(v);
      } else {
        out << "nan";
      }
    }
    out << '\n';
  }
}

}  // namespace

ExportFormat export_format_from_string(const std::string& s) {
  if (s == "csv") return ExportFormat::Csv;
  if (s == "lp") return ExportFormat::LineProtocol;
  if (s == "plot") return ExportFormat::Plot;
  throw std::invalid_argument("unknown export format: " + s + " (want csv|lp|plot)");
}

void export_points(std::span<const Point> points, ExportFormat format, std::ostream& out) {
  const std::vector<Point> sorted = canonical_order(points);
  switch (format) {
    case ExportFormat::Csv:
      export_csv(sorted, out);
      break;
    case ExportFormat::LineProtocol:
      for (const Point& p : sorted) out << encode_line(p) << '\n';
      break;
    case ExportFormat::Plot:
      export_plot(sorted, out);
      break;
  }
}

}  // namespace faasbench::store
