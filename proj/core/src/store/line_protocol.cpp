#include "faasbench/store/line_protocol.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "faasbench/util/strings.hpp"

namespace faasbench::store {

namespace {

std::string escape_token(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '=' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string escape_string_value(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string encode_field_value(const FieldValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i) + "i";
  if (const auto* d = std::get_if<double>(&v)) return util::format_double(*d);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "t" : "f";
  return escape_string_value(std::get<std::string>(v));
}

// Splits on `sep` outside escapes and quoted strings.
std::vector<std::string> split_protected(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  bool escaped = false;
  bool quoted = false;
  for (char c : s) {
    if (escaped) {
      cur.push_back(c);
      escaped = false;
      continue;
    }
    if (c == '\\') {
      cur.push_back(c);
      escaped = true;
      continue;
    }
    if (c == '"') quoted = !quoted;
    if (c == sep && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string unescape_token(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool escaped = false;
  for (char c : s) {
    if (escaped) {
      out.push_back(c);
      escaped = false;
    } else if (c == '\\') {
      escaped = true;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

FieldValue parse_field_value(const std::string& raw) {
  if (raw.empty()) throw std::invalid_argument("empty field value");
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"') {
      throw std::invalid_argument("unterminated string value: " + raw);
    }
    std::string out;
    bool escaped = false;
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
      const char c = raw[i];
      if (escaped) {
        out.push_back(c);
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else {
        out.push_back(c);
      }
    }
    return out;
  }
  if (raw == "t") return true;
  if (raw == "f") return false;
  if (raw.back() == 'i') {
    std::int64_t v = 0;
    const auto* begin = raw.data();
    const auto* end = raw.data() + raw.size() - 1;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
      throw std::invalid_argument("bad integer field value: " + raw);
    }
    return v;
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(raw, &used);
    if (used != raw.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad field value: " + raw);
  }
}

}  // namespace

std::string encode_line(const Point& point) {
  point.validate();
  std::string line = escape_token(point.measurement);
  for (const auto& [k, v] : point.tags) {
    line += ',';
    line += escape_token(k);
    line += '=';
    line += escape_token(v);
  }
  line += ' ';
  bool first = true;
  for (const auto& [k, v] : point.fields) {
    if (!first) line += ',';
    first = false;
    line += escape_token(k);
    line += '=';
    line += encode_field_value(v);
  }
  line += ' ';
  line += std::to_string(point.timestamp_ns);
  return line;
}

Point parse_line(const std::string& line) {
  const std::vector<std::string> sections = split_protected(line, ' ');
  if (sections.size() != 3) {
    throw std::invalid_argument("line must have 3 space-separated sections: " + line);
  }
  Point p;
  const std::vector<std::string> head = split_protected(sections[0], ',');
  p.measurement = unescape_token(head[0]);
  for (std::size_t i = 1; i < head.size(); ++i) {
    const auto kv = split_protected(head[i], '=');
    if (kv.size() != 2) throw std::invalid_argument("bad tag: " + head[i]);
    p.tags[unescape_token(kv[0])] = unescape_token(kv[1]);
  }
  for (const auto& part : split_protected(sections[1], ',')) {
    const auto kv = split_protected(part, '=');
    if (kv.size() != 2) throw std::invalid_argument("bad field: " + part);
    p.fields[unescape_token(kv[0])] = parse_field_value(kv[1]);
  }
  {
    std::int64_t ts = 0;
    const std::string& raw = sections[2];
    auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), ts);
    if (ec != std::errc() || ptr != raw.data() + raw.size()) {
      throw std::invalid_argument("bad timestamp: " + raw);
    }
    p.timestamp_ns = ts;
  }
  p.validate();
  return p;
}

std::vector<Point> parse_stream(std::istream& in) {
  std::vector<Point> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_line(line));
  }
  return out;
}

}  // namespace faasbench::store
