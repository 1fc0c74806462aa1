#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace faasbench::util {

std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);
std::string lower(const std::string& s);

// "5s", "500ms", "2m", "1h" or a bare millisecond count -> milliseconds.
std::int64_t parse_duration_ms(const std::string& text);

struct ParsedUrl {
  std::string scheme;  // http only
  std::string host;
  int port{80};
  std::string path;  // includes query, "/" when absent
};

ParsedUrl parse_url(const std::string& url);

// Shortest representation that parses back to the same double.
std::string format_double(double v);

}  // namespace faasbench::util
