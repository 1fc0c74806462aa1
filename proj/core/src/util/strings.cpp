#include "faasbench/util/strings.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace faasbench::util {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::int64_t parse_duration_ms(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty duration");
  std::size_t i = 0;
  while (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '.')) ++i;
  const std::string num = t.substr(0, i);
  const std::string unit = lower(trim(t.substr(i)));
  double value = 0;
  try {
    value = std::stod(num);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed duration: " + text);
  }
  double factor = 1.0;
  if (unit.empty() || unit == "ms") {
    factor = 1.0;
  } else if (unit == "s" || unit == "sec") {
    factor = 1000.0;
  } else if (unit == "m" || unit == "min") {
    factor = 60'000.0;
  } else if (unit == "h") {
    factor = 3'600'000.0;
  } else {
    throw std::invalid_argument("unknown duration unit: " + text);
  }
  return static_cast<std::int64_t>(value * factor);
}

ParsedUrl parse_url(const std::string& url) {
  ParsedUrl out;
  std::string rest = url;
  const std::string http = "http://";
  if (rest.rfind(http, 0) == 0) {
    out.scheme = "http";
    rest = rest.substr(http.size());
  } else if (rest.find("://") != std::string::npos) {
    throw std::invalid_argument("only http:// targets are supported: " + url);
  } else {
    out.scheme = "http";
  }
  std::size_t slash = rest.find('/');
  std::string hostport = slash == std::string::npos ? rest : rest.substr(0, slash);
  out.path = slash == std::string::npos ? "/" : rest.substr(slash);
  std::size_t colon = hostport.rfind(':');
  if (colon == std::string::npos) {
    out.host = hostport;
  } else {
    out.host = hostport.substr(0, colon);
    const std::string port = hostport.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), out.port);
    if (ec != std::errc() || ptr != port.data() + port.size()) {
      throw std::invalid_argument("bad port in url: " + url);
    }
  }
  if (out.host.empty()) throw std::invalid_argument("missing host in url: " + url);
  return out;
}

std::string format_double(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double parsed = 0;
    std::sscanf(buf, "%lf", &parsed);
    if (parsed == v) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace faasbench::util
