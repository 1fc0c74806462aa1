#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace faasbench::store {

using FieldValue = std::variant<std::int64_t, double, bool, std::string>;

// One measurement row: tags identify the series, fields carry the values.
struct Point {
  std::string measurement;
  std::map<std::string, std::string> tags;
  std::map<std::string, FieldValue> fields;
  std::int64_t timestamp_ns{0};

  void validate() const;  // throws std::invalid_argument
  // measurement + sorted tag pairs; the series identity used by queries.
  std::string series_key() const;

  bool operator==(const Point&) const = default;
};

}  // namespace faasbench::store
