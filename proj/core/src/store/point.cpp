#include "faasbench/store/point.hpp"

#include <cctype>
#include <stdexcept>

namespace faasbench::store {

void Point::validate() const {
  if (measurement.empty()) throw std::invalid_argument("point: measurement empty");
  for (const auto& [key, value] : tags) {
    if (key.empty()) throw std::invalid_argument("point: empty tag key");
    for (char c : key) {
      if (std::isupper(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("point: tag keys must be lowercase: " + key);
      }
    }
  }
  if (fields.empty()) throw std::invalid_argument("point: no fields");
  for (const auto& [key, value] : fields) {
    if (key.empty()) throw std::invalid_argument("point: empty field key");
  }
}

std::string Point::series_key() const {
  std::string key = measurement;
  for (const auto& [k, v] : tags) {
    key += '\x1f';
    key += k;
    key += '\x1e';
    key += v;
  }
  return key;
}

}  // namespace faasbench::store
