#include "faasbench/injector/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace faasbench::injector {

namespace {
const double kLogGrowth = std::log(LatencyHistogram::kGrowth);
}

std::size_t LatencyHistogram::bucket_index(std::int64_t value_ns) {
  if (value_ns <= 1) return 0;
  // Smallest i with kGrowth^(i+1) >= value, computed via logs and fixed up
  // around floating-point edges.
  auto upper = [](std::size_t i) { return bucket_upper(i); };
  auto idx = static_cast<std::size_t>(std::log(static_cast<double>(value_ns)) / kLogGrowth);
  while (idx > 0 && upper(idx - 1) >= value_ns) --idx;
  while (upper(idx) < value_ns) ++idx;
  return idx;
}

std::int64_t LatencyHistogram::bucket_upper(std::size_t index) {
  const double v = std::pow(kGrowth, static_cast<double>(index + 1));
  if (v >= 9.2e18) return std::int64_t{1} << 62;
  return static_cast<std::int64_t>(v);
}

void LatencyHistogram::record(std::int64_t value_ns) {
  if (value_ns < 0) value_ns = 0;
  const std::size_t idx = bucket_index(value_ns);
  if (idx >= counts_.size()) counts_.resize(idx + 1, 0);
  ++counts_[idx];
  if (total_ == 0) {
    min_ = max_ = value_ns;
  } else {
    min_ = std::min(min_, value_ns);
    max_ = std::max(max_, value_ns);
  }
  ++total_;
}

void LatencyHistogram::merge(const LatencyHistogram& other) {
  if (other.total_ == 0) return;
  if (other.counts_.size() > counts_.size()) counts_.resize(other.counts_.size(), 0);
  for (std::size_t i = 0; i < other.counts_.size(); ++i) counts_[i] += other.counts_[i];
  if (total_ == 0) {
    min_ = other.min_;
    max_ = other.max_;
  } else {
    min_ = std::min(min_, other.min_);
    max_ = std::max(max_, other.max_);
  }
  total_ += other.total_;
}

std::int64_t LatencyHistogram::min() const {
  if (total_ == 0) throw std::logic_error("empty histogram");
  return min_;
}

std::int64_t LatencyHistogram::max() const {
  if (total_ == 0) throw std::logic_error("empty histogram");
  return max_;
}

std::int64_t LatencyHistogram::percentile(double q) const {
  if (total_ == 0) throw std::logic_error("empty histogram");
  if (q < 0.0 || q > 100.0) throw std::invalid_argument("percentile q outside [0, 100]");
  const auto rank = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(q / 100.0 * static_cast<double>(total_))));
  std::uint64_t cumulative = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    cumulative += counts_[i];
    if (cumulative >= rank) {
      return std::clamp(bucket_upper(i), min_, max_);
    }
  }
  return max_;
}

bool LatencyHistogram::same_buckets(const LatencyHistogram& other) const {
  const std::size_t n = std::max(counts_.size(), other.counts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t a = i < counts_.size() ? counts_[i] : 0;
    const std::uint64_t b = i < other.counts_.size() ? other.counts_[i] : 0;
    if (a != b) return false;
  }
  return total_ == other.total_;
}

std::int64_t percentile(const LatencyHistogram& hist, double q) { return hist.percentile(q); }

}  // namespace faasbench::injector
