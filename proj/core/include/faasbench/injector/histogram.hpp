#pragma once

#include <cstdint>
#include <vector>

namespace faasbench::injector {

// Log-bucketed latency histogram with <= 1% relative bucket width.
// Buckets are powers of kGrowth; merging histograms is exact bucket-wise,
// associative and commutative.
class LatencyHistogram {
public:
  static constexpr double kGrowth = 1.01;

  void record(std::int64_t value_ns);
  void merge(const LatencyHistogram& other);

  std::uint64_t count() const { return total_; }
  bool empty() const { return total_ == 0; }
  std::int64_t min() const;
  std::int64_t max() const;

  // Value whose cumulative count first reaches ceil(q/100 * total); within
  // one bucket (1% relative) of the exact order statistic. q in [0, 100].
  // Throws std::logic_error on an empty histogram.
  std::int64_t percentile(double q) const;

  // Exact bucket-wise equality (used by the merge properties).
  bool same_buckets(const LatencyHistogram& other) const;

private:
  static std::size_t bucket_index(std::int64_t value_ns);
  static std::int64_t bucket_upper(std::size_t index);

  std::vector<std::uint64_t> counts_;
  std::uint64_t total_{0};
  std::int64_t min_{0};
  std::int64_t max_{0};
};

// Free-function form used by reports: percentile(hist, q).
std::int64_t percentile(const LatencyHistogram& hist, double q);

}  // namespace faasbench::injector
