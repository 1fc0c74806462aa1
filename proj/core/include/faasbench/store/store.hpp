#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "faasbench/store/point.hpp"

namespace faasbench::store {

struct QueryFilter {
  std::string measurement;
  std::map<std::string, std::string> tags;  // exact-match subset
  std::optional<std::int64_t> t_min_ns;     // inclusive
  std::optional<std::int64_t> t_max_ns;     // inclusive
};

struct Aggregate {
  enum class Kind { None, Mean, Percentile, Count };
  Kind kind{Kind::None};
  double q{50.0};     // Percentile only
  std::string field;  // Mean/Percentile: which field to fold
};

struct AggregateRow {
  std::map<std::string, std::string> tags;
  double value{0};
  std::int64_t count{0};
};

// Append-only store for one run directory. Records persist as line-protocol
// text; an in-memory index is rebuilt at open. One writer per run directory;
// appends are atomic at record granularity.
class RunStore {
public:
  static RunStore create(const std::filesystem::path& root, const std::string& run_id);
  static RunStore open_dir(const std::filesystem::path& run_dir);

  const std::string& run_id() const { return run_id_; }
  const std::filesystem::path& dir() const { return dir_; }

  // Returns the number written. Throws on malformed points or I/O errors.
  std::int64_t append(std::span<const Point> points);
  std::int64_t append(const Point& point) { return append({&point, 1}); }

  // Points matching the filter, timestamp-ordered within each series.
  std::vector<Point> query(const QueryFilter& filter) const;
  // Per-series aggregates over the filtered points.
  std::vector<AggregateRow> aggregate(const QueryFilter& filter, const Aggregate& agg) const;

  std::vector<Point> all_points() const;
  std::int64_t size() const;

private:
  RunStore(std::filesystem::path dir, std::string run_id);

  std::filesystem::path dir_;
  std::string run_id_;
  std::filesystem::path file_;
  std::unique_ptr<std::mutex> mutex_;  // keeps the store movable
  std::vector<Point> points_;
};

// A root directory holding one subdirectory per run.
class Store {
public:
  explicit Store(std::filesystem::path root);

  RunStore create_run(const std::string& run_id);  // throws if it exists
  RunStore open_run(const std::string& run_id);    // throws if missing
  bool has_run(const std::string& run_id) const;
  std::vector<std::string> list_runs() const;
  const std::filesystem::path& root() const { return root_; }

private:
  std::filesystem::path root_;
};

}  // namespace faasbench::store
