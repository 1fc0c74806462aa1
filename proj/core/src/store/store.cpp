#include "faasbench/store/store.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "faasbench/store/line_protocol.hpp"

namespace faasbench::store {

namespace {

constexpr const char* kPointsFile = "points.lp";

bool matches(const Point& p, const QueryFilter& f) {
  if (!f.measurement.empty() && p.measurement != f.measurement) return false;
  if (f.t_min_ns && p.timestamp_ns < *f.t_min_ns) return false;
  if (f.t_max_ns && p.timestamp_ns > *f.t_max_ns) return false;
  for (const auto& [k, v] : f.tags) {
    auto it = p.tags.find(k);
    if (it == p.tags.end() || it->second != v) return false;
  }
  return true;
}

double numeric_field(const Point& p, const std::string& field) {
  auto it = p.fields.find(field);
  if (it == p.fields.end()) {
    throw std::invalid_argument("aggregate: point lacks field " + field);
  }
  if (const auto* i = std::get_if<std::int64_t>(&it->second)) {
    return static_cast<double>(*i);
  }
  if (const auto* d = std::get_if<double>(&it->second)) return *d;
  if (const auto* b = std::get_if<bool>(&it->second)) return *b ? 1.0 : 0.0;
  throw std::invalid_argument("aggregate: field " + field + " is not numeric");
}

}  // namespace

RunStore::RunStore(std::filesystem::path dir, std::string run_id)
    : dir_(std::move(dir)),
      run_id_(std::move(run_id)),
      file_(dir_ / kPointsFile),
      mutex_(std::make_unique<std::mutex>()) {}

RunStore RunStore::create(const std::filesystem::path& root, const std::string& run_id) {
  if (run_id.empty()) throw std::invalid_argument("run id empty");
  const std::filesystem::path dir = root / run_id;
  if (std::filesystem::exists(dir / kPointsFile)) {
    throw std::invalid_argument("run already exists: " + run_id);
  }
  std::filesystem::create_directories(dir);
  std::ofstream touch(dir / kPointsFile, std::ios::app);
  if (!touch) throw std::runtime_error("cannot create " + (dir / kPointsFile).string());
  return RunStore(dir, run_id);
}

RunStore RunStore::open_dir(const std::filesystem::path& run_dir) {
  const std::filesystem::path file = run_dir / kPointsFile;
  if (!std::filesystem::exists(file)) {
    throw std::invalid_argument("no run data at " + run_dir.string());
  }
  RunStore s(run_dir, run_dir.filename().string());
  std::ifstream in(file);
  s.points_ = parse_stream(in);
  return s;
}

std::int64_t RunStore::append(std::span<const Point> points) {
  if (points.empty()) return 0;
  std::vector<std::string> lines;
  lines.reserve(points.size());
  for (const Point& p : points) lines.push_back(encode_line(p));

  std::lock_guard lock(*mutex_);
  std::ofstream out(file_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to " + file_.string());
  for (const std::string& line : lines) {
    out << line << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed on " + file_.string());
  points_.insert(points_.end(), points.begin(), points.end());
  return static_cast<std::int64_t>(points.size());
}

std::vector<Point> RunStore::query(const QueryFilter& filter) const {
  std::lock_guard lock(*mutex_);
  std::vector<Point> out;
  for (const Point& p : points_) {
    if (matches(p, filter)) out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(), [](const Point& a, const Point& b) {
    const std::string ka = a.series_key();
    const std::string kb = b.series_key();
    if (ka != kb) return ka < kb;
    return a.timestamp_ns < b.timestamp_ns;
  });
  return out;
}

std::vector<AggregateRow> RunStore::aggregate(const QueryFilter& filter,
                                              const Aggregate& agg) const {
  if (agg.kind == Aggregate::Kind::None) {
    throw std::invalid_argument("aggregate: kind None belongs to query()");
  }
  const std::vector<Point> rows = query(filter);
  std::map<std::string, std::pair<std::map<std::string, std::string>, std::vector<double>>>
      series;
  for (const Point& p : rows) {
    auto& entry = series[p.series_key()];
    entry.first = p.tags;
    if (agg.kind == Aggregate::Kind::Count) {
      entry.second.push_back(0);
    } else {
      entry.second.push_back(numeric_field(p, agg.field));
    }
  }
  std::vector<AggregateRow> out;
  out.reserve(series.size());
  for (auto& [key, entry] : series) {
    AggregateRow row;
    row.tags = std::move(entry.first);
    row.count = static_cast<std::int64_t>(entry.second.size());
    switch (agg.kind) {
      case Aggregate::Kind::Count:
        row.value = static_cast<double>(row.count);
        break;
      case Aggregate::Kind::Mean: {
        double sum = 0;
        for (double v : entry.second) sum += v;
        row.value = sum / static_cast<double>(entry.second.size());
        break;
      }
      case Aggregate::Kind::Percentile: {
        if (agg.q < 0 || agg.q > 100) {
          throw std::invalid_argument("percentile q outside [0, 100]");
        }
        std::sort(entry.second.begin(), entry.second.end());
        const auto rank = std::max<std::size_t>(
            1, static_cast<std::size_t>(
                   std::ceil(agg.q / 100.0 * static_cast<double>(entry.second.size()))));
        row.value = entry.second[rank - 1];
        break;
      }
      case Aggregate::Kind::None:
        break;
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Point> RunStore::all_points() const {
  std::lock_guard lock(*mutex_);
  return points_;
}

std::int64_t RunStore::size() const {
  std::lock_guard lock(*mutex_);
  return static_cast<std::int64_t>(points_.size());
}

Store::Store(std::filesystem::path root) : root_(std::move(root)) {
  std::filesystem::create_directories(root_);
}

RunStore Store::create_run(const std::string& run_id) {
  return RunStore::create(root_, run_id);
}

RunStore Store::open_run(const std::string& run_id) {
  return RunStore::open_dir(root_ / run_id);
}

bool Store::has_run(const std::string& run_id) const {
  return std::filesystem::exists(root_ / run_id / "points.lp");
}

std::vector<std::string> Store::list_runs() const {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(root_)) {
    if (entry.is_directory() && std::filesystem::exists(entry.path() / "points.lp")) {
      out.push_back(entry.path().filename().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace faasbench::store
