#include "faasbench/workloads/workloads.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "faasbench/util/rng.hpp"

namespace faasbench::workloads {

const char* to_string(WorkloadId id) {
  switch (id) {
    case WorkloadId::Fact: return "fact";
    case WorkloadId::MatrixMult: return "matrix";
    case WorkloadId::NetLatency: return "netlatency";
    case WorkloadId::DiskIO: return "diskio";
    case WorkloadId::Custom: return "custom";
  }
  throw std::invalid_argument("bad workload id value");
}

WorkloadId workload_id_from_string(const std::string& s) {
  if (s == "fact") return WorkloadId::Fact;
  if (s == "matrix") return WorkloadId::MatrixMult;
  if (s == "netlatency") return WorkloadId::NetLatency;
  if (s == "diskio") return WorkloadId::DiskIO;
  if (s == "custom") return WorkloadId::Custom;
  throw std::invalid_argument("unknown workload: " + s);
}

WorkloadSpec WorkloadSpec::make(WorkloadId id, std::map<std::string, std::string> params) {
  WorkloadSpec spec;
  spec.id = id;
  spec.params = std::move(params);
  switch (id) {
    case WorkloadId::Fact:
      spec.params.try_emplace("n", std::to_string(kDefaultFactInput));
      break;
    case WorkloadId::MatrixMult:
      spec.params.try_emplace("dim", std::to_string(kDefaultMatrixDim));
      spec.params.try_emplace("seed", "0");
      break;
    case WorkloadId::DiskIO:
      spec.params.try_emplace("size", std::to_string(1 << 20));
      spec.params.try_emplace("seed", "0");
      break;
    case WorkloadId::NetLatency:
    case WorkloadId::Custom:
      break;
  }
  spec.validate();
  return spec;
}

void WorkloadSpec::validate() const {
  auto need = [&](const char* key) {
    if (!params.contains(key)) {
      throw std::invalid_argument(std::string(to_string(id)) +
                                  " workload missing param: " + key);
    }
  };
  switch (id) {
    case WorkloadId::Fact: need("n"); break;
    case WorkloadId::MatrixMult: need("dim"); break;
    case WorkloadId::DiskIO: need("size"); break;
    case WorkloadId::NetLatency: break;
    case WorkloadId::Custom:
      if (!custom_entry && !params.contains("name")) {
        throw std::invalid_argument("custom workload missing handler name");
      }
      break;
  }
}

double WorkloadSpec::work_ms() const {
  auto it = params.find("work_ms");
  if (it != params.end()) return std::stod(it->second);
  switch (id) {
    case WorkloadId::Fact: return 400.0;
    case WorkloadId::MatrixMult: return 600.0;
    case WorkloadId::NetLatency: return 1.0;
    case WorkloadId::DiskIO: return 120.0;
    case WorkloadId::Custom: return 100.0;
  }
  return 100.0;
}

std::vector<std::uint64_t> run_fact(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("run_fact: n must be >= 1");
  std::vector<std::uint64_t> factors;
  while (n % 2 == 0) {
    factors.push_back(2);
    n /= 2;
  }
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    while (n % d == 0) {
      factors.push_back(d);
      n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

std::uint64_t run_matrix_mult(int dim, std::uint64_t seed) {
  if (dim < 1 || dim > kMaxMatrixDim) {
    throw std::invalid_argument("run_matrix_mult: dim out of [1, " +
                                std::to_string(kMaxMatrixDim) + "]");
  }
  const std::size_t n = static_cast<std::size_t>(dim);
  std::vector<std::uint64_t> a(n * n);
  std::vector<std::uint64_t> b(n * n);
  SplitMix64 rng(seed);
  for (auto& v : a) v = rng.next();
  for (auto& v : b) v = rng.next();
  std::uint64_t checksum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += a[i * n + k] * b[k * n + j];
      checksum += acc;
    }
  }
  return checksum;
}

std::string_view netlatency_body() {
  static constexpr char kBody[] =
      "{\"app\":\"faas-netlatency\",\"ok\":true,"
      "\"pad\":\"0123456789abcdefghijklmnopqrstuvwxy\"}";
  static_assert(sizeof(kBody) - 1 == 79, "netlatency body must be 79 bytes");
  return {kBody, sizeof(kBody) - 1};
}

namespace {

class ScratchFile {
public:
  explicit ScratchFile(const std::filesystem::path& dir, std::uint64_t tag)
      : path_(dir / ("faasbench-diskio-" + std::to_string(tag) + ".bin")) {}
  ~ScratchFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

private:
  std::filesystem::path path_;
};

void fill_chunk(SplitMix64& rng, char* out, std::size_t len) {
  std::size_t i = 0;
  while (i + 8 <= len) {
    std::uint64_t v = rng.next();
    std::memcpy(out + i, &v, 8);
    i += 8;
  }
  if (i < len) {
    std::uint64_t v = rng.next();
    std::memcpy(out + i, &v, len - i);
  }
}

}  // namespace

std::uint64_t diskio_stream_digest(std::int64_t size_bytes, std::uint64_t seed) {
  if (size_bytes < 1) throw std::invalid_argument("diskio: size must be >= 1");
  SplitMix64 rng(seed);
  Fnv1a64 digest;
  std::vector<char> buf(64 * 1024);
  std::int64_t left = size_bytes;
  while (left > 0) {
    const std::size_t chunk = static_cast<std::size_t>(
        std::min<std::int64_t>(left, static_cast<std::int64_t>(buf.size())));
    fill_chunk(rng, buf.data(), chunk);
    digest.update(buf.data(), chunk);
    left -= chunk;
  }
  return digest.digest();
}

DiskIoResult run_diskio(std::int64_t size_bytes, std::uint64_t seed,
                        const std::filesystem::path& scratch_dir) {
  if (size_bytes < 1) throw std::invalid_argument("diskio: size must be >= 1");
  using Clock = std::chrono::steady_clock;
  SplitMix64 rng(seed ^ 0x5ca1ab1eULL);
  ScratchFile scratch(scratch_dir, rng.next());

  DiskIoResult out;
  out.bytes = size_bytes;
  std::vector<char> buf(64 * 1024);

  const auto w0 = Clock::now();
  {
    std::ofstream f(scratch.path(), std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("diskio: scratch unavailable: " + scratch.path().string());
    SplitMix64 gen(seed);
    std::int64_t left = size_bytes;
    while (left > 0) {
      const std::size_t chunk = static_cast<std::size_t>(
          std::min<std::int64_t>(left, static_cast<std::int64_t>(buf.size())));
      fill_chunk(gen, buf.data(), chunk);
      f.write(buf.data(), static_cast<std::streamsize>(chunk));
      left -= chunk;
    }
    f.flush();
    if (!f) throw std::runtime_error("diskio: write failed");
  }
  out.write_ms = std::chrono::duration<double, std::milli>(Clock::now() - w0).count();

  const auto r0 = Clock::now();
  Fnv1a64 digest;
  {
    std::ifstream f(scratch.path(), std::ios::binary);
    if (!f) throw std::runtime_error("diskio: scratch reopen failed");
    std::int64_t total = 0;
    while (f) {
      f.read(buf.data(), static_cast<std::streamsize>(buf.size()));
      const std::streamsize got = f.gcount();
      if (got > 0) {
        digest.update(buf.data(), static_cast<std::size_t>(got));
        total += got;
      }
    }
    if (total != size_bytes) {
      throw std::runtime_error("diskio: short read (" + std::to_string(total) + " of " +
                               std::to_string(size_bytes) + " bytes)");
    }
  }
  out.read_ms = std::chrono::duration<double, std::milli>(Clock::now() - r0).count();
  out.digest = digest.digest();
  return out;
}

}  // namespace faasbench::workloads
