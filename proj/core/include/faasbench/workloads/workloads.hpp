#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace faasbench::workloads {

enum class WorkloadId { Fact, MatrixMult, NetLatency, DiskIO, Custom };

const char* to_string(WorkloadId id);
WorkloadId workload_id_from_string(const std::string& s);

struct WorkloadSpec {
  WorkloadId id{WorkloadId::NetLatency};
  std::map<std::string, std::string> params;
  std::optional<std::string> custom_entry;

  // Fills defaults for the chosen id, then checks completeness.
  static WorkloadSpec make(WorkloadId id,
                           std::map<std::string, std::string> params = {});
  void validate() const;  // throws std::invalid_argument
  // Nominal execution cost in milliseconds at the reference CPU, used by the
  // provider simulator ("work_ms" param overrides the per-id default).
  double work_ms() const;
};

// Factorization inputs known to keep trial division busy for a graded range
// of desk-scale durations (each is a product of two verified primes).
inline constexpr std::array<std::uint64_t, 5> kHardSemiprimes = {
    100440259ULL,            // 10007 * 10037, microseconds
    1000036000099ULL,        // 1000003 * 1000033, ~1 ms
    400000520000069ULL,      // 20000003 * 20000023, tens of ms
    40000014400001287ULL,    // 200000033 * 200000039, ~0.2 s
    187132086899005471ULL,   // 452930477 * 413158523, ~0.5-1 s
};
inline constexpr std::uint64_t kDefaultFactInput = kHardSemiprimes[3];
inline constexpr int kDefaultMatrixDim = 128;

// Prime factors with multiplicity, nondecreasing; product equals n. n=1 -> {}.
std::vector<std::uint64_t> run_fact(std::uint64_t n);

// Multiplies two seeded dim x dim integer matrices (wrapping arithmetic)
// and returns an order-independent checksum of the product.
// Throws std::invalid_argument for dim < 1 or dim > kMaxMatrixDim.
inline constexpr int kMaxMatrixDim = 2048;
std::uint64_t run_matrix_mult(int dim, std::uint64_t seed);

// The fixed 79-byte JSON body of the network-latency workload.
std::string_view netlatency_body();

struct DiskIoResult {
  std::uint64_t digest{0};
  std::int64_t bytes{0};
  double write_ms{0};
  double read_ms{0};
};

// Writes size_bytes of seeded data to a scratch file, reads it back and
// digests it. Throws std::invalid_argument for size < 1, std::runtime_error
// on scratch failures or short reads.
DiskIoResult run_diskio(std::int64_t size_bytes, std::uint64_t seed,
                        const std::filesystem::path& scratch_dir =
                            std::filesystem::temp_directory_path());

// Digest the diskio generator stream alone (verification oracle hook).
std::uint64_t diskio_stream_digest(std::int64_t size_bytes, std::uint64_t seed);

}  // namespace faasbench::workloads
