#pragma once

#include <cstdint>

namespace faasbench {

// splitmix64: tiny, platform-independent generator used wherever byte streams
// or matrix contents must be reproducible across runs and machines.
class SplitMix64 {
public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

// 64-bit FNV-1a, the digest used by the disk workload verification path.
class Fnv1a64 {
public:
  void update(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      hash_ ^= p[i];
      hash_ *= 0x100000001b3ULL;
    }
  }
  std::uint64_t digest() const { return hash_; }

private:
  std::uint64_t hash_{0xcbf29ce484222325ULL};
};

// Stable derivation of per-component seeds from one campaign seed.
inline std::uint64_t derive_seed(std::uint64_t root, const char* label) {
  Fnv1a64 h;
  h.update(&root, sizeof(root));
  std::size_t len = 0;
  while (label[len] != '\0') ++len;
  h.update(label, len);
  return h.digest();
}

}  // namespace faasbench
