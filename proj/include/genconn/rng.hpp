#pragma once

#include <cstdint>
#include <random>

namespace genconn {

// Seedable deterministic random stream. All distributions are implemented
// on top of the raw 64-bit output so that identical seeds give identical
// draws independent of the standard library's distribution internals.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01();

  // Uniform on {0, 1, ..., n-1}; unbiased via rejection. Requires n >= 1.
  std::uint64_t uniform_below(std::uint64_t n);

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double gaussian();

  // Derived worker stream. Depends only on the master seed and the index,
  // not on how much of this stream has been consumed.
  RandomStream spawn(std::uint64_t stream_index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_cached_gaussian_ = false;
  double cached_gaussian_ = 0.0;
};

}  // namespace genconn
