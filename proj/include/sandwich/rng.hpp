#pragma once

#include <cstdint>

namespace sandwich {

/// SplitMix64. The whole stream is determined by the 64-bit seed, so runs
/// replay bit-exactly across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % n;
  }

  int below(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }
  bool coin() { return next() & 1; }

  /// An independent stream derived from this one.
  Rng split() { return Rng(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace sandwich
