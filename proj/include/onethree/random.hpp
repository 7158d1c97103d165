#pragma once

#include <cstdint>

namespace onethree {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream key from a parent key and a tag.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t tag) {
  return mix64(parent ^ mix64(tag + 0x632be59bd9b4e019ULL));
}

// Counter-based generator: output i is mix64(key + i * golden). Every draw is
// a pure function of (key, counter), so streams are reproducible bit for bit
// on any platform. No <random> distributions are used anywhere a result must
// be reproducible.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * counter_++); }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace onethree
