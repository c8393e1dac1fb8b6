#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace sensecomp {

// Default for every --seed flag.
inline constexpr std::uint64_t kDefaultSeed = 20170403;

// Stable 64-bit FNV-1a hash; independent of the standard library.
std::uint64_t stable_hash(std::string_view bytes);
// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

// Seeded pseudo-random stream with portable sampling helpers. The std
// distributions are implementation-defined, so bounded integers, shuffles
// and subsets are drawn here directly from the 64-bit engine output.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(mix64(seed)) {}

  // Independent stream keyed by (seed, parts...). Used at every sampling
  // site so that results do not depend on iteration order.
  static RandomStream derive(std::uint64_t seed, std::initializer_list<std::string_view> parts);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::size_t uniform_index(std::size_t n);
  // Uniform in [0, 1).
  double uniform01();
  bool coin() { return (next() >> 63) != 0; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      using std::swap;
      swap(items[i - 1], items[uniform_index(i)]);
    }
  }
  template <typename T>
  void shuffle(std::vector<T>& items) {
    shuffle(std::span<T>(items));
  }

  // k distinct indices from [0, n), in draw order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sensecomp
