#pragma once

// Reproducible randomness.
//
// Streams are std::mt19937_64 (fully specified by the standard, identical on
// every platform), seeded from a (master, path) pair hashed with the
// SplitMix64 finalizer. Distributions are implemented here rather than via
// <random> distributions, whose algorithms are implementation-defined.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace lop {

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct RngSeed {
  std::uint64_t master = 0;
  std::vector<std::uint64_t> path;

  RngSeed() = default;
  RngSeed(std::uint64_t m, std::initializer_list<std::uint64_t> p = {}) : master(m), path(p) {}
  RngSeed(std::uint64_t m, std::vector<std::uint64_t> p) : master(m), path(std::move(p)) {}

  /// h = mix64(master); h = mix64(h ^ mix64(p)) for each path entry p.
  std::uint64_t derive() const {
    std::uint64_t h = mix64(master);
    for (std::uint64_t p : path) h = mix64(h ^ mix64(p));
    return h;
  }

  RngSeed child(std::uint64_t index) const {
    RngSeed c = *this;
    c.path.push_back(index);
    return c;
  }
};

class Rng {
public:
  explicit Rng(const RngSeed& seed) : engine_(seed.derive()) {}

  /// Uniform on the open interval (lo, hi), 53-bit resolution.
  double uniform(double lo, double hi) {
    const double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  /// Unbiased integer in [0, bound).
  int below(int bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % b);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<int>(x % b);
  }

  bool coin() { return below(2) == 1; }

  /// Fisher-Yates.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(static_cast<int>(i)));
      std::swap(items[i - 1], items[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace lop
