#pragma once

#include <cstdint>
#include <random>

namespace markedpoly {

// Deterministic pseudo random source: std::mt19937_64 with bounded integers
// drawn by rejection sampling, so a seed yields the same stream on every
// platform (std::uniform_int_distribution is implementation defined).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  // True with probability num/den.
  bool chance(std::int64_t num, std::int64_t den) { return uniform(0, den - 1) < num; }

private:
  std::mt19937_64 engine_;
};

} // namespace markedpoly
