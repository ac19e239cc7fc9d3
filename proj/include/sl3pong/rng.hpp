#pragma once

// Deterministic RNG for sampling campaigns. Per-item generators are derived
// from the campaign seed in counter mode, so a campaign's sample sequence is
// a pure function of (seed, index) and independent of thread scheduling.

#include <cstdint>

namespace sl3pong {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng derive(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0) {
    std::uint64_t s = seed ^ (0x51ed2701a2b3c4d5ULL * (index + 1)) ^ (stream << 32);
    std::uint64_t mixed = splitmix64(s);
    return Rng(mixed);
  }

  std::uint64_t next() { return splitmix64(state_); }

  // Uniform in [0, n), n > 0. Modulo bias is irrelevant for test sampling.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

}  // namespace sl3pong
