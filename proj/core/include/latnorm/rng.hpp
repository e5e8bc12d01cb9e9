#pragma once

#include <cstdint>
#include <random>

namespace latnorm {

// Seeded generator with platform-independent output. std::mt19937_64's raw
// stream is pinned by the standard; std::uniform_int_distribution is not, so
// bounded draws use plain modulo (the slight bias is irrelevant here and the
// byte-for-byte reproducibility is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform-ish integer in [lo, hi], lo <= hi.
  long long uniform(long long lo, long long hi);

  // Uniform index in [0, n).
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 gen_;
};

}  // namespace latnorm
