#include "latnorm/rng.hpp"

namespace latnorm {

long long Rng::uniform(long long lo, long long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(gen_() % span);
}

std::size_t Rng::index(std::size_t n) {
  return static_cast<std::size_t>(gen_() % n);
}

}  // namespace latnorm
