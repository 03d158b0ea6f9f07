#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace ncsphere {

// splitmix64: deterministic across platforms, unlike <random> distributions.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // uniform in [lo, hi] inclusive
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
};

// Runs fn(i) for i in [0, n) on `jobs` threads. Work items must be
// independent; results are typically written into a pre-sized vector slot i,
// which keeps aggregation deterministic regardless of scheduling.
void parallel_for_index(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

inline unsigned default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

}  // namespace ncsphere
