#include "ncsphere/util.hpp"

#include "ncsphere/arith.hpp"

#include <atomic>

namespace ncsphere {

void parallel_for_index(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  if (jobs <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  unsigned count = std::min<std::size_t>(jobs, n);
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return z.re.get_str();
  if (z.re == 0) return z.im.get_str() + "i";
  std::string s = z.re.get_str();
  if (z.im > 0) s += "+";
  s += z.im.get_str() + "i";
  return s;
}

}  // namespace ncsphere
