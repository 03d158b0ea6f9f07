#include "ncsphere/partition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace ncsphere {

int Partition::block_count() const {
  int m = -1;
  for (int v : labels) m = std::max(m, v);
  return m + 1;
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> sz(block_count(), 0);
  for (int v : labels) sz[v]++;
  return sz;
}

Partition normalized_partition(int upper, int lower, std::vector<int> raw) {
  if (static_cast<int>(raw.size()) != upper + lower)
    throw std::invalid_argument("label count does not match point count");
  std::map<int, int> rename;
  std::vector<int> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, fresh] = rename.emplace(raw[i], static_cast<int>(rename.size()));
    out[i] = it->second;
    (void)fresh;
  }
  return Partition{upper, lower, std::move(out)};
}

Partition make_partition(int upper, int lower, const std::vector<std::vector<int>>& blocks) {
  const int n = upper + lower;
  std::vector<int> raw(n, -1);
  int label = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty block in partition input");
    for (int pt : block) {
      if (pt < 1 || pt > n)
        throw std::invalid_argument("point " + std::to_string(pt) + " out of range 1.." + std::to_string(n));
      if (raw[pt - 1] != -1)
        throw std::invalid_argument("point " + std::to_string(pt) + " occurs in two blocks");
      raw[pt - 1] = label;
    }
    label++;
  }
  for (int i = 0; i < n; ++i)
    if (raw[i] == -1) throw std::invalid_argument("point " + std::to_string(i + 1) + " missing from blocks");
  return normalized_partition(upper, lower, std::move(raw));
}

Partition kernel(const std::vector<int>& upper_tuple, const std::vector<int>& lower_tuple) {
  std::vector<int> raw;
  raw.reserve(upper_tuple.size() + lower_tuple.size());
  raw.insert(raw.end(), upper_tuple.begin(), upper_tuple.end());
  raw.insert(raw.end(), lower_tuple.begin(), lower_tuple.end());
  return normalized_partition(static_cast<int>(upper_tuple.size()), static_cast<int>(lower_tuple.size()),
                              std::move(raw));
}

std::vector<int> flattened_order(int upper, int lower) {
  std::vector<int> order;
  order.reserve(upper + lower);
  for (int i = 0; i < upper; ++i) order.push_back(i);
  for (int j = lower - 1; j >= 0; --j) order.push_back(upper + j);
  return order;
}

std::vector<int> flattened_labels(const Partition& p) {
  std::vector<int> word;
  word.reserve(p.points());
  for (int pt : flattened_order(p.upper, p.lower)) word.push_back(p.labels[pt]);
  return word;
}

namespace {

// Two blocks interleave iff their merged subsequence has >= 4 letter runs.
bool word_noncrossing(const std::vector<int>& word) {
  const int b = *std::max_element(word.begin(), word.end()) + 1;
  if (b <= 1) return true;
  for (int x = 0; x < b; ++x) {
    for (int y = x + 1; y < b; ++y) {
      int runs = 0;
      int prev = -1;
      for (int v : word) {
        if (v != x && v != y) continue;
        if (v != prev) {
          runs++;
          prev = v;
        }
        if (runs >= 4) return false;
      }
    }
  }
  return true;
}

int word_inversions(const std::vector<int>& word) {
  int inv = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) inv++;
  return inv;
}

std::vector<int> normalize_word(const std::vector<int>& word) {
  std::map<int, int> rename;
  std::vector<int> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto [it, fresh] = rename.emplace(word[i], static_cast<int>(rename.size()));
    out[i] = it->second;
    (void)fresh;
  }
  return out;
}

std::string word_key(const std::vector<int>& word) {
  std::string key(word.size(), '\0');
  for (std::size_t i = 0; i < word.size(); ++i) key[i] = static_cast<char>(word[i]);
  return key;
}

void check_even(const Partition& p) {
  auto sizes = p.block_sizes();
  for (std::size_t b = 0; b < sizes.size(); ++b)
    if (sizes[b] % 2 != 0)
      throw std::domain_error("signature needs even blocks; block " + std::to_string(b) + " has size " +
                              std::to_string(sizes[b]));
}

}  // namespace

bool is_noncrossing(const Partition& p) { return word_noncrossing(flattened_labels(p)); }

bool all_blocks_even(const Partition& p) {
  for (int s : p.block_sizes())
    if (s % 2 != 0) return false;
  return true;
}

int signature(const Partition& p) {
  check_even(p);
  return word_inversions(flattened_labels(p)) % 2 == 0 ? 1 : -1;
}

int signature_by_switches(const Partition& p) {
  check_even(p);
  std::vector<int> start = flattened_labels(p);
  if (word_noncrossing(start)) return 1;
  std::unordered_set<std::string> seen;
  std::deque<std::pair<std::vector<int>, int>> queue;
  seen.insert(word_key(start));
  queue.emplace_back(start, 0);
  while (!queue.empty()) {
    auto [word, depth] = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] == word[i + 1]) continue;
      std::vector<int> next = word;
      std::swap(next[i], next[i + 1]);
      next = normalize_word(next);
      if (!seen.insert(word_key(next)).second) continue;
      if (word_noncrossing(next)) return (depth + 1) % 2 == 0 ? 1 : -1;
      queue.emplace_back(std::move(next), depth + 1);
    }
  }
  throw std::logic_error("switch graph contains no noncrossing partition");
}

std::set<int> noncrossing_level_parities(const Partition& p) {
  check_even(p);
  std::set<int> parities;
  std::vector<int> start = flattened_labels(p);
  std::unordered_set<std::string> seen;
  std::deque<std::pair<std::vector<int>, int>> queue;
  seen.insert(word_key(start));
  queue.emplace_back(start, 0);
  while (!queue.empty()) {
    auto [word, depth] = queue.front();
    queue.pop_front();
    if (word_noncrossing(word)) parities.insert(depth % 2);
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] == word[i + 1]) continue;
      std::vector<int> next = word;
      std::swap(next[i], next[i + 1]);
      next = normalize_word(next);
      if (!seen.insert(word_key(next)).second) continue;
      queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return parities;
}

Partition switch_move(const Partition& p, int pos) {
  auto order = flattened_order(p.upper, p.lower);
  if (pos < 0 || pos + 1 >= static_cast<int>(order.size()))
    throw std::invalid_argument("switch position out of range");
  int a = order[pos], b = order[pos + 1];
  if (p.labels[a] == p.labels[b]) throw std::invalid_argument("switch needs points in different blocks");
  std::vector<int> raw = p.labels;
  std::swap(raw[a], raw[b]);
  return normalized_partition(p.upper, p.lower, std::move(raw));
}

std::vector<Partition> coarsenings(const Partition& p) {
  const int b = p.block_count();
  if (b > 10) throw std::length_error("coarsening enumeration limited to 10 blocks");
  std::vector<Partition> out;
  if (b == 0) {
    out.push_back(p);
    return out;
  }
  // Restricted growth strings over the blocks of p.
  std::vector<int> rgs(b, 0);
  while (true) {
    std::vector<int> raw(p.points());
    for (int i = 0; i < p.points(); ++i) raw[i] = rgs[p.labels[i]];
    out.push_back(normalized_partition(p.upper, p.lower, std::move(raw)));
    int i = b - 1;
    while (i > 0) {
      int maxPrefix = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= maxPrefix) {
        rgs[i]++;
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

bool is_coarsening_of(const Partition& coarse, const Partition& fine) {
  if (coarse.upper != fine.upper || coarse.lower != fine.lower) return false;
  // fine block -> coarse label must be a function.
  std::map<int, int> image;
  for (int i = 0; i < fine.points(); ++i) {
    auto [it, fresh] = image.emplace(fine.labels[i], coarse.labels[i]);
    if (!fresh && it->second != coarse.labels[i]) return false;
  }
  return true;
}

std::vector<Partition> all_partitions(int upper, int lower) {
  const int n = upper + lower;
  if (n > 12) throw std::length_error("partition enumeration limited to 12 points");
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition{upper, lower, {}});
    return out;
  }
  std::vector<int> word(n, 0);
  while (true) {
    out.push_back(normalized_partition(upper, lower, word));
    int i = n - 1;
    while (i > 0) {
      int maxPrefix = *std::max_element(word.begin(), word.begin() + i);
      if (word[i] <= maxPrefix) {
        word[i]++;
        std::fill(word.begin() + i + 1, word.end(), 0);
        break;
      }
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

std::string to_string(const Partition& p) {
  std::string s = "{";
  for (int i = 0; i < p.upper; ++i) {
    if (i) s += ' ';
    s += std::to_string(p.labels[i]);
  }
  s += " | ";
  for (int j = 0; j < p.lower; ++j) {
    if (j) s += ' ';
    s += std::to_string(p.labels[p.upper + j]);
  }
  s += '}';
  return s;
}

}  // namespace ncsphere
