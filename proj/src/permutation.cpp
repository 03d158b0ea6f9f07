#include "ncsphere/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ncsphere {

Permutation::Permutation(std::vector<int> images) : one_line(std::move(images)) {
  std::vector<bool> seen(one_line.size(), false);
  for (int v : one_line) {
    if (v < 1 || v > size() || seen[v - 1]) throw std::invalid_argument("not a permutation in one-line form");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  Permutation p;
  p.one_line = std::move(v);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (one_line[i - 1] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line.size());
  for (int i = 1; i <= size(); ++i) inv[one_line[i - 1] - 1] = i;
  Permutation p;
  p.one_line = std::move(inv);
  return p;
}

int Permutation::inversion_count() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (one_line[i] > one_line[j]) inv++;
  return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composition needs equal sizes");
  std::vector<int> v(a.size());
  for (int i = 1; i <= a.size(); ++i) v[i - 1] = a(b(i));
  Permutation p;
  p.one_line = std::move(v);
  return p;
}

Permutation tensor(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  v.reserve(a.size() + b.size());
  v.insert(v.end(), a.one_line.begin(), a.one_line.end());
  for (int x : b.one_line) v.push_back(x + a.size());
  Permutation p;
  p.one_line = std::move(v);
  return p;
}

std::string to_string(const Permutation& p) {
  std::string s = "(";
  const bool spaced = p.size() > 9;
  for (int i = 0; i < p.size(); ++i) {
    if (i && spaced) s += ' ';
    s += std::to_string(p.one_line[i]);
  }
  s += ')';
  return s;
}

Permutation parse_permutation(const std::string& text) {
  std::vector<int> v;
  std::string cur;
  bool spaced = text.find(' ') != std::string::npos || text.find(',') != std::string::npos;
  for (char c : text) {
    if (c == '(' || c == ')') continue;
    if (spaced) {
      if (c == ' ' || c == ',') {
        if (!cur.empty()) v.push_back(std::atoi(cur.c_str()));
        cur.clear();
      } else {
        cur += c;
      }
    } else {
      if (c >= '1' && c <= '9') v.push_back(c - '0');
    }
  }
  if (!cur.empty()) v.push_back(std::atoi(cur.c_str()));
  return Permutation(std::move(v));
}

Partition pair_partition(const Permutation& s) {
  std::vector<int> upper(s.size()), lower(s.size());
  std::iota(upper.begin(), upper.end(), 1);
  for (int i = 1; i <= s.size(); ++i) lower[i - 1] = s(i);
  return kernel(upper, lower);
}

std::optional<int> adjacent_pair(const Permutation& s) {
  for (int i = 1; i + 1 <= s.size(); ++i)
    if (std::abs(s(i + 1) - s(i)) == 1) return i;
  return std::nullopt;
}

Permutation weak_reduce(const Permutation& s, int i) {
  if (i < 1 || i + 1 > s.size()) throw std::invalid_argument("weak_reduce position out of range");
  if (std::abs(s(i + 1) - s(i)) != 1) throw std::invalid_argument("weak_reduce needs adjacent values at i");
  const int v1 = s(i), v2 = s(i + 1);
  std::vector<int> v;
  v.reserve(s.size() - 2);
  for (int pos = 1; pos <= s.size(); ++pos) {
    if (pos == i || pos == i + 1) continue;
    int val = s(pos);
    int shift = (val > v1 ? 1 : 0) + (val > v2 ? 1 : 0);
    v.push_back(val - shift);
  }
  return Permutation(std::move(v));
}

bool is_half_liberated(const Permutation& s) {
  for (int i = 1; i <= s.size(); ++i)
    if ((s(i) - i) % 2 != 0) return false;
  return true;
}

std::vector<Permutation> symmetric_group(int k) {
  if (k > 8) throw std::length_error("symmetric group enumeration limited to k <= 8");
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p;
    p.one_line = v;
    out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

GeneratedGroup generated_group(const std::vector<Permutation>& gens, const std::vector<std::string>& names) {
  GeneratedGroup g;
  if (gens.empty()) return g;
  const int k = gens[0].size();
  for (const auto& gen : gens)
    if (gen.size() != k) throw std::invalid_argument("generators must share one size");

  struct Side {
    Permutation p;
    std::string name;
  };
  std::vector<Side> steps;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string name = i < names.size() ? names[i] : "g" + std::to_string(i + 1);
    steps.push_back({gens[i], name});
    Permutation inv = gens[i].inverse();
    if (!(inv == gens[i])) steps.push_back({inv, name + "^-1"});
  }

  Permutation e = Permutation::identity(k);
  g.witness.emplace(e, "e");
  g.elements.push_back(e);
  std::vector<Permutation> frontier{e};
  while (!frontier.empty()) {
    // Lexicographic within a level keeps discovery order canonical.
    std::sort(frontier.begin(), frontier.end());
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      const std::string& word = g.witness.at(x);
      for (const auto& step : steps) {
        auto extend = [&](Permutation y, std::string w) {
          if (g.witness.emplace(y, std::move(w)).second) {
            g.elements.push_back(y);
            next.push_back(std::move(y));
          }
        };
        extend(compose(x, step.p), word == "e" ? step.name : word + "." + step.name);
        extend(compose(step.p, x), word == "e" ? step.name : step.name + "." + word);
      }
    }
    frontier = std::move(next);
  }
  return g;
}

}  // namespace ncsphere
