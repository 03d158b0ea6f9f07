#include "ncsphere/filtered_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncsphere {

FilteredFamily::FilteredFamily(int cap) : cap_(cap) {
  if (cap < 1 || cap > 8) throw std::length_error("filtered family cap must be in 1..8");
  for (int k = 1; k <= cap; ++k) levels_[k].insert(Permutation::identity(k));
}

FilteredFamily FilteredFamily::trivial(int cap) { return FilteredFamily(cap); }

FilteredFamily FilteredFamily::full_symmetric(int cap) {
  FilteredFamily f(cap);
  for (int k = 1; k <= cap; ++k)
    for (auto& p : symmetric_group(k)) f.insert(p);
  return f;
}

FilteredFamily FilteredFamily::half_liberated(int cap) {
  FilteredFamily f(cap);
  for (int k = 1; k <= cap; ++k)
    for (auto& p : symmetric_group(k))
      if (is_half_liberated(p)) f.insert(p);
  return f;
}

FilteredFamily FilteredFamily::generated(int cap, const std::vector<Permutation>& gens) {
  FilteredFamily f(cap);
  for (const auto& g : gens)
    if (g.size() >= 1 && g.size() <= cap) f.insert(g);
  f.close_filtered_group();
  return f;
}

const std::set<Permutation>& FilteredFamily::level(int k) const {
  auto it = levels_.find(k);
  if (it == levels_.end()) throw std::out_of_range("level above cap");
  return it->second;
}

bool FilteredFamily::contains(const Permutation& p) const {
  auto it = levels_.find(p.size());
  return it != levels_.end() && it->second.count(p) != 0;
}

std::size_t FilteredFamily::total_size() const {
  std::size_t n = 0;
  for (auto& [k, lvl] : levels_) n += lvl.size();
  return n;
}

bool FilteredFamily::insert(const Permutation& p) {
  if (p.size() < 1 || p.size() > cap_) throw std::out_of_range("element size above cap");
  return levels_.at(p.size()).insert(p).second;
}

void FilteredFamily::close_filtered_group() {
  auto factorial = [](int k) {
    std::size_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    // Group closure per level: the current members are the generators.
    for (auto& [k, lvl] : levels_) {
      if (lvl.size() == factorial(k)) continue;  // already all of S_k
      std::vector<Permutation> gens(lvl.begin(), lvl.end());
      std::vector<Permutation> frontier{Permutation::identity(k)};
      std::set<Permutation> closed{Permutation::identity(k)};
      while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& a : frontier) {
          for (const auto& g : gens) {
            for (const Permutation& c : {compose(a, g), compose(a, g.inverse())}) {
              if (closed.insert(c).second) next.push_back(c);
            }
          }
        }
        frontier = std::move(next);
      }
      if (closed.size() != lvl.size()) {
        lvl = std::move(closed);
        changed = true;
      }
    }
    // Tensor closure within the cap.
    std::vector<Permutation> pending;
    for (auto& [k, lk] : levels_) {
      for (auto& [l, ll] : levels_) {
        if (k + l > cap_) continue;
        for (const auto& a : lk)
          for (const auto& b : ll) {
            Permutation t = tensor(a, b);
            if (!levels_.at(k + l).count(t)) pending.push_back(std::move(t));
          }
      }
    }
    for (auto& p : pending)
      if (levels_.at(p.size()).insert(p).second) changed = true;
  }
}

bool FilteredFamily::is_filtered_group() const {
  auto factorial = [](int k) {
    std::size_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  for (auto& [k, lvl] : levels_) {
    if (!lvl.count(Permutation::identity(k))) return false;
    if (lvl.size() == factorial(k)) continue;  // all of S_k is a group
    for (const auto& a : lvl) {
      if (!lvl.count(a.inverse())) return false;
      for (const auto& b : lvl)
        if (!lvl.count(compose(a, b))) return false;
    }
  }
  for (auto& [k, lk] : levels_)
    for (auto& [l, ll] : levels_) {
      if (k + l > cap_) continue;
      for (const auto& a : lk)
        for (const auto& b : ll)
          if (!contains(tensor(a, b))) return false;
    }
  return true;
}

FilteredFamily weak_saturation_closure(const FilteredFamily& family) {
  FilteredFamily f = family;
  f.close_filtered_group();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Permutation> reductions;
    for (int k = 3; k <= f.cap(); ++k) {
      for (const auto& s : f.level(k)) {
        for (int i = 1; i + 1 <= k; ++i) {
          if (std::abs(s(i + 1) - s(i)) != 1) continue;
          Permutation r = weak_reduce(s, i);
          if (r.size() >= 1 && !f.contains(r)) reductions.push_back(std::move(r));
        }
      }
    }
    for (auto& r : reductions)
      if (f.insert(r)) changed = true;
    if (changed) f.close_filtered_group();
  }
  return f;
}

std::optional<AdjacentPairWitness> prop24_search(const Permutation& s) {
  if (s.is_identity()) throw std::invalid_argument("adjacent-pair search expects a non-identity permutation");
  const Permutation left = tensor(Permutation::identity(1), s);
  const Permutation right = tensor(s, Permutation::identity(1));

  // breadth-first over the two-sided closure, early exit at the first
  // non-identity element with adjacent values (lexicographic within a level)
  struct Side {
    Permutation p;
    std::string name;
  };
  std::vector<Side> steps{{left, "1(x)s"}, {right, "s(x)1"}};
  if (!(left.inverse() == left)) steps.push_back({left.inverse(), "1(x)s^-1"});
  if (!(right.inverse() == right)) steps.push_back({right.inverse(), "s(x)1^-1"});

  std::map<Permutation, std::string> witness;
  Permutation e = Permutation::identity(s.size() + 1);
  witness.emplace(e, "e");
  std::vector<Permutation> frontier{e};
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    for (const auto& tau : frontier) {
      if (tau.is_identity()) continue;
      if (auto i = adjacent_pair(tau)) return AdjacentPairWitness{tau, witness.at(tau), *i};
    }
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      const std::string word = witness.at(x);
      for (const auto& step : steps) {
        for (bool on_right : {true, false}) {
          Permutation y = on_right ? compose(x, step.p) : compose(step.p, x);
          std::string w = word == "e" ? step.name : (on_right ? word + "." + step.name : step.name + "." + word);
          if (witness.emplace(y, std::move(w)).second) next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::vector<Permutation> parametrize_level(int k, CoarseningMode mode) {
  if (k < 1 || k > 7) throw std::length_error("parametrization level limited to k <= 7");
  std::vector<Permutation> out;
  for (const auto& s : symmetric_group(k)) {
    bool ok = true;
    for (const auto& c : coarsenings(pair_partition(s))) {
      if (mode == CoarseningMode::two_block && c.block_count() != 2) continue;
      if (signature(c) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::optional<TwistVanishDegree> twist_vanish_degree(const Permutation& s) {
  std::optional<TwistVanishDegree> best;
  for (const auto& c : coarsenings(pair_partition(s))) {
    if (signature(c) != -1) continue;
    int m = c.block_count();
    if (!best || m < best->min_blocks) best = TwistVanishDegree{m - 1, m, c};
  }
  return best;
}

}  // namespace ncsphere
