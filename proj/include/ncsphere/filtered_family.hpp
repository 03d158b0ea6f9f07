// Level-indexed families of permutation groups closed under tensor
// concatenation, the weak saturation closure, the adjacent-pair witness
// search, the standard parametrization levels, and the twist vanishing
// degree.
#pragma once

#include "ncsphere/permutation.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace ncsphere {

// Truncation of a filtered group to levels 1..cap: each level is a subgroup
// of S_k, the identity is present at every level, and tensor products land in
// the right level whenever it is below the cap.
class FilteredFamily {
 public:
  explicit FilteredFamily(int cap);

  static FilteredFamily trivial(int cap);
  static FilteredFamily full_symmetric(int cap);
  static FilteredFamily half_liberated(int cap);
  // Least filtered family whose levels contain the generators.
  static FilteredFamily generated(int cap, const std::vector<Permutation>& gens);

  int cap() const { return cap_; }
  const std::set<Permutation>& level(int k) const;
  bool contains(const Permutation& p) const;
  std::size_t total_size() const;

  // Inserts and reports whether the element was new. Level must be <= cap.
  bool insert(const Permutation& p);

  // Closes every level under composition and inverses, and the family under
  // tensor products within the cap.
  void close_filtered_group();

  // Checks the filtered-group invariants without modifying the family.
  bool is_filtered_group() const;

  friend bool operator==(const FilteredFamily&, const FilteredFamily&) = default;

 private:
  int cap_;
  std::map<int, std::set<Permutation>> levels_;
};

// Least fixpoint containing `family` that is a filtered group and is closed
// under the weak reduction move at every admissible position.
FilteredFamily weak_saturation_closure(const FilteredFamily& family);

// Witness for the adjacent-pair claim: a non-identity tau in the subgroup
// generated by 1(x)s and s(x)1 inside S_{k+1} with tau(i+1) = tau(i) +- 1.
struct AdjacentPairWitness {
  Permutation tau;
  std::string word;  // over generators named 1(x)s and s(x)1
  int position;      // the 1-based i
};

std::optional<AdjacentPairWitness> prop24_search(const Permutation& s);

enum class CoarseningMode { all_coarsenings, two_block };

// Permutations s in S_k all of whose pair-partition coarsenings (restricted
// to two-block coarsenings in two_block mode) have signature +1. Guarded at
// k <= 7.
std::vector<Permutation> parametrize_level(int k, CoarseningMode mode);

// Minimum block count m over coarsenings of the pair partition of s with
// signature -1, reported with the vanishing degree d = m - 1; empty when all
// coarsenings have signature +1.
struct TwistVanishDegree {
  int degree;        // d = min_blocks - 1
  int min_blocks;    // m
  Partition witness; // a coarsening with signature -1 and m blocks
};

std::optional<TwistVanishDegree> twist_vanish_degree(const Permutation& s);

}  // namespace ncsphere
