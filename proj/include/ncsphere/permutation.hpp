// Permutations in one-line notation and the operations the closure searches
// need: tensor concatenation, composition, generated subgroups with witness
// words, adjacent value pairs, and the weak reduction move.
#pragma once

#include "ncsphere/partition.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncsphere {

struct Permutation {
  // one_line[i] = image of position i+1, values 1..k, bijective.
  std::vector<int> one_line;

  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);

  int size() const { return static_cast<int>(one_line.size()); }
  int operator()(int pos) const { return one_line[pos - 1]; }  // 1-based
  bool is_identity() const;

  Permutation inverse() const;
  int inversion_count() const;
  int sign() const { return inversion_count() % 2 == 0 ? 1 : -1; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

// Global composition convention: compose(a, b) maps i to a(b(i)), i.e. b acts
// first. Claims about the two inconsistent product witnesses in the source
// material are always phrased as membership in a two-sided generated group,
// which does not depend on this choice.
Permutation compose(const Permutation& a, const Permutation& b);

// Acts as a on the first points and as b, shifted, on the rest.
Permutation tensor(const Permutation& a, const Permutation& b);

// One-line rendering "(2413)"; entries space-separated beyond size 9.
std::string to_string(const Permutation& p);
Permutation parse_permutation(const std::string& text);

// Partition with k upper and k lower points joining each value's upper
// position to its lower position: kernel((1..k), (s(1)..s(k))).
Partition pair_partition(const Permutation& s);

// Least 1-based i with s(i+1) = s(i) +- 1, if any.
std::optional<int> adjacent_pair(const Permutation& s);

// s(i) with s(i+1) = s(i) +- 1 required; deletes positions i, i+1 and their
// values, then relabels order-preservingly into S_{k-2}.
Permutation weak_reduce(const Permutation& s, int i);

// Parity-preserving permutations: s(i) = i (mod 2) for all i. These are
// exactly the permutations whose pair partition joins legs of opposite color
// in the clockwise alternating coloring.
bool is_half_liberated(const Permutation& s);

// All permutations of size k in lexicographic order. Guarded at k <= 8.
std::vector<Permutation> symmetric_group(int k);

// Subgroup generated by gens (all of equal size), closed under products in
// both orders and under inverses; each element carries one witness word over
// the given generator names. Breadth-first levels, lexicographic within a
// level, so output order is deterministic.
struct GeneratedGroup {
  std::vector<Permutation> elements;           // BFS discovery order
  std::map<Permutation, std::string> witness;  // element -> word
  bool contains(const Permutation& p) const { return witness.count(p) != 0; }
};

GeneratedGroup generated_group(const std::vector<Permutation>& gens, const std::vector<std::string>& names);

}  // namespace ncsphere
