// Set partitions of a two-row point set, kernels of index tuples, coarsening
// enumeration, and the signature map on partitions with even blocks.
//
// Points are numbered 1..k+l: first the upper row left to right, then the
// lower row left to right. Crossing detection and switch moves use the
// flattened order (clockwise traversal): upper row left to right, then lower
// row right to left. The signature of an even partition is (-1)^c, where c is
// the number of switches of neighboring points (in the flattened order, lying
// in different blocks) needed to reach a noncrossing partition. Each switch
// changes the inversion count of the flattened label word by exactly 1, and
// every noncrossing arrangement of even blocks has an even inversion count,
// so the signature equals the inversion parity of the flattened label word;
// `signature` computes that, `signature_by_switches` runs the literal
// breadth-first search and is kept as an independent oracle.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ncsphere {

struct Partition {
  int upper = 0;
  int lower = 0;
  // One label per point (upper row then lower row), normalized so labels
  // appear in first-occurrence order starting at 0.
  std::vector<int> labels;

  int points() const { return upper + lower; }
  int block_count() const;
  std::vector<int> block_sizes() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

// Renormalizes labels into first-occurrence order.
Partition normalized_partition(int upper, int lower, std::vector<int> raw_labels);

// blocks: sets of 1-based point indices that must partition {1,..,k+l}.
// Throws std::invalid_argument naming the offending point index.
Partition make_partition(int upper, int lower, const std::vector<std::vector<int>>& blocks);

// Partition of k+l points joining positions that carry equal values.
Partition kernel(const std::vector<int>& upper_tuple, const std::vector<int>& lower_tuple);

// Flattened traversal of the k+l points: 0-based point indices, upper row
// left to right then lower row right to left.
std::vector<int> flattened_order(int upper, int lower);

// Labels of p read along the flattened order.
std::vector<int> flattened_labels(const Partition& p);

// True iff no two blocks interleave in the flattened order.
bool is_noncrossing(const Partition& p);

bool all_blocks_even(const Partition& p);

// Signature of an even partition: inversion parity of the flattened label
// word (equivalently, parity of any switch sequence reaching a noncrossing
// partition). Throws std::domain_error naming an odd block otherwise.
int signature(const Partition& p);

// Literal transcription of the definition: breadth-first search over
// adjacent-switch moves to the nearest noncrossing partition. Exponential in
// principle; intended for partitions on <= 10 points.
int signature_by_switches(const Partition& p);

// Full exploration of the adjacent-switch graph; returns the set of depth
// parities (0 or 1) at which noncrossing partitions occur. Well-definedness
// of the signature means this set is a singleton.
std::set<int> noncrossing_level_parities(const Partition& p);

// Transposes the points at flattened positions pos and pos+1 (0-based).
// Requires the two points to lie in different blocks.
Partition switch_move(const Partition& p, int pos);

// Every partition obtained by merging blocks of p, p itself included; the
// count is Bell(block_count). Deterministic order (restricted growth strings
// over the blocks). Guarded against more than 10 blocks.
std::vector<Partition> coarsenings(const Partition& p);

// True iff every block of fine is contained in a block of coarse (same point set).
bool is_coarsening_of(const Partition& coarse, const Partition& fine);

// All set partitions of the (upper, lower) point set, in restricted-growth
// order. Guarded at 12 points.
std::vector<Partition> all_partitions(int upper, int lower);

// Diagnostic rendering "{0 1 | 1 0}".
std::string to_string(const Partition& p);

}  // namespace ncsphere
