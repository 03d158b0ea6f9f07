// Reduced words in the free product of N copies of the order-2 group, and
// the rational group algebra over them (entries of the diagonal dual model).
#pragma once

#include "ncsphere/arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncsphere {

struct GroupWord {
  // letters in 1..N, reduced: no two equal adjacent letters (g_i^2 = e)
  std::vector<int> letters;

  static GroupWord e() { return {}; }
  static GroupWord gen(int i) { return {{i}}; }
  bool is_identity() const { return letters.empty(); }

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;
};

std::string to_string(const GroupWord& w);

// Reduces g_i g_j g_k and g_k g_j g_i and compares.
bool free_product_check(int i, int j, int k);

class GroupAlgebra {
 public:
  GroupAlgebra() = default;
  GroupAlgebra(const GroupWord& w, Rational c = 1) {
    if (c != 0) terms_.emplace(w, std::move(c));
  }

  static GroupAlgebra zero() { return {}; }
  static GroupAlgebra one() { return GroupAlgebra(GroupWord::e()); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<GroupWord, Rational>& terms() const { return terms_; }

  void add(const GroupWord& w, const Rational& c);
  friend GroupAlgebra operator+(const GroupAlgebra& a, const GroupAlgebra& b);
  friend GroupAlgebra operator-(const GroupAlgebra& a, const GroupAlgebra& b);
  friend GroupAlgebra operator*(const GroupAlgebra& a, const GroupAlgebra& b);
  friend bool operator==(const GroupAlgebra&, const GroupAlgebra&) = default;

 private:
  std::map<GroupWord, Rational> terms_;
};

std::string to_string(const GroupAlgebra& a);

// Diagonal dual model u_ij = delta_ij g_i over the group algebra; each row
// and column is a partial isometry family with orthogonal supports.
struct GroupAlgebraMatrix {
  int n = 0;
  std::vector<GroupAlgebra> entries;  // row-major n x n

  const GroupAlgebra& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * n + c]; }
  GroupAlgebra& at(int r, int c) { return entries[static_cast<std::size_t>(r) * n + c]; }
};

GroupAlgebraMatrix free_product_dual_model(int N);

}  // namespace ncsphere
