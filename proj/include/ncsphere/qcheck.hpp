// Relation checkers for the nine real quantum groups and their complex
// analogues on concrete matrices, the five hyperoctahedral-star relation
// families over arbitrary ring entries, T_pi matrices with intertwiner tests,
// and the composition calculus on two-row partitions.
#pragma once

#include "ncsphere/exact_matrix.hpp"
#include "ncsphere/group_word.hpp"
#include "ncsphere/partition.hpp"
#include "ncsphere/util.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncsphere {

enum class QgId {
  O, Obar, Ostar, Obarstar, H, Hstar, Hinf, Hplus,          // real
  U, Ubar, Ustarstar, Ubarstarstar, K, Kstar, Kinf, Kplus,  // complex
};

QgId parse_qg_id(const std::string& name);
std::string qg_name(QgId id);
bool qg_is_complex(QgId id);
std::vector<QgId> all_qg_ids();

struct QgViolation {
  std::string identity;  // which relation family failed
  std::string detail;    // index tuple and values
};

// Evaluates every identity of the relation set exactly on the entries of u;
// returns the first violation. Real ids use transposes, complex ids use
// adjoints and quantify over all star patterns.
//
// Hstar/Kstar encode half-commutation plus the vanishing of products of
// distinct entries on a shared row or column; the vanishing form is inferred
// from how these coordinates are used, not from a primary presentation.
// Hplus/Kplus are necessary-condition checkers only (partial-isometry entries
// and support orthogonality): the free quantum groups have no faithful
// finite-dimensional matrices beyond the classical ones, so passing them
// certifies nothing more than the stated entry relations.
std::optional<QgViolation> check_matrix(const ExactMatrix& u, QgId id);

// The relation set of one quantum group id as a callable checker, with the
// identity families it evaluates listed by name.
struct RelationChecker {
  QgId id;
  std::vector<std::string> identity_families;
  std::optional<QgViolation> operator()(const ExactMatrix& u) const { return check_matrix(u, id); }
};
RelationChecker relation_set(QgId id);

// Sign table of the twisted half-liberation by spanned row and column counts
// r, s in {1, 2, 3}: -1 exactly when (r <= 2, s = 3) or (r = 3, s <= 2).
int twisted_half_sign(int r, int s);

// Exactly one nonzero entry in every row and every column.
bool is_monomial(const ExactMatrix& u);

// The five relation families carved out by the half-liberated polygonal
// sphere action, over any ring of entries:
//  (1) u_ia u_ja u_kb + u_ib u_ja u_ka = 0   for i,j,k distinct
//  (2) u_ia u_jb u_ka = 0                    for i,j,k distinct
//  (3) u_ia^2 u_kb = u_kb u_ia^2
//  (4) u_ka u_ia u_ib = u_ib u_ia u_ka
//  (5) u_ia u_ib u_ka = u_kb u_ib u_ia
template <typename Ring, typename EntryFn>
std::optional<QgViolation> check_halflib_families(int n, EntryFn entry) {
  auto tuple = [](std::initializer_list<int> v) {
    std::string s = "(";
    bool first = true;
    for (int x : v) {
      if (!first) s += ",";
      s += std::to_string(x + 1);
      first = false;
    }
    return s + ")";
  };
  const Ring zero{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            if (i != j && j != k && i != k) {
              Ring f1 = entry(i, a) * entry(j, a) * entry(k, b) + entry(i, b) * entry(j, a) * entry(k, a);
              if (!(f1 == zero)) return QgViolation{"family1", "ijkab=" + tuple({i, j, k, a, b})};
              Ring f2 = entry(i, a) * entry(j, b) * entry(k, a);
              if (!(f2 == zero)) return QgViolation{"family2", "ijkab=" + tuple({i, j, k, a, b})};
            }
            Ring sq = entry(i, a) * entry(i, a);
            Ring f3 = sq * entry(k, b) - entry(k, b) * sq;
            if (!(f3 == zero)) return QgViolation{"family3", "ikab=" + tuple({i, k, a, b})};
            Ring f4 = entry(k, a) * entry(i, a) * entry(i, b) - entry(i, b) * entry(i, a) * entry(k, a);
            if (!(f4 == zero)) return QgViolation{"family4", "ikab=" + tuple({i, k, a, b})};
            Ring f5 = entry(i, a) * entry(i, b) * entry(k, a) - entry(k, b) * entry(i, b) * entry(i, a);
            if (!(f5 == zero)) return QgViolation{"family5", "ikab=" + tuple({i, k, a, b})};
          }
  return std::nullopt;
}

std::optional<QgViolation> lemma54_check(const ExactMatrix& u);
std::optional<QgViolation> lemma54_check(const GroupAlgebraMatrix& u);

// The extended vanishing a b_1 .. b_r c = 0 for a != c on the same row or
// column, checked at r = 2.
std::optional<QgViolation> extended_vanishing_check(const ExactMatrix& u);

// T_p as an N^lower x N^upper 0/1 matrix: the entry at (lower multi-index j,
// upper multi-index i) is 1 iff the joint index assignment is constant on
// every block of p.
ExactMatrix tpi_matrix(const Partition& p, int N);

// Integer variant for exhaustive composition sweeps.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;
  long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};
IntMatrix tpi_int_matrix(const Partition& p, int N);
IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix int_scale(long long c, const IntMatrix& x);

// Exact test of T_p u^(x upper) = u^(x lower) T_p.
std::optional<QgViolation> intertwines(const Partition& p, const ExactMatrix& u);

// Vertical concatenation: p on top (k -> m), q below (m -> l), middle rows
// identified. Returns the induced partition on the outer points and the
// number of closed middle loops; T_q T_p = N^loops T_{q o p}.
std::pair<Partition, int> partition_compose(const Partition& p, const Partition& q);

// The two diagrams behind the hyperoctahedral vanishing relations: pi acts
// by e_ijk -> delta_ik e_ijk, its rotation sigma by e_ijk -> delta_ij e_kji.
Partition hinf_pi_diagram();
Partition hinf_sigma_diagram();

// Leg-bending moves; tpi of the rotated partition is an index reshape of
// tpi of the original (tested, not assumed).
Partition rotate_bottom_left_up(const Partition& p);
Partition rotate_top_right_down(const Partition& p);

// Matrix sample generators for the exhaustive and randomized sweeps.
std::vector<ExactMatrix> signed_permutation_matrices(int N);
ExactMatrix random_rational_orthogonal(int N, Rng& rng);
ExactMatrix rotation2(std::uint64_t seed);                  // rational point on SO(2)
ExactMatrix direct_sum_with_identity(const ExactMatrix& u, int extra);

}  // namespace ncsphere
