#include "ncsphere/qcheck.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncsphere {

namespace {

std::string ij(int i, int j) { return "u(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

bool same_row_or_col(int i1, int j1, int i2, int j2) {
  return (i1 == i2 && j1 != j2) || (j1 == j2 && i1 != i2);
}

std::optional<QgViolation> check_orthogonality(const ExactMatrix& u, bool conjugate) {
  const int n = u.rows();
  ExactMatrix ut = conjugate ? u.adjoint() : u.transpose();
  if (!(u * ut == ExactMatrix::identity(n))) return QgViolation{conjugate ? "u u* = 1" : "u u^t = 1", ""};
  if (!(ut * u == ExactMatrix::identity(n))) return QgViolation{conjugate ? "u* u = 1" : "u^t u = 1", ""};
  return std::nullopt;
}

// star patterns of an entry; real checkers pass stars = {false}
GaussianRational starred(const GaussianRational& v, bool star) { return star ? v.conj() : v; }

int row_col_sign(int i1, int j1, int i2, int j2, int i3, int j3) {
  auto span = [](int a, int b, int c) { return (a == b && b == c) ? 1 : (a != b && b != c && a != c) ? 3 : 2; };
  return twisted_half_sign(span(i1, i2, i3), span(j1, j2, j3));
}

using PairFn = std::function<std::optional<QgViolation>(const ExactMatrix&, int, int, int, int,
                                                        const GaussianRational&, const GaussianRational&)>;

std::optional<QgViolation> for_entry_pairs(const ExactMatrix& u, bool with_stars, const PairFn& fn) {
  const int n = u.rows();
  const bool stars[] = {false, true};
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
          for (bool s1 : stars)
            for (bool s2 : stars) {
              if (!with_stars && (s1 || s2)) continue;
              auto v = fn(u, i1, j1, i2, j2, starred(u.at(i1, j1), s1), starred(u.at(i2, j2), s2));
              if (v) return v;
            }
  return std::nullopt;
}

std::optional<QgViolation> check_pair_commutation(const ExactMatrix& u, bool with_stars) {
  return for_entry_pairs(u, with_stars,
                         [](const ExactMatrix&, int i1, int j1, int i2, int j2, const GaussianRational& a,
                            const GaussianRational& b) -> std::optional<QgViolation> {
                           if (!(a * b - b * a).is_zero())
                             return QgViolation{"ab = ba", ij(i1, j1) + "," + ij(i2, j2)};
                           return std::nullopt;
                         });
}

std::optional<QgViolation> check_twisted_pairs(const ExactMatrix& u, bool with_stars) {
  return for_entry_pairs(u, with_stars,
                         [](const ExactMatrix&, int i1, int j1, int i2, int j2, const GaussianRational& a,
                            const GaussianRational& b) -> std::optional<QgViolation> {
                           if (i1 == i2 && j1 == j2) return std::nullopt;
                           if (same_row_or_col(i1, j1, i2, j2)) {
                             if (!(a * b + b * a).is_zero())
                               return QgViolation{"ab = -ba (same row/col)", ij(i1, j1) + "," + ij(i2, j2)};
                           } else if (!(a * b - b * a).is_zero()) {
                             return QgViolation{"ab = ba (disjoint)", ij(i1, j1) + "," + ij(i2, j2)};
                           }
                           return std::nullopt;
                         });
}

std::optional<QgViolation> check_support_pairs(const ExactMatrix& u, bool with_stars) {
  return for_entry_pairs(u, with_stars,
                         [](const ExactMatrix&, int i1, int j1, int i2, int j2, const GaussianRational& a,
                            const GaussianRational& b) -> std::optional<QgViolation> {
                           if (!same_row_or_col(i1, j1, i2, j2)) return std::nullopt;
                           if (!(a * b).is_zero())
                             return QgViolation{"ab = 0 (same row/col)", ij(i1, j1) + "," + ij(i2, j2)};
                           return std::nullopt;
                         });
}

using TripleFn = std::function<std::optional<QgViolation>(int, int, int, int, int, int, const GaussianRational&,
                                                          const GaussianRational&, const GaussianRational&)>;

std::optional<QgViolation> for_entry_triples(const ExactMatrix& u, bool with_stars, const TripleFn& fn) {
  const int n = u.rows();
  const bool stars[] = {false, true};
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
          for (int i3 = 0; i3 < n; ++i3)
            for (int j3 = 0; j3 < n; ++j3)
              for (bool s1 : stars)
                for (bool s2 : stars)
                  for (bool s3 : stars) {
                    if (!with_stars && (s1 || s2 || s3)) continue;
                    auto v = fn(i1, j1, i2, j2, i3, j3, starred(u.at(i1, j1), s1), starred(u.at(i2, j2), s2),
                                starred(u.at(i3, j3), s3));
                    if (v) return v;
                  }
  return std::nullopt;
}

std::optional<QgViolation> check_half_commutation(const ExactMatrix& u, bool with_stars) {
  return for_entry_triples(u, with_stars,
                           [](int i1, int j1, int i2, int j2, int i3, int j3, const GaussianRational& a,
                              const GaussianRational& b, const GaussianRational& c) -> std::optional<QgViolation> {
                             if (!(a * b * c - c * b * a).is_zero())
                               return QgViolation{"abc = cba", ij(i1, j1) + "," + ij(i2, j2) + "," + ij(i3, j3)};
                             return std::nullopt;
                           });
}

std::optional<QgViolation> check_twisted_half(const ExactMatrix& u, bool with_stars) {
  return for_entry_triples(
      u, with_stars,
      [](int i1, int j1, int i2, int j2, int i3, int j3, const GaussianRational& a, const GaussianRational& b,
         const GaussianRational& c) -> std::optional<QgViolation> {
        int sign = row_col_sign(i1, j1, i2, j2, i3, j3);
        GaussianRational rhs = c * b * a;
        if (sign == -1) rhs = -rhs;
        if (!(a * b * c - rhs).is_zero())
          return QgViolation{"abc = (r,s)-signed cba", ij(i1, j1) + "," + ij(i2, j2) + "," + ij(i3, j3)};
        return std::nullopt;
      });
}

// abc = 0 whenever a != c sit on the same row or column, b an arbitrary entry
std::optional<QgViolation> check_row_col_vanishing(const ExactMatrix& u, bool with_stars) {
  const int n = u.rows();
  const bool stars[] = {false, true};
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        if (a == c) continue;
        for (int j = 0; j < n; ++j)
          for (int b = 0; b < n; ++b)
            for (bool s1 : stars)
              for (bool s2 : stars)
                for (bool s3 : stars) {
                  if (!with_stars && (s1 || s2 || s3)) continue;
                  // same row i: u(i,a) u(j,b) u(i,c)
                  if (!(starred(u.at(i, a), s1) * starred(u.at(j, b), s2) * starred(u.at(i, c), s3)).is_zero())
                    return QgViolation{"abc = 0 (a != c, same row)", ij(i, a) + "," + ij(j, b) + "," + ij(i, c)};
                  // same column: u(a,i) u(b,j) u(c,i)
                  if (!(starred(u.at(a, i), s1) * starred(u.at(b, j), s2) * starred(u.at(c, i), s3)).is_zero())
                    return QgViolation{"abc = 0 (a != c, same col)", ij(a, i) + "," + ij(b, j) + "," + ij(c, i)};
                }
      }
  return std::nullopt;
}

std::optional<QgViolation> check_partial_isometries(const ExactMatrix& u, bool complex_case) {
  const int n = u.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const GaussianRational& a = u.at(i, j);
      GaussianRational cube = complex_case ? a * a.conj() * a : a * a * a;
      if (!(cube - a).is_zero())
        return QgViolation{complex_case ? "a a* a = a" : "a^3 = a", ij(i, j)};
    }
  // row/column sums of squares
  for (int i = 0; i < n; ++i) {
    GaussianRational row{Rational(0)}, col{Rational(0)};
    for (int k = 0; k < n; ++k) {
      row += complex_case ? u.at(i, k) * u.at(i, k).conj() : u.at(i, k) * u.at(i, k);
      col += complex_case ? u.at(k, i) * u.at(k, i).conj() : u.at(k, i) * u.at(k, i);
    }
    if (!(row - GaussianRational(1)).is_zero()) return QgViolation{"row squares sum to 1", "row " + std::to_string(i + 1)};
    if (!(col - GaussianRational(1)).is_zero()) return QgViolation{"col squares sum to 1", "col " + std::to_string(i + 1)};
  }
  return std::nullopt;
}

}  // namespace

int twisted_half_sign(int r, int s) { return ((r <= 2 && s == 3) || (r == 3 && s <= 2)) ? -1 : 1; }

RelationChecker relation_set(QgId id) {
  const bool cx = qg_is_complex(id);
  RelationChecker rc;
  rc.id = id;
  rc.identity_families.push_back(cx ? "u u* = u* u = 1" : "u u^t = u^t u = 1");
  auto add_stars = [&](std::string fam) { rc.identity_families.push_back(cx ? fam + " (all star patterns)" : fam); };
  switch (id) {
    case QgId::O:
    case QgId::U: add_stars("ab = ba"); break;
    case QgId::Obar:
    case QgId::Ubar:
      add_stars("ab = -ba for a != b on the same row or column");
      add_stars("ab = ba otherwise");
      break;
    case QgId::Ostar:
    case QgId::Ustarstar: add_stars("abc = cba"); break;
    case QgId::Obarstar:
    case QgId::Ubarstarstar: add_stars("abc = (r,s)-signed cba"); break;
    case QgId::H:
    case QgId::K:
      add_stars("ab = ba");
      rc.identity_families.push_back("exactly one nonzero entry per row and column");
      break;
    case QgId::Hstar:
    case QgId::Kstar:
      add_stars("abc = cba");
      add_stars("ab = 0 for a != b on the same row or column");
      break;
    case QgId::Hinf:
    case QgId::Kinf: add_stars("abc = 0 for a != c on the same row or column"); break;
    case QgId::Hplus:
    case QgId::Kplus:
      rc.identity_families.push_back(cx ? "a a* a = a" : "a^3 = a");
      add_stars("ab = 0 for a != b on the same row or column");
      rc.identity_families.push_back("row and column squares sum to 1");
      break;
  }
  return rc;
}

QgId parse_qg_id(const std::string& name) {
  for (QgId id : all_qg_ids())
    if (qg_name(id) == name) return id;
  throw std::invalid_argument("unknown quantum group id: " + name);
}

std::string qg_name(QgId id) {
  switch (id) {
    case QgId::O: return "O";
    case QgId::Obar: return "Obar";
    case QgId::Ostar: return "Ostar";
    case QgId::Obarstar: return "Obarstar";
    case QgId::H: return "H";
    case QgId::Hstar: return "Hstar";
    case QgId::Hinf: return "Hinf";
    case QgId::Hplus: return "Hplus";
    case QgId::U: return "U";
    case QgId::Ubar: return "Ubar";
    case QgId::Ustarstar: return "Ustarstar";
    case QgId::Ubarstarstar: return "Ubarstarstar";
    case QgId::K: return "K";
    case QgId::Kstar: return "Kstar";
    case QgId::Kinf: return "Kinf";
    case QgId::Kplus: return "Kplus";
  }
  return "?";
}

bool qg_is_complex(QgId id) {
  switch (id) {
    case QgId::U:
    case QgId::Ubar:
    case QgId::Ustarstar:
    case QgId::Ubarstarstar:
    case QgId::K:
    case QgId::Kstar:
    case QgId::Kinf:
    case QgId::Kplus: return true;
    default: return false;
  }
}

std::vector<QgId> all_qg_ids() {
  return {QgId::O,    QgId::Obar,       QgId::Ostar, QgId::Obarstar, QgId::H, QgId::Hstar,
          QgId::Hinf, QgId::Hplus,      QgId::U,     QgId::Ubar,     QgId::Ustarstar,
          QgId::Ubarstarstar, QgId::K,  QgId::Kstar, QgId::Kinf,     QgId::Kplus};
}

bool is_monomial(const ExactMatrix& u) {
  for (int i = 0; i < u.rows(); ++i) {
    int nz = 0;
    for (int j = 0; j < u.cols(); ++j)
      if (!u.at(i, j).is_zero()) nz++;
    if (nz != 1) return false;
  }
  for (int j = 0; j < u.cols(); ++j) {
    int nz = 0;
    for (int i = 0; i < u.rows(); ++i)
      if (!u.at(i, j).is_zero()) nz++;
    if (nz != 1) return false;
  }
  return true;
}

std::optional<QgViolation> check_matrix(const ExactMatrix& u, QgId id) {
  if (!u.is_square()) throw std::invalid_argument("relation checks need a square matrix");
  const bool cx = qg_is_complex(id);
  if (auto v = check_orthogonality(u, cx)) return v;
  switch (id) {
    case QgId::O:
    case QgId::U: return check_pair_commutation(u, cx);
    case QgId::Obar:
    case QgId::Ubar: return check_twisted_pairs(u, cx);
    case QgId::Ostar:
    case QgId::Ustarstar: return check_half_commutation(u, cx);
    case QgId::Obarstar:
    case QgId::Ubarstarstar: return check_twisted_half(u, cx);
    case QgId::H:
    case QgId::K:
      if (auto v = check_pair_commutation(u, cx)) return v;
      if (!is_monomial(u)) return QgViolation{"monomial matrix", "some row or column has != 1 nonzero entry"};
      return std::nullopt;
    case QgId::Hstar:
    case QgId::Kstar:
      if (auto v = check_half_commutation(u, cx)) return v;
      return check_support_pairs(u, cx);
    case QgId::Hinf:
    case QgId::Kinf: return check_row_col_vanishing(u, cx);
    case QgId::Hplus:
    case QgId::Kplus:
      if (auto v = check_partial_isometries(u, cx)) return v;
      return check_support_pairs(u, cx);
  }
  return std::nullopt;
}

std::optional<QgViolation> lemma54_check(const ExactMatrix& u) {
  if (!u.is_square()) throw std::invalid_argument("relation checks need a square matrix");
  return check_halflib_families<GaussianRational>(u.rows(), [&](int i, int j) { return u.at(i, j); });
}

std::optional<QgViolation> lemma54_check(const GroupAlgebraMatrix& u) {
  return check_halflib_families<GroupAlgebra>(u.n, [&](int i, int j) { return u.at(i, j); });
}

std::optional<QgViolation> extended_vanishing_check(const ExactMatrix& u) {
  const int n = u.rows();
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        if (a == c) continue;
        for (int j1 = 0; j1 < n; ++j1)
          for (int b1 = 0; b1 < n; ++b1)
            for (int j2 = 0; j2 < n; ++j2)
              for (int b2 = 0; b2 < n; ++b2) {
                if (!(u.at(i, a) * u.at(j1, b1) * u.at(j2, b2) * u.at(i, c)).is_zero())
                  return QgViolation{"a b1 b2 c = 0 (a != c, same row)",
                                     ij(i, a) + "," + ij(j1, b1) + "," + ij(j2, b2) + "," + ij(i, c)};
                if (!(u.at(a, i) * u.at(b1, j1) * u.at(b2, j2) * u.at(c, i)).is_zero())
                  return QgViolation{"a b1 b2 c = 0 (a != c, same col)",
                                     ij(a, i) + "," + ij(b1, j1) + "," + ij(b2, j2) + "," + ij(c, i)};
              }
      }
  return std::nullopt;
}

namespace {

// digit t of a length-len multi-index (leftmost digit first, row-major)
int digit(long long code, int t, int len, int N) {
  for (int s = len - 1; s > t; --s) code /= N;
  return static_cast<int>(code % N);
}

bool blocks_constant(const Partition& p, int N, long long upper_code, long long lower_code) {
  const int k = p.upper, l = p.lower;
  std::vector<int> value(p.block_count(), -1);
  for (int t = 0; t < k + l; ++t) {
    int v = t < k ? digit(upper_code, t, k, N) : digit(lower_code, t - k, l, N);
    int b = p.labels[t];
    if (value[b] == -1) value[b] = v;
    else if (value[b] != v) return false;
  }
  return true;
}

long long ipow(int base, int exp) {
  long long r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

ExactMatrix tpi_matrix(const Partition& p, int N) {
  const long long rows = ipow(N, p.lower), cols = ipow(N, p.upper);
  if (rows * cols > 16'000'000) throw std::length_error("tpi matrix exceeds the size budget");
  ExactMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  for (long long r = 0; r < rows; ++r)
    for (long long c = 0; c < cols; ++c)
      if (blocks_constant(p, N, c, r)) m.at(static_cast<int>(r), static_cast<int>(c)) = GaussianRational(1);
  return m;
}

IntMatrix tpi_int_matrix(const Partition& p, int N) {
  const long long rows = ipow(N, p.lower), cols = ipow(N, p.upper);
  IntMatrix m;
  m.rows = static_cast<int>(rows);
  m.cols = static_cast<int>(cols);
  m.a.assign(static_cast<std::size_t>(rows * cols), 0);
  for (long long r = 0; r < rows; ++r)
    for (long long c = 0; c < cols; ++c)
      if (blocks_constant(p, N, c, r)) m.at(static_cast<int>(r), static_cast<int>(c)) = 1;
  return m;
}

IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("int matrix shape mismatch");
  IntMatrix m;
  m.rows = x.rows;
  m.cols = y.cols;
  m.a.assign(static_cast<std::size_t>(x.rows) * y.cols, 0);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      long long v = x.at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < y.cols; ++c) m.at(r, c) += v * y.at(k, c);
    }
  return m;
}

IntMatrix int_scale(long long c, const IntMatrix& x) {
  IntMatrix m = x;
  for (auto& v : m.a) v *= c;
  return m;
}

std::optional<QgViolation> intertwines(const Partition& p, const ExactMatrix& u) {
  if (!u.is_square()) throw std::invalid_argument("intertwiner test needs a square matrix");
  const int N = u.rows();
  ExactMatrix t = tpi_matrix(p, N);
  ExactMatrix upper_pow = ExactMatrix::identity(1);
  for (int i = 0; i < p.upper; ++i) upper_pow = upper_pow.kron(u);
  ExactMatrix lower_pow = ExactMatrix::identity(1);
  for (int i = 0; i < p.lower; ++i) lower_pow = lower_pow.kron(u);
  if (t * upper_pow == lower_pow * t) return std::nullopt;
  return QgViolation{"T u^(x k) = u^(x l) T", to_string(p)};
}

std::pair<Partition, int> partition_compose(const Partition& p, const Partition& q) {
  if (p.lower != q.upper) throw std::invalid_argument("composition needs p.lower == q.upper");
  const int k = p.upper, m = p.lower, l = q.lower;
  // union-find over p's points (0..k+m-1) and q's lower points (k+m..k+m+l-1),
  // with q's upper row identified with p's lower row
  std::vector<int> parent(k + m + l);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::vector<int> first_of_block_p(p.block_count(), -1);
  for (int t = 0; t < k + m; ++t) {
    int b = p.labels[t];
    if (first_of_block_p[b] == -1) first_of_block_p[b] = t;
    else unite(t, first_of_block_p[b]);
  }
  auto q_point = [&](int t) { return t < m ? k + t : k + t; };  // q upper t -> p lower k+t; q lower t -> k+t
  std::vector<int> first_of_block_q(q.block_count(), -1);
  for (int t = 0; t < m + l; ++t) {
    int b = q.labels[t];
    int pt = q_point(t);
    if (first_of_block_q[b] == -1) first_of_block_q[b] = pt;
    else unite(pt, first_of_block_q[b]);
  }

  std::vector<int> raw;
  raw.reserve(k + l);
  for (int t = 0; t < k; ++t) raw.push_back(find(t));
  for (int t = 0; t < l; ++t) raw.push_back(find(k + m + t));
  Partition composed = normalized_partition(k, l, raw);

  // loops: components containing only middle points
  std::set<int> outer_roots;
  for (int t = 0; t < k; ++t) outer_roots.insert(find(t));
  for (int t = 0; t < l; ++t) outer_roots.insert(find(k + m + t));
  std::set<int> middle_only;
  for (int t = 0; t < m; ++t) {
    int r = find(k + t);
    if (!outer_roots.count(r)) middle_only.insert(r);
  }
  return {composed, static_cast<int>(middle_only.size())};
}

Partition hinf_pi_diagram() { return make_partition(3, 3, {{1, 3, 4, 6}, {2, 5}}); }

Partition hinf_sigma_diagram() { return make_partition(3, 3, {{1, 2, 5, 6}, {3, 4}}); }

Partition rotate_bottom_left_up(const Partition& p) {
  if (p.lower < 1) throw std::invalid_argument("no lower point to rotate up");
  std::vector<int> raw;
  raw.reserve(p.points());
  raw.push_back(p.labels[p.upper]);  // old first lower point
  for (int t = 0; t < p.upper; ++t) raw.push_back(p.labels[t]);
  for (int t = 1; t < p.lower; ++t) raw.push_back(p.labels[p.upper + t]);
  return normalized_partition(p.upper + 1, p.lower - 1, raw);
}

Partition rotate_top_right_down(const Partition& p) {
  if (p.upper < 1) throw std::invalid_argument("no upper point to rotate down");
  std::vector<int> raw;
  raw.reserve(p.points());
  for (int t = 0; t + 1 < p.upper; ++t) raw.push_back(p.labels[t]);
  for (int t = 0; t < p.lower; ++t) raw.push_back(p.labels[p.upper + t]);
  raw.push_back(p.labels[p.upper - 1]);  // old last upper point
  return normalized_partition(p.upper - 1, p.lower + 1, raw);
}

std::vector<ExactMatrix> signed_permutation_matrices(int N) {
  if (N > 4) throw std::length_error("signed permutation enumeration limited to N <= 4");
  std::vector<ExactMatrix> out;
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mask = 0; mask < (1 << N); ++mask) {
      ExactMatrix u(N, N);
      for (int i = 0; i < N; ++i) u.at(i, perm[i]) = GaussianRational(make_rational((mask >> i) & 1 ? -1 : 1));
      out.push_back(std::move(u));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ExactMatrix rotation2(std::uint64_t seed) {
  Rng rng(seed);
  Rational t = make_rational(rng.range(1, 5), rng.range(1, 5));
  Rational denom = 1 + t * t;
  Rational c = (1 - t * t) / denom, s = 2 * t / denom;
  ExactMatrix u(2, 2);
  u.at(0, 0) = GaussianRational(c);
  u.at(0, 1) = GaussianRational(-s);
  u.at(1, 0) = GaussianRational(s);
  u.at(1, 1) = GaussianRational(c);
  return u;
}

ExactMatrix random_rational_orthogonal(int N, Rng& rng) {
  ExactMatrix u = ExactMatrix::identity(N);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      Rational t = make_rational(rng.range(-4, 4), rng.range(1, 4));
      Rational denom = 1 + t * t;
      Rational c = (1 - t * t) / denom, s = 2 * t / denom;
      ExactMatrix g = ExactMatrix::identity(N);
      g.at(i, i) = GaussianRational(c);
      g.at(i, j) = GaussianRational(-s);
      g.at(j, i) = GaussianRational(s);
      g.at(j, j) = GaussianRational(c);
      u = u * g;
    }
  // random signs and a random row permutation keep it spread over O(N)
  for (int i = 0; i < N; ++i)
    if (rng.below(2)) {
      for (int j = 0; j < N; ++j) u.at(i, j) = -GaussianRational(Rational(1)) * u.at(i, j);
    }
  for (int i = N - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(i + 1));
    if (i != j)
      for (int c = 0; c < N; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  return u;
}

ExactMatrix direct_sum_with_identity(const ExactMatrix& u, int extra) {
  ExactMatrix out(u.rows() + extra, u.cols() + extra);
  for (int i = 0; i < u.rows(); ++i)
    for (int j = 0; j < u.cols(); ++j) out.at(i, j) = u.at(i, j);
  for (int t = 0; t < extra; ++t) out.at(u.rows() + t, u.cols() + t) = GaussianRational(1);
  return out;
}

}  // namespace ncsphere
