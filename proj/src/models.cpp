#include "ncsphere/models.hpp"

#include "ncsphere/util.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncsphere {

namespace {

Rational seeded_nonzero_rational(Rng& rng) {
  long num = rng.range(1, 4) * (rng.below(2) ? 1 : -1);
  long den = rng.range(1, 4);
  return make_rational(num, den);
}

void check_support(int N, int d, const std::vector<int>& support) {
  if (static_cast<int>(support.size()) != d)
    throw std::invalid_argument("support size must equal the polygonal degree d");
  for (int i : support)
    if (i < 1 || i > N) throw std::invalid_argument("support index out of range");
}

}  // namespace

std::vector<Rational> rational_sphere_point(int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("sphere point needs positive dimension");
  Rng rng(seed);
  if (m == 1) return {make_rational(rng.below(2) ? 1 : -1)};
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rational> t(m - 1);
    Rational norm = 0;
    for (auto& ti : t) {
      ti = seeded_nonzero_rational(rng);
      norm += ti * ti;
    }
    if (norm == 1) continue;  // would zero the last coordinate
    std::vector<Rational> x(m);
    Rational denom = 1 + norm;
    for (int i = 0; i < m - 1; ++i) x[i] = 2 * t[i] / denom;
    x[m - 1] = (1 - norm) / denom;
    return x;
  }
  throw std::logic_error("could not draw a nondegenerate sphere point");
}

ModelPoint polygonal_point(int N, int d, const std::vector<int>& support, std::uint64_t seed) {
  check_support(N, d, support);
  ModelPoint m;
  m.kind = ModelKind::classical_point;
  m.N = N;
  m.d = d;
  m.dim = 1;
  m.coords.assign(N, ExactMatrix(1, 1));
  auto vals = rational_sphere_point(d, seed);
  m.support = support;
  std::sort(m.support.begin(), m.support.end());
  for (int j = 0; j < d; ++j) m.coords[m.support[j] - 1].at(0, 0) = GaussianRational(vals[j]);
  return m;
}

ModelPoint complex_polygonal_point(int N, int d, const std::vector<int>& support, std::uint64_t seed) {
  check_support(N, d, support);
  ModelPoint m;
  m.kind = ModelKind::complex_point;
  m.N = N;
  m.d = d;
  m.dim = 1;
  m.coords.assign(N, ExactMatrix(1, 1));
  m.support = support;
  std::sort(m.support.begin(), m.support.end());
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  auto mags = rational_sphere_point(d, seed);
  for (int j = 0; j < d; ++j) {
    // unimodular phase ((1 - t^2) + 2ti) / (1 + t^2)
    Rational t = seeded_nonzero_rational(rng);
    Rational denom = 1 + t * t;
    GaussianRational phase{(1 - t * t) / denom, 2 * t / denom};
    m.coords[m.support[j] - 1].at(0, 0) = GaussianRational(mags[j]) * phase;
  }
  return m;
}

ModelPoint clifford_model(int N, const std::vector<Rational>& lambda) {
  if (N < 1 || N > 8) throw std::length_error("clifford model limited to N <= 8");
  if (static_cast<int>(lambda.size()) != N) throw std::invalid_argument("lambda needs N entries");
  Rational norm = 0;
  for (const auto& l : lambda) norm += l * l;
  if (norm != 1) throw std::invalid_argument("lambda must be an exact unit vector");

  // Jordan-Wigner family: gamma_{2j-1} = Z^(j-1) X I..., gamma_{2j} = Z^(j-1) Y I...
  ExactMatrix X(2, 2), Y(2, 2), Z(2, 2);
  X.at(0, 1) = GaussianRational(1);
  X.at(1, 0) = GaussianRational(1);
  Y.at(0, 1) = GaussianRational(Rational(0), Rational(-1));
  Y.at(1, 0) = GaussianRational(Rational(0), Rational(1));
  Z.at(0, 0) = GaussianRational(1);
  Z.at(1, 1) = GaussianRational(Rational(-1));

  const int pairs = (N + 1) / 2;
  ModelPoint m;
  m.kind = ModelKind::clifford;
  m.N = N;
  m.d = N;
  m.dim = 1 << pairs;
  for (int i = 1; i <= N; ++i) {
    const int j = (i + 1) / 2;  // which tensor slot carries X or Y
    ExactMatrix g(1, 1);
    g.at(0, 0) = GaussianRational(1);
    for (int slot = 1; slot <= pairs; ++slot) {
      const ExactMatrix* factor;
      if (slot < j) factor = &Z;
      else if (slot > j) factor = nullptr;  // identity
      else factor = (i % 2 == 1) ? &X : &Y;
      g = factor ? g.kron(*factor) : g.kron(ExactMatrix::identity(2));
    }
    m.coords.push_back(GaussianRational(lambda[i - 1]) * g);
    if (lambda[i - 1] != 0) m.support.push_back(i);
  }
  return m;
}

ModelPoint clifford_model_seeded(int N, std::uint64_t seed) {
  return clifford_model(N, rational_sphere_point(N, seed));
}

ModelPoint halflib_model(const ModelPoint& z) {
  if (z.kind != ModelKind::complex_point) throw std::invalid_argument("half-liberated model needs a complex point");
  if (z.d > 2) throw std::invalid_argument("half-liberated model needs polygonal degree d <= 2");
  ModelPoint m;
  m.kind = ModelKind::halflib;
  m.N = z.N;
  m.d = z.d;
  m.dim = 2;
  m.support = z.support;
  for (int i = 0; i < z.N; ++i) {
    ExactMatrix g(2, 2);
    g.at(0, 1) = z.coords[i].at(0, 0);
    g.at(1, 0) = z.coords[i].at(0, 0).conj();
    m.coords.push_back(std::move(g));
  }
  return m;
}

ExactMatrix evaluate(const Word& w, const ModelPoint& m) {
  ExactMatrix acc = ExactMatrix::identity(m.dim);
  for (const Letter& l : w) {
    if (l.index < 1 || l.index > m.N) throw std::invalid_argument("letter index outside model dimension");
    if (l.star && m.kind == ModelKind::classical_point)
      throw std::domain_error("star letter on a real point model");
    const ExactMatrix& c = m.coords[l.index - 1];
    acc = acc * (l.star ? c.adjoint() : c);
  }
  return acc;
}

ExactMatrix evaluate(const WordCombo& c, const ModelPoint& m) {
  ExactMatrix acc(m.dim, m.dim);
  for (const auto& [w, coeff] : c.terms()) acc = acc + GaussianRational(coeff) * evaluate(w, m);
  return acc;
}

std::size_t independence_rank(const std::vector<Word>& functions, const std::vector<ModelPoint>& samples) {
  if (functions.empty()) return 0;
  std::size_t cols = 0;
  for (const auto& s : samples) cols += static_cast<std::size_t>(s.dim) * s.dim;
  std::vector<std::vector<GaussianRational>> rows;
  rows.reserve(functions.size());
  for (const auto& f : functions) {
    std::vector<GaussianRational> row;
    row.reserve(cols);
    for (const auto& s : samples) {
      ExactMatrix v = evaluate(f, s);
      for (int r = 0; r < v.rows(); ++r)
        for (int c = 0; c < v.cols(); ++c) row.push_back(v.at(r, c));
    }
    rows.push_back(std::move(row));
  }
  // Gaussian elimination over Q(i).
  std::size_t rank = 0;
  std::size_t pivot_col = 0;
  while (rank < rows.size() && pivot_col < cols) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][pivot_col].is_zero()) pivot++;
    if (pivot == rows.size()) {
      pivot_col++;
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    GaussianRational inv = rows[rank][pivot_col].inverse();
    for (std::size_t c = pivot_col; c < cols; ++c) rows[rank][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][pivot_col].is_zero()) continue;
      GaussianRational f = rows[r][pivot_col];
      for (std::size_t c = pivot_col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    rank++;
    pivot_col++;
  }
  return rank;
}

}  // namespace ncsphere
