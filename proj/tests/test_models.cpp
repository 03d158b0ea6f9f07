#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncsphere/models.hpp"
#include "ncsphere/presentation.hpp"
#include "ncsphere/span_engine.hpp"
#include "ncsphere/group_word.hpp"
#include "ncsphere/util.hpp"

using namespace ncsphere;

namespace {

bool coords_satisfy(const ModelPoint& m, const SpherePresentation& p) {
  for (const auto& rel : p.relations())
    if (!evaluate(rel.combo, m).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("rational sphere points are exactly unit") {
  for (int m = 1; m <= 5; ++m)
    for (std::uint64_t seed : {1ull, 2ull, 77ull}) {
      auto x = rational_sphere_point(m, seed);
      Rational norm = 0;
      for (const auto& v : x) norm += v * v;
      CHECK(norm == 1);
      for (const auto& v : x) CHECK(v != 0);
    }
  auto one = rational_sphere_point(1, 5);
  CHECK((one[0] == 1 || one[0] == -1));
}

TEST_CASE("classical polygonal points") {
  ModelPoint p = polygonal_point(3, 1, {2}, 3);
  CHECK(p.coords[0].is_zero());
  CHECK(p.coords[2].is_zero());
  CHECK((p.coords[1].at(0, 0) == GaussianRational(1) || p.coords[1].at(0, 0) == GaussianRational(Rational(-1))));

  ModelPoint q = polygonal_point(3, 2, {1, 3}, 9);
  CHECK(q.coords[1].is_zero());
  CHECK(evaluate(parse_word("x1.x2.x3"), q).is_zero());
  CHECK(evaluate(parse_word("x3.x1"), q).is_zero() == false);
  CHECK(coords_satisfy(q, SpherePresentation::parse("real:classical:d=2:N=3")));

  CHECK_THROWS_AS(polygonal_point(3, 2, {1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(parse_word("x1*"), q), std::domain_error);
}

TEST_CASE("complex polygonal points") {
  ModelPoint z = complex_polygonal_point(2, 2, {1, 2}, 4);
  GaussianRational norm{Rational(0)};
  for (const auto& c : z.coords) norm += c.at(0, 0) * c.at(0, 0).conj();
  CHECK(norm == GaussianRational(1));
  CHECK_FALSE(z.coords[0].at(0, 0).is_real());  // genuinely complex phase

  ModelPoint z1 = complex_polygonal_point(3, 1, {2}, 8);
  CHECK(z1.coords[1].at(0, 0) * z1.coords[1].at(0, 0).conj() == GaussianRational(1));

  ModelPoint z2 = complex_polygonal_point(3, 2, {1, 2}, 5);
  CHECK(evaluate(parse_word("x1.x2.x3"), z2).is_zero());
  CHECK(evaluate(parse_word("x1.x2*.x3"), z2).is_zero());
  CHECK(coords_satisfy(z2, SpherePresentation::parse("complex:classical:d=2:N=3")));
}

TEST_CASE("clifford models") {
  ModelPoint c2 = clifford_model_seeded(2, 1);
  CHECK(c2.dim == 2);
  ExactMatrix anti = evaluate(parse_word("x1.x2"), c2) + evaluate(parse_word("x2.x1"), c2);
  CHECK(anti.is_zero());

  ModelPoint c3 = clifford_model_seeded(3, 2);
  CHECK(c3.dim == 4);
  ExactMatrix sum(c3.dim, c3.dim);
  for (int i = 1; i <= 3; ++i) {
    Word w{{i, false}, {i, false}};
    sum = sum + evaluate(w, c3);
    // self-adjoint coordinates
    CHECK(c3.coords[i - 1] == c3.coords[i - 1].adjoint());
  }
  CHECK(sum == ExactMatrix::identity(c3.dim));

  ExactMatrix chain = evaluate(parse_word("x1.x2.x3"), c3) + evaluate(parse_word("x3.x2.x1"), c3);
  CHECK(chain.is_zero());

  // every twisted relation family holds on the model
  CHECK(coords_satisfy(c3, SpherePresentation::parse("real:twisted:d=3:N=3")));

  CHECK_THROWS_AS(clifford_model(2, {make_rational(1), make_rational(1)}), std::invalid_argument);
}

TEST_CASE("clifford model matches the kernel signature on random relations") {
  ModelPoint c3 = clifford_model_seeded(3, 6);
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 2 + static_cast<int>(rng.below(3));
    auto perms = symmetric_group(k);
    const Permutation& s = perms[rng.below(perms.size())];
    std::vector<int> tuple(k);
    for (auto& t : tuple) t = 1 + static_cast<int>(rng.below(3));
    std::vector<int> permuted(k);
    for (int pos = 1; pos <= k; ++pos) permuted[pos - 1] = tuple[s(pos) - 1];
    Word left(k), right(k);
    for (int p = 0; p < k; ++p) left[p] = {tuple[p], false}, right[p] = {permuted[p], false};
    int sign = signature(kernel(tuple, permuted));
    ExactMatrix lhs = evaluate(left, c3);
    ExactMatrix rhs = evaluate(right, c3);
    CHECK(lhs == GaussianRational(make_rational(sign)) * rhs);
  }
}

TEST_CASE("half-liberated 2x2 models") {
  for (int N : {3, 4}) {
    for (std::uint64_t seed : {3ull, 12ull}) {
      ModelPoint z = complex_polygonal_point(N, 2, {1, 3}, seed);
      ModelPoint h = halflib_model(z);
      CHECK(h.dim == 2);
      ExactMatrix sum(2, 2);
      for (int i = 1; i <= N; ++i) {
        CHECK(h.coords[i - 1] == h.coords[i - 1].adjoint());
        sum = sum + h.coords[i - 1] * h.coords[i - 1];
      }
      CHECK(sum == ExactMatrix::identity(2));
      // half-commutation for every triple, distinct products vanish
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
          for (int k = 1; k <= N; ++k) {
            ExactMatrix abc = h.coords[i - 1] * h.coords[j - 1] * h.coords[k - 1];
            ExactMatrix cba = h.coords[k - 1] * h.coords[j - 1] * h.coords[i - 1];
            CHECK(abc == cba);
            if (i != j && j != k && i != k) CHECK(abc.is_zero());
          }
      CHECK(coords_satisfy(h, SpherePresentation::parse("real:half:d=2:N=" + std::to_string(N))));
    }
  }
  // the model genuinely fails commutativity at some sample point
  WordCombo commutator = WordCombo::monomial(parse_word("x1.x2"));
  commutator.add(parse_word("x2.x1"), -1);
  bool noncommutative = false;
  for (std::uint64_t seed = 1; seed <= 10 && !noncommutative; ++seed) {
    ModelPoint h = halflib_model(complex_polygonal_point(2, 2, {1, 2}, seed));
    noncommutative = !evaluate(commutator, h).is_zero();
  }
  CHECK(noncommutative);
  CHECK_THROWS_AS(halflib_model(polygonal_point(3, 2, {1, 2}, 1)), std::invalid_argument);
}

TEST_CASE("group words in the free product of order-2 groups") {
  CHECK((GroupWord::gen(1) * GroupWord::gen(1)).is_identity());
  CHECK(to_string(GroupWord::gen(1) * GroupWord::gen(2)) == "g1.g2");
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) {
        bool distinct = i != j && j != k && i != k;
        CHECK(free_product_check(i, j, k) == !distinct);
      }
}

TEST_CASE("evaluation is homomorphic and kills presentation relations") {
  ModelPoint p = polygonal_point(3, 3, {1, 2, 3}, 21);
  WordCombo unit;
  for (int i = 1; i <= 3; ++i) unit.add({{i, false}, {i, false}}, 1);
  unit.add({}, -1);
  CHECK(evaluate(unit, p).is_zero());
  WordCombo commutator = WordCombo::monomial(parse_word("x1.x2"));
  commutator.add(parse_word("x2.x1"), -1);
  CHECK(evaluate(commutator, p).is_zero());

  ModelPoint c = clifford_model_seeded(2, 5);
  WordCombo anti = WordCombo::monomial(parse_word("x1.x2"));
  anti.add(parse_word("x2.x1"), 1);
  CHECK(evaluate(anti, c).is_zero());
}

TEST_CASE("every model satisfies every relation of its own presentation") {
  struct Pair {
    ModelPoint model;
    const char* presentation;
  };
  std::vector<Pair> pairs;
  pairs.push_back({polygonal_point(3, 1, {2}, 7), "real:classical:d=1:N=3"});
  pairs.push_back({polygonal_point(3, 2, {2, 3}, 8), "real:classical:d=2:N=3"});
  pairs.push_back({polygonal_point(3, 3, {1, 2, 3}, 9), "real:classical:d=3:N=3"});
  pairs.push_back({complex_polygonal_point(3, 1, {1}, 10), "complex:classical:d=1:N=3"});
  pairs.push_back({complex_polygonal_point(3, 2, {1, 2}, 11), "complex:classical:d=2:N=3"});
  pairs.push_back({clifford_model_seeded(3, 12), "real:twisted:d=3:N=3"});
  pairs.push_back({halflib_model(complex_polygonal_point(3, 2, {2, 3}, 13)), "real:half:d=2:N=3"});
  for (const auto& [model, id] : pairs) CHECK(coords_satisfy(model, SpherePresentation::parse(id)));
}

TEST_CASE("combos derivable from a presentation vanish on its models") {
  // x_a x_b x_a + x_a^2 x_b is derivable over the twisted sphere; it must
  // vanish on every anticommuting model
  SpherePresentation tw = SpherePresentation::parse("real:twisted:d=3:N=3");
  WordCombo aba = WordCombo::monomial(parse_word("x1.x2.x1"));
  aba.add(parse_word("x1.x1.x2"), 1);
  IdealSpan span = IdealSpan::of(tw, 3);
  auto cert = span.derive(aba);
  REQUIRE(cert.has_value());
  for (std::uint64_t seed : {2ull, 9ull, 30ull}) CHECK(evaluate(aba, clifford_model_seeded(3, seed)).is_zero());
}

TEST_CASE("non-derivability witnesses: x1x2 does not vanish on the classical sphere") {
  ModelPoint p = polygonal_point(2, 2, {1, 2}, 13);
  CHECK_FALSE(evaluate(parse_word("x1.x2"), p).is_zero());
}

TEST_CASE("independence ranks") {
  // six functions over the complex circle
  std::vector<Word> six = {parse_word("x1.x1*.x2"), parse_word("x2.x2*.x1"), parse_word("x1.x1.x2*"),
                           parse_word("x2.x2.x1*"), parse_word("x1.x1*.x1"), parse_word("x2.x2*.x2")};
  std::vector<ModelPoint> circle;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) circle.push_back(complex_polygonal_point(2, 2, {1, 2}, seed));
  CHECK(independence_rank(six, circle) == 6);

  // ranks never decrease when samples are added
  std::vector<ModelPoint> fewer(circle.begin(), circle.begin() + 3);
  CHECK(independence_rank(six, fewer) <= independence_rank(six, circle));

  // duplicate rows lose rank
  std::vector<Word> dup = {six[0], six[0]};
  CHECK(independence_rank(dup, circle) == 1);

  // {x_i x_j | i <= j} over classical d=2 points at N=3
  std::vector<Word> quad;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) quad.push_back({{i, false}, {j, false}});
  std::vector<ModelPoint> pts;
  int s = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = a + 1; b <= 3; ++b)
      for (int rep = 0; rep < 3; ++rep) pts.push_back(polygonal_point(3, 2, {a, b}, 100 + s++));
  CHECK(independence_rank(quad, pts) == 6);

  // {x_a^2 x_b | a != b} over clifford models
  std::vector<Word> cube;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      if (a != b) cube.push_back({{a, false}, {a, false}, {b, false}});
  std::vector<ModelPoint> cliffs;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) cliffs.push_back(clifford_model_seeded(3, seed));
  CHECK(independence_rank(cube, cliffs) == 6);
}

TEST_CASE("half-liberated monomials reach full rank") {
  // {x_a^2 x_b, x_a x_b x_a (a != b), x_a^3}: 2N(N-1) + N functions
  for (int N : {2, 3}) {
    std::vector<Word> fns;
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b) {
        if (a == b) continue;
        fns.push_back({{a, false}, {a, false}, {b, false}});
        fns.push_back({{a, false}, {b, false}, {a, false}});
      }
    for (int a = 1; a <= N; ++a) fns.push_back({{a, false}, {a, false}, {a, false}});
    std::vector<ModelPoint> samples;
    int s = 0;
    for (int a = 1; a <= N; ++a)
      for (int b = a + 1; b <= N; ++b)
        for (int rep = 0; rep < 2 + 3 * N; ++rep)
          samples.push_back(halflib_model(complex_polygonal_point(N, 2, {a, b}, 31 + 17 * s++)));
    CHECK(independence_rank(fns, samples) == fns.size());
    CHECK(fns.size() == static_cast<std::size_t>(2 * N * (N - 1) + N));
  }
}
