#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncsphere/filtered_family.hpp"
#include "ncsphere/permutation.hpp"

#include <algorithm>
#include <set>

using namespace ncsphere;

TEST_CASE("tensor concatenation") {
  CHECK(tensor(parse_permutation("(21)"), Permutation::identity(1)) == parse_permutation("(213)"));
  CHECK(tensor(Permutation::identity(1), parse_permutation("(231)")) == parse_permutation("(1342)"));
  CHECK(tensor(Permutation::identity(2), Permutation::identity(3)) == Permutation::identity(5));
}

TEST_CASE("composition and inverses") {
  for (const auto& s : symmetric_group(4)) {
    CHECK(compose(s, s.inverse()) == Permutation::identity(4));
    CHECK(compose(s.inverse(), s) == Permutation::identity(4));
  }
  Permutation s = parse_permutation("(2413)");
  CHECK(compose(s, s) == parse_permutation("(4321)"));
  CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);

  // one of the two composition orders of 1(x)(231) and (231)(x)1 is (2143)
  Permutation a = tensor(Permutation::identity(1), parse_permutation("(231)"));
  Permutation b = tensor(parse_permutation("(231)"), Permutation::identity(1));
  std::set<Permutation> products{compose(a, b), compose(b, a)};
  CHECK(products.count(parse_permutation("(2143)")) == 1);
}

TEST_CASE("one-line notation round trips") {
  CHECK(to_string(parse_permutation("(24153)")) == "(24153)");
  CHECK(parse_permutation("(2 4 1 5 3)") == parse_permutation("(24153)"));
  CHECK_THROWS_AS(parse_permutation("(22)"), std::invalid_argument);
}

TEST_CASE("generated groups with witnesses") {
  auto only_id = generated_group({Permutation::identity(3)}, {"e"});
  CHECK(only_id.elements.size() == 1);

  auto s2 = generated_group({parse_permutation("(21)")}, {"t"});
  CHECK(s2.elements.size() == 2);
  CHECK(s2.contains(parse_permutation("(21)")));

  Permutation s = parse_permutation("(3412)");
  auto g = generated_group({tensor(Permutation::identity(1), s), tensor(s, Permutation::identity(1))},
                           {"1(x)s", "s(x)1"});
  CHECK(g.contains(parse_permutation("(52143)")));

  // generated set does not depend on the composition convention: closing
  // under one-sided products only yields the same subgroup
  std::set<Permutation> right_only{Permutation::identity(5)};
  std::vector<Permutation> gens{tensor(Permutation::identity(1), s), tensor(s, Permutation::identity(1))};
  for (auto& gen : gens) gens.push_back(gen.inverse()), gens.pop_back();  // keep list as-is
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> add;
    for (const auto& x : right_only)
      for (const auto& gen : {gens[0], gens[1], gens[0].inverse(), gens[1].inverse()})
        if (!right_only.count(compose(x, gen))) add.push_back(compose(x, gen));
    for (auto& p : add) grew |= right_only.insert(p).second;
  }
  std::set<Permutation> two_sided(g.elements.begin(), g.elements.end());
  CHECK(right_only == two_sided);
}

TEST_CASE("adjacent value pairs") {
  CHECK(adjacent_pair(parse_permutation("(2143)")) == 1);
  CHECK(adjacent_pair(parse_permutation("(3412)")) == 1);
  CHECK_FALSE(adjacent_pair(parse_permutation("(2413)")).has_value());
}

TEST_CASE("weak reduction") {
  CHECK(weak_reduce(parse_permutation("(2143)"), 1) == parse_permutation("(21)"));
  CHECK(weak_reduce(parse_permutation("(2134)"), 1) == Permutation::identity(2));
  for (int i = 1; i <= 4; ++i) CHECK(weak_reduce(Permutation::identity(5), i) == Permutation::identity(3));
  CHECK_THROWS_AS(weak_reduce(parse_permutation("(2413)"), 1), std::invalid_argument);

  // parity preservation is stable under weak reduction
  for (int k = 4; k <= 6; ++k)
    for (const auto& s : symmetric_group(k)) {
      if (!is_half_liberated(s)) continue;
      for (int i = 1; i + 1 <= k; ++i) {
        if (std::abs(s(i + 1) - s(i)) != 1) continue;
        CHECK(is_half_liberated(weak_reduce(s, i)));
      }
    }
}

TEST_CASE("half-liberated membership") {
  CHECK(is_half_liberated(parse_permutation("(321)")));
  CHECK_FALSE(is_half_liberated(parse_permutation("(21)")));
  int count = 0;
  for (const auto& s : symmetric_group(4))
    if (is_half_liberated(s)) count++;
  CHECK(count == 4);
}

TEST_CASE("adjacent-pair witness search") {
  auto w1 = prop24_search(parse_permutation("(231)"));
  REQUIRE(w1.has_value());
  // the group also contains the published witness
  Permutation s = parse_permutation("(231)");
  auto g = generated_group({tensor(Permutation::identity(1), s), tensor(s, Permutation::identity(1))}, {});
  CHECK(g.contains(parse_permutation("(2143)")));

  auto w2 = prop24_search(parse_permutation("(21)"));
  REQUIRE(w2.has_value());
  CHECK(w2->word.find('.') == std::string::npos);  // depth 1: a single generator

  Permutation s5 = parse_permutation("(42513)");
  auto g5 = generated_group({tensor(Permutation::identity(1), s5), tensor(s5, Permutation::identity(1))}, {});
  CHECK(g5.contains(parse_permutation("(435621)")));
  REQUIRE(prop24_search(s5).has_value());

  // exhaustive up to S_4 here; S_5 runs in the suite
  for (int k = 2; k <= 4; ++k)
    for (const auto& p : symmetric_group(k)) {
      if (p.is_identity()) continue;
      CHECK(prop24_search(p).has_value());
    }

  CHECK_THROWS_AS(prop24_search(Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("filtered family construction and invariants") {
  auto triv = FilteredFamily::trivial(4);
  CHECK(triv.is_filtered_group());
  CHECK(triv.total_size() == 4);

  auto full = FilteredFamily::full_symmetric(5);
  CHECK(full.is_filtered_group());
  CHECK(full.level(4).size() == 24);

  auto half = FilteredFamily::half_liberated(5);
  CHECK(half.is_filtered_group());
  CHECK(half.level(4).size() == 4);
  CHECK(half.level(5).size() == 12);  // 3! x 2!

  auto gen = FilteredFamily::generated(4, {parse_permutation("(21)")});
  CHECK(gen.is_filtered_group());
  CHECK(gen.contains(parse_permutation("(213)")));
}

TEST_CASE("weak saturation closures") {
  auto triv = weak_saturation_closure(FilteredFamily::trivial(4));
  CHECK(triv == FilteredFamily::trivial(4));

  // the basic crossing generates every symmetric level
  auto cross = weak_saturation_closure(FilteredFamily::generated(4, {parse_permutation("(21)")}));
  for (int k = 2; k <= 4; ++k) CHECK(cross.level(k).size() == symmetric_group(k).size());

  // the half-liberated generator stays parity-preserving at every level
  auto half = weak_saturation_closure(FilteredFamily::generated(6, {parse_permutation("(321)")}));
  for (int k = 1; k <= 6; ++k)
    for (const auto& s : half.level(k)) CHECK(is_half_liberated(s));

  // closures of nontrivial generators reach (21) or (321)
  for (int k = 2; k <= 4; ++k)
    for (const auto& s : symmetric_group(k)) {
      if (s.is_identity()) continue;
      auto closure = weak_saturation_closure(FilteredFamily::generated(6, {s}));
      bool has = closure.contains(parse_permutation("(21)")) || closure.contains(parse_permutation("(321)"));
      CHECK(has);
    }
}

TEST_CASE("standard parametrization levels") {
  auto all3 = parametrize_level(3, CoarseningMode::all_coarsenings);
  REQUIRE(all3.size() == 1);
  CHECK(all3[0].is_identity());

  auto two1 = parametrize_level(1, CoarseningMode::two_block);
  REQUIRE(two1.size() == 1);
  CHECK(two1[0].is_identity());

  auto two4 = parametrize_level(4, CoarseningMode::two_block);
  CHECK(two4.size() == 4);
  for (const auto& s : two4) CHECK(is_half_liberated(s));

  const std::size_t expected_two[] = {0, 1, 1, 2, 4, 12};  // ceil(k/2)! * floor(k/2)!
  for (int k = 2; k <= 5; ++k) {
    CHECK(parametrize_level(k, CoarseningMode::all_coarsenings).size() == 1);
    auto two = parametrize_level(k, CoarseningMode::two_block);
    CHECK(two.size() == expected_two[k]);
    for (const auto& s : two) CHECK(is_half_liberated(s));
  }
  CHECK_THROWS_AS(parametrize_level(8, CoarseningMode::two_block), std::length_error);
}

TEST_CASE("twist vanishing degree") {
  CHECK_FALSE(twist_vanish_degree(Permutation::identity(3)).has_value());
  auto d21 = twist_vanish_degree(parse_permutation("(21)"));
  REQUIRE(d21.has_value());
  CHECK(d21->degree == 1);
  CHECK(d21->min_blocks == 2);
  auto d321 = twist_vanish_degree(parse_permutation("(321)"));
  REQUIRE(d321.has_value());
  CHECK(d321->degree == 2);
  CHECK(d321->min_blocks == 3);
  CHECK(signature(d321->witness) == -1);

  for (int k = 2; k <= 5; ++k)
    for (const auto& s : symmetric_group(k)) {
      if (s.is_identity()) continue;
      auto d = twist_vanish_degree(s);
      REQUIRE(d.has_value());
      CHECK((d->degree == 1 || d->degree == 2));
    }
}
