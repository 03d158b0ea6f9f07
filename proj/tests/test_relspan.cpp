#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncsphere/span_engine.hpp"
#include "ncsphere/util.hpp"

#include <set>

using namespace ncsphere;

namespace {

SpherePresentation pres(const std::string& id) { return SpherePresentation::parse(id); }

WordCombo combo_of(const std::string& plus, const std::string& minus = "", Rational c = 1) {
  WordCombo out = WordCombo::monomial(parse_word(plus));
  if (!minus.empty()) out.add(parse_word(minus), -c);
  return out;
}

}  // namespace

TEST_CASE("word parsing and ordering") {
  CHECK(word_to_string(parse_word("x1.x2*.x1")) == "x1.x2*.x1");
  CHECK(parse_word("1").empty());
  WordLess less;
  CHECK(less(parse_word("x2"), parse_word("x1.x1")));
  CHECK(less(parse_word("x1"), parse_word("x2")));
  CHECK(less(parse_word("x1"), parse_word("x1*")));
}

TEST_CASE("presentation ids round trip") {
  for (const char* id : {"real:classical:d=3:N=3", "complex:twisted-half:d=2:N=3", "real:free:d=1:N=4"})
    CHECK(pres(id).id() == id);
  CHECK_THROWS_AS(pres("real:classical:d=4:N=3"), std::invalid_argument);
  CHECK_THROWS_AS(pres("quaternionic:classical:d=1:N=2"), std::invalid_argument);
}

TEST_CASE("relation instantiation") {
  // commutators
  auto rels = instantiate_relations(parse_permutation("(21)"), false, Field::real_coeffs, 2);
  CHECK(rels.size() == 1);  // x1x2 - x2x1, deduped up to scaling
  CHECK(rels[0] == combo_of("x1.x2", "x2.x1").monic());

  // twisted: x1x2 + x2x1 from the basic crossing; squares drop out
  auto twisted = instantiate_relations(parse_permutation("(21)"), true, Field::real_coeffs, 2);
  CHECK(twisted.size() == 1);
  WordCombo anti = WordCombo::monomial(parse_word("x1.x2"));
  anti.add(parse_word("x2.x1"), 1);
  CHECK(twisted[0] == anti);

  // twisted half: aab = +baa (kernel with a 4-point and a 2-point block)
  auto th = instantiate_relations(parse_permutation("(321)"), true, Field::real_coeffs, 2);
  bool found = false;
  for (const auto& r : th)
    if (r == combo_of("x1.x1.x2", "x2.x1.x1").monic()) found = true;
  CHECK(found);
  // and abc = -cba for distinct letters appears at N=3
  auto th3 = instantiate_relations(parse_permutation("(321)"), true, Field::real_coeffs, 3);
  WordCombo chain = WordCombo::monomial(parse_word("x1.x2.x3"));
  chain.add(parse_word("x3.x2.x1"), 1);
  bool found_anti = false;
  for (const auto& r : th3)
    if (r == chain) found_anti = true;
  CHECK(found_anti);
}

TEST_CASE("complex instantiation ignores stars in the kernel sign") {
  auto rels = instantiate_relations(parse_permutation("(21)"), true, Field::complex_coeffs, 2);
  // z1 z1* - z1* z1 must appear with a plus sign (same index, noncrossing kernel)
  bool has_normality = false, has_anti = false;
  for (const auto& r : rels) {
    if (r == combo_of("x1.x1*", "x1*.x1").monic()) has_normality = true;
    WordCombo anti = WordCombo::monomial(parse_word("x1.x2*"));
    anti.add(parse_word("x2*.x1"), 1);
    if (r == anti) has_anti = true;
  }
  CHECK(has_normality);
  CHECK(has_anti);
}

TEST_CASE("presentation relation families") {
  auto classical = pres("real:classical:d=3:N=3").relations();
  // unit + 3 commutators, no vanishing at d = N
  CHECK(classical.size() == 4);

  auto poly = pres("real:classical:d=1:N=3").relations();
  // unit + 3 commutators + 6 ordered distinct pairs
  CHECK(poly.size() == 10);

  auto free3 = pres("real:free:d=3:N=3").relations();
  CHECK(free3.size() == 1);

  auto complex_classical = pres("complex:classical:d=2:N=2").relations();
  // two unit relations present
  int units = 0;
  for (const auto& r : complex_classical)
    if (r.name.rfind("unit", 0) == 0) units++;
  CHECK(units == 2);

  // complex vanishing relations carry every star pattern: at d=1, N=2 the
  // ordered distinct index pairs (2 of them) each appear with 4 star patterns
  auto complex_poly = pres("complex:classical:d=1:N=2").relations();
  int vanish = 0;
  for (const auto& r : complex_poly)
    if (r.name.rfind("vanish", 0) == 0) {
      CHECK(r.combo.term_count() == 1);
      CHECK(r.combo.degree() == 2);
      vanish++;
    }
  CHECK(vanish == 8);
}

TEST_CASE("span membership: basics from the free and classical spheres") {
  // free sphere at degree 1: no relation products fit, nothing derivable
  IdealSpan free1(pres("real:free:d=2:N=2").relations(), Field::real_coeffs, 2, 1);
  CHECK(free1.basis_size() == 0);
  CHECK_FALSE(free1.derive(WordCombo::monomial(parse_word("x1"))).has_value());

  IdealSpan classical(pres("real:classical:d=2:N=2").relations(), Field::real_coeffs, 2, 2);
  auto cert = classical.derive(combo_of("x1.x2", "x2.x1"));
  REQUIRE(cert.has_value());
  CHECK(classical.expand(*cert) == combo_of("x1.x2", "x2.x1"));

  // unit-sphere relation is itself derivable
  auto unit = pres("real:classical:d=2:N=2").relations()[0];
  auto ucert = classical.derive(unit.combo);
  REQUIRE(ucert.has_value());
  CHECK(classical.expand(*ucert) == unit.combo);

  // x1x2 is not derivable from the classical sphere alone at degree <= 4
  for (int dd : {2, 3, 4}) {
    IdealSpan span(pres("real:classical:d=2:N=2").relations(), Field::real_coeffs, 2, dd);
    CHECK_FALSE(span.derive(WordCombo::monomial(parse_word("x1.x2"))).has_value());
  }
  CHECK_THROWS_AS(classical.derive(WordCombo::monomial(parse_word("x1.x2.x1"))), std::invalid_argument);
}

TEST_CASE("classical plus twisted relations force vanishing products") {
  std::vector<Relation> joint;
  for (const auto& r : pres("real:classical:d=2:N=2").relations()) joint.push_back({"A:" + r.name, r.combo});
  for (const auto& r : pres("real:twisted:d=2:N=2").relations()) joint.push_back({"B:" + r.name, r.combo});
  IdealSpan span(joint, Field::real_coeffs, 2, 2);
  auto cert = span.derive(WordCombo::monomial(parse_word("x1.x2")));
  REQUIRE(cert.has_value());
  CHECK(span.expand(*cert) == WordCombo::monomial(parse_word("x1.x2")));
}

TEST_CASE("twisted sign chains") {
  // over the twisted sphere: abc + cba and aab - baa derivable at degree 3
  IdealSpan twisted(pres("real:twisted:d=3:N=3").relations(), Field::real_coeffs, 3, 3);
  WordCombo chain = WordCombo::monomial(parse_word("x1.x2.x3"));
  chain.add(parse_word("x3.x2.x1"), 1);
  CHECK(twisted.derive(chain).has_value());
  CHECK(twisted.derive(combo_of("x1.x1.x2", "x2.x1.x1")).has_value());

  // x_a x_b x_a + x_a^2 x_b over the twisted sphere
  WordCombo aba = WordCombo::monomial(parse_word("x1.x2.x1"));
  aba.add(parse_word("x1.x1.x2"), 1);
  auto cert = twisted.derive(aba);
  REQUIRE(cert.has_value());
  CHECK(twisted.expand(*cert) == aba);
}

TEST_CASE("degree monotonicity") {
  WordCombo target = combo_of("x1.x2", "x2.x1");
  for (int dd : {2, 3, 4}) {
    IdealSpan span(pres("real:classical:d=2:N=2").relations(), Field::real_coeffs, 2, dd);
    CHECK(span.derive(target).has_value());
  }
}

TEST_CASE("intersection identities at N=3") {
  // classical n twisted = polygonal d=1 classical (degree 3 suffices)
  auto v1 = intersect_equal(pres("real:classical:d=3:N=3"), pres("real:twisted:d=3:N=3"),
                            pres("real:classical:d=1:N=3"), 3);
  CHECK(v1.equal);

  // trivially, A = B = expected
  auto v0 = intersect_equal(pres("real:half:d=3:N=3"), pres("real:half:d=3:N=3"), pres("real:half:d=3:N=3"), 3);
  CHECK(v0.equal);

  CHECK_THROWS_AS(intersect_equal(pres("real:classical:d=3:N=3"), pres("complex:twisted:d=3:N=3"),
                                  pres("real:classical:d=1:N=3"), 3),
                  std::invalid_argument);
}

TEST_CASE("certificate soundness on random derivable targets") {
  IdealSpan span(pres("real:classical:d=1:N=2").relations(), Field::real_coeffs, 2, 3);
  Rng rng(11);
  const auto& rels = span.relations();
  for (int trial = 0; trial < 25; ++trial) {
    // random small combination of framed relations must re-derive exactly
    WordCombo target;
    int pieces = 1 + static_cast<int>(rng.below(3));
    for (int p = 0; p < pieces; ++p) {
      const auto& rel = rels[rng.below(rels.size())];
      int pad = 3 - rel.combo.degree();
      if (pad < 0) continue;
      Word left, right;
      for (int i = 0; i < pad && rng.below(2); ++i) left.push_back({1 + static_cast<int>(rng.below(2)), false});
      for (int i = static_cast<int>(left.size()); i < pad && rng.below(2); ++i)
        right.push_back({1 + static_cast<int>(rng.below(2)), false});
      Rational c = make_rational(rng.range(-3, 3), 1 + rng.range(0, 2));
      target += rel.combo.framed(left, right).scaled(c);
    }
    if (target.degree() > 3) continue;
    auto cert = span.derive(target);
    REQUIRE(cert.has_value());
    CHECK(span.expand(*cert) == target);
    // monotone in the degree bound
    IdealSpan wider(pres("real:classical:d=1:N=2").relations(), Field::real_coeffs, 2, 4);
    CHECK(wider.derive(target).has_value());
  }
}

TEST_CASE("resource budget errors carry the required dimension") {
  try {
    IdealSpan span(pres("real:free:d=4:N=4").relations(), Field::real_coeffs, 4, 4, 100);
    CHECK(false);
  } catch (const ResourceError& e) {
    CHECK(e.required_dimension > 100);
  }
}

TEST_CASE("saturation probes") {
  // full symmetric levels derive every untwisted relation family
  auto full = FilteredFamily::full_symmetric(4);
  auto probe = saturation_probe(full, parse_permutation("(21)"), false, Field::real_coeffs, 3, 3);
  CHECK(probe.holds);

  // the trivial family still derives the relations of the identity
  auto triv = FilteredFamily::trivial(4);
  auto probe_id = saturation_probe(triv, Permutation::identity(3), false, Field::real_coeffs, 3, 3);
  CHECK(probe_id.holds);

  // half-liberated levels do not derive commutativity at degree 4
  auto half = FilteredFamily::generated(4, {parse_permutation("(321)")});
  auto probe_half = saturation_probe(half, parse_permutation("(21)"), false, Field::real_coeffs, 3, 4);
  CHECK_FALSE(probe_half.holds);
  REQUIRE(probe_half.failing.has_value());
  CHECK(probe_half.failing->degree() == 2);
}
