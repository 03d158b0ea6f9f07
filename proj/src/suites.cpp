#include "ncsphere/suites.hpp"

#include "ncsphere/cache.hpp"
#include "ncsphere/filtered_family.hpp"
#include "ncsphere/json_io.hpp"
#include "ncsphere/models.hpp"
#include "ncsphere/partition.hpp"
#include "ncsphere/permutation.hpp"
#include "ncsphere/qcheck.hpp"
#include "ncsphere/span_engine.hpp"
#include "ncsphere/util.hpp"

#include <chrono>
#include <functional>
#include <set>

namespace ncsphere {

namespace {

struct CaseOutcome {
  bool ok = true;
  bool skip = false;
  std::string witness;
};

struct CaseSpec {
  std::string id;
  std::string claim;
  std::function<CaseOutcome()> body;
};

std::vector<CaseRecord> run_cases(std::vector<CaseSpec> specs, const SuiteConfig& config) {
  std::vector<CaseRecord> out(specs.size());
  unsigned jobs = config.jobs == 0 ? default_jobs() : config.jobs;
  parallel_for_index(specs.size(), jobs, [&](std::size_t i) {
    CaseRecord rec;
    rec.id = specs[i].id;
    rec.claim = specs[i].claim;
    auto start = std::chrono::steady_clock::now();
    try {
      CaseOutcome outcome = specs[i].body();
      rec.verdict = outcome.skip ? "skip" : outcome.ok ? "pass" : "fail";
      rec.witness = outcome.witness;
    } catch (const ResourceError& e) {
      rec.verdict = "skip";
      rec.witness = std::string("resource budget: ") + e.what();
    } catch (const std::exception& e) {
      rec.verdict = "fail";
      rec.witness = std::string("exception: ") + e.what();
    }
    rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out[i] = std::move(rec);
  });
  return out;
}

Report finish(const std::string& suite, const SuiteConfig& config, std::vector<CaseRecord> cases) {
  Report r;
  r.suite = suite;
  r.config = config;
  r.cases = std::move(cases);
  r.sort_cases();
  return r;
}

CaseOutcome pass_with(std::string witness) { return {true, false, std::move(witness)}; }
CaseOutcome fail_with(std::string witness) { return {false, false, std::move(witness)}; }

int suite_samples(const SuiteConfig& config, int fallback) {
  return config.samples > 0 ? config.samples : fallback;
}

// ---------------------------------------------------------------- signature

std::vector<Partition> even_partitions_on(int points) {
  std::vector<Partition> out;
  for (auto& p : all_partitions(points, 0))
    if (all_blocks_even(p)) out.push_back(std::move(p));
  return out;
}

}  // namespace

Report run_signature_suite(const SuiteConfig& config) {
  std::vector<CaseSpec> specs;

  const int max_k = config.explore ? 7 : 6;
  for (int k = 1; k <= max_k; ++k) {
    specs.push_back(
        {"signature/sgn/k=" + std::to_string(k),
         "twisting signature of a pair partition equals the permutation signature (inversion-count oracle)",
         [k]() {
           int checked = 0;
           for (const auto& s : symmetric_group(k)) {
             if (signature(pair_partition(s)) != s.sign())
               return fail_with("mismatch at " + to_string(s));
             checked++;
           }
           return pass_with(std::to_string(checked) + " permutations");
         }});
  }

  for (int n : {2, 4, 6, 8}) {
    specs.push_back(
        {"signature/switch-parity/n=" + std::to_string(n),
         "breadth-first switch exploration reaches noncrossing partitions at a single depth parity, matching "
         "the inversion-parity signature",
         [n]() {
           int checked = 0;
           for (const auto& p : even_partitions_on(n)) {
             auto parities = noncrossing_level_parities(p);
             if (parities.size() != 1)
               return fail_with("mixed parities at " + to_string(p));
             int sig = signature(p);
             if ((sig == 1) != (*parities.begin() == 0))
               return fail_with("parity disagrees with signature at " + to_string(p));
             if (signature_by_switches(p) != sig)
               return fail_with("switch search disagrees at " + to_string(p));
             checked++;
           }
           return pass_with(std::to_string(checked) + " even partitions");
         }});
  }

  specs.push_back(
      {"signature/switch-involution",
       "switching two neighbors twice restores the partition; one switch flips the signature",
       []() {
         int moves = 0;
         for (const auto& p : even_partitions_on(6)) {
           auto word = flattened_labels(p);
           for (int pos = 0; pos + 1 < p.points(); ++pos) {
             if (word[pos] == word[pos + 1]) continue;
             Partition q = switch_move(p, pos);
             if (!(switch_move(q, pos) == p)) return fail_with("switch not an involution at " + to_string(p));
             if (signature(q) != -signature(p)) return fail_with("switch kept the sign at " + to_string(p));
             moves++;
           }
         }
         return pass_with(std::to_string(moves) + " switch moves");
       }});

  const int oracle_samples = suite_samples(config, 500);
  specs.push_back(
      {"signature/clifford-oracle",
       "the twisted relation sign from the kernel signature matches the sign produced by the anticommuting "
       "matrix model",
       [config, oracle_samples]() {
         ModelPoint model = clifford_model_seeded(config.N, config.seed * 7919 + 17);
         Rng rng(config.seed ^ 0xc0ffee);
         for (int trial = 0; trial < oracle_samples; ++trial) {
           int k = 2 + static_cast<int>(rng.below(3));
           auto perms = symmetric_group(k);
           const Permutation& s = perms[rng.below(perms.size())];
           std::vector<int> tuple(k), permuted(k);
           for (auto& t : tuple) t = 1 + static_cast<int>(rng.below(config.N));
           for (int pos = 1; pos <= k; ++pos) permuted[pos - 1] = tuple[s(pos) - 1];
           Word lw(k), rw(k);
           for (int p = 0; p < k; ++p) lw[p] = {tuple[p], false}, rw[p] = {permuted[p], false};
           int sign = signature(kernel(tuple, permuted));
           if (!(evaluate(lw, model) == GaussianRational(make_rational(sign)) * evaluate(rw, model)))
             return fail_with("sign mismatch for " + to_string(s) + " at trial " + std::to_string(trial));
         }
         return pass_with(std::to_string(oracle_samples) + " seeded relation instances");
       }});

  return finish("signature-calculus", config, run_cases(std::move(specs), config));
}

// ------------------------------------------------------------------ prop24

Report run_prop24_suite(const SuiteConfig& config) {
  std::vector<CaseSpec> specs;
  std::vector<int> ks{2, 3, 4, 5};
  if (config.explore) {
    ks.push_back(6);
    ks.push_back(7);
  }
  for (int k : ks) {
    for (const auto& s : symmetric_group(k)) {
      if (s.is_identity()) continue;
      specs.push_back({"prop24/S" + std::to_string(k) + "/" + to_string(s),
                       "some non-identity element of <1(x)s, s(x)1> has two adjacent values",
                       [s]() {
                         auto w = prop24_search(s);
                         if (!w) return fail_with("no adjacent-pair witness found");
                         return pass_with("tau=" + to_string(w->tau) + " i=" + std::to_string(w->position) +
                                          " word=" + w->word);
                       }});
    }
  }

  struct Highlight {
    const char* sigma;
    const char* tau;
  };
  for (Highlight h : {Highlight{"(231)", "(2143)"}, Highlight{"(3412)", "(52143)"}, Highlight{"(2413)", "(4321)"},
                      Highlight{"(42513)", "(435621)"}}) {
    specs.push_back(
        {std::string("prop24/witness/") + h.sigma,
         "the published witness is a member of the generated group",
         [h]() {
           Permutation s = parse_permutation(h.sigma);
           Permutation tau = parse_permutation(h.tau);
           auto g = generated_group({tensor(Permutation::identity(1), s), tensor(s, Permutation::identity(1))},
                                    {"1(x)s", "s(x)1"});
           if (tau.size() == s.size() + 1) {
             if (!g.contains(tau)) return fail_with(std::string(h.tau) + " not in the group");
             return pass_with(std::string(h.tau) + " = " + g.witness.at(tau));
           }
           // size-k witness: both tensor embeddings must be members
           Permutation a = tensor(Permutation::identity(1), tau), b = tensor(tau, Permutation::identity(1));
           if (!g.contains(a) || !g.contains(b))
             return fail_with(std::string(h.tau) + " embeddings not in the group");
           return pass_with("1(x)" + std::string(h.tau) + " = " + g.witness.at(a) + ", " + h.tau +
                            "(x)1 = " + g.witness.at(b));
         }});
  }

  return finish("prop24", config, run_cases(std::move(specs), config));
}

// --------------------------------------------------------- parametrization

Report run_parametrization_suite(const SuiteConfig& config) {
  std::vector<CaseSpec> specs;
  const int max_k = config.explore ? 7 : 6;
  for (int k = 2; k <= max_k; ++k) {
    specs.push_back({"parametrization/all-coarsenings/k=" + std::to_string(k),
                     "requiring signature +1 on every coarsening leaves only the identity",
                     [k]() {
                       auto level = parametrize_level(k, CoarseningMode::all_coarsenings);
                       if (level.size() != 1 || !level[0].is_identity())
                         return fail_with("level has " + std::to_string(level.size()) + " elements");
                       return pass_with("level = {identity}");
                     }});
    specs.push_back(
        {"parametrization/two-block/k=" + std::to_string(k),
         "requiring signature +1 on two-block coarsenings cuts out exactly the parity-preserving permutations",
         [k]() {
           auto level = parametrize_level(k, CoarseningMode::two_block);
           std::set<Permutation> got(level.begin(), level.end());
           std::set<Permutation> expected;
           for (const auto& s : symmetric_group(k))
             if (is_half_liberated(s)) expected.insert(s);
           std::size_t half = 1, rest = 1;
           for (int i = 2; i <= (k + 1) / 2; ++i) half *= i;
           for (int i = 2; i <= k / 2; ++i) rest *= i;
           if (got != expected) return fail_with("level is not the parity-preserving set");
           if (got.size() != half * rest)
             return fail_with("cardinality " + std::to_string(got.size()) + " != " + std::to_string(half * rest));
           return pass_with(std::to_string(got.size()) + " parity-preserving permutations");
         }});
  }
  return finish("parametrization", config, run_cases(std::move(specs), config));
}

// ------------------------------------------------------------ vanish-degree

Report run_vanish_degree_suite(const SuiteConfig& config) {
  std::vector<CaseSpec> specs;
  specs.push_back({"vanish-degree/identity",
                   "identities admit no negative-signature coarsening",
                   []() {
                     for (int k = 1; k <= 6; ++k)
                       if (twist_vanish_degree(Permutation::identity(k)))
                         return fail_with("unexpected degree at k=" + std::to_string(k));
                     return pass_with("none for k <= 6");
                   }});
  const int max_k = config.explore ? 7 : 6;
  for (int k = 2; k <= max_k; ++k) {
    specs.push_back(
        {"vanish-degree/k=" + std::to_string(k),
         "every non-identity permutation forces vanishing at degree 1 or 2 (negative coarsening with at most "
         "3 blocks)",
         [k]() {
           int d1 = 0, d2 = 0;
           for (const auto& s : symmetric_group(k)) {
             if (s.is_identity()) continue;
             auto d = twist_vanish_degree(s);
             if (!d) return fail_with("no negative coarsening for " + to_string(s));
             if (d->degree == 1) d1++;
             else if (d->degree == 2) d2++;
             else return fail_with("degree " + std::to_string(d->degree) + " for " + to_string(s) +
                                   " (m=" + std::to_string(d->min_blocks) + ")");
           }
           return pass_with("d=1: " + std::to_string(d1) + ", d=2: " + std::to_string(d2));
         }});
  }
  return finish("vanish-degree", config, run_cases(std::move(specs), config));
}

// -------------------------------------------------------- weak saturation

Report run_weak_saturation_suite(const SuiteConfig& config) {
  std::vector<CaseSpec> specs;
  const int cap = config.cap;

  struct Family {
    const char* name;
    std::function<FilteredFamily(int)> make;
  };
  std::vector<Family> families{{"trivial", [](int c) { return FilteredFamily::trivial(c); }},
                               {"half-liberated", [](int c) { return FilteredFamily::half_liberated(c); }},
                               {"full", [](int c) { return FilteredFamily::full_symmetric(c); }}};
  std::vector<int> caps{cap};
  if (config.explore) caps.push_back(8);
  for (int c : caps) {
    for (const auto& fam : families) {
      specs.push_back({"weak-saturation/fixpoint/" + std::string(fam.name) + "/K=" + std::to_string(c),
                       "the standard family is already weakly saturated",
                       [fam, c]() {
                         FilteredFamily f = fam.make(c);
                         if (!f.is_filtered_group()) return fail_with("not a filtered group");
                         if (!(weak_saturation_closure(f) == f)) return fail_with("closure grew");
                         return pass_with("fixpoint at cap " + std::to_string(c));
                       }});
    }
  }

  for (int k = 2; k <= 5; ++k) {
    specs.push_back(
        {"weak-saturation/reaches-generator/k=" + std::to_string(k),
         "the closure of every nontrivial cyclic family contains the basic crossing or the 3-point reversal",
         [k, cap]() {
           int via_crossing = 0, via_reversal = 0;
           const Permutation crossing = parse_permutation("(21)");
           const Permutation reversal = parse_permutation("(321)");
           for (const auto& s : symmetric_group(k)) {
             if (s.is_identity()) continue;
             auto closure = weak_saturation_closure(FilteredFamily::generated(cap, {s}));
             bool c = closure.contains(crossing), r = closure.contains(reversal);
             if (!c && !r) return fail_with("closure of " + to_string(s) + " reaches neither generator");
             (c ? via_crossing : via_reversal)++;
           }
           return pass_with("crossing: " + std::to_string(via_crossing) +
                            ", reversal only: " + std::to_string(via_reversal));
         }});
  }

  specs.push_back({"weak-saturation/probe/full-derives-commutation",
                   "the relations of the basic crossing hold over the sphere of the full family (derived at "
                   "bounded degree)",
                   [config]() {
                     auto full = FilteredFamily::full_symmetric(std::min(config.cap, config.degree));
                     auto probe = saturation_probe(full, parse_permutation("(21)"), false, Field::real_coeffs,
                                                   config.N, config.degree);
                     if (!probe.holds) return fail_with("commutation not derivable");
                     return pass_with(std::to_string(probe.relations_checked) + " relations derived at D=" +
                                      std::to_string(config.degree));
                   }});

  specs.push_back(
      {"weak-saturation/probe/half-misses-commutation",
       "commutation is not derivable from the half-liberated family at this degree, and a matrix model "
       "witnesses genuine failure",
       [config]() {
         auto half = FilteredFamily::generated(std::min(config.cap, config.degree), {parse_permutation("(321)")});
         auto probe =
             saturation_probe(half, parse_permutation("(21)"), false, Field::real_coeffs, config.N, config.degree);
         if (probe.holds) return fail_with("commutation unexpectedly derivable");
         if (!probe.failing) return fail_with("no failing relation reported");
         // genuine non-membership: the failing combo survives on some model
         for (std::uint64_t seed = 1; seed <= 16; ++seed) {
           ModelPoint h = halflib_model(complex_polygonal_point(config.N, 2, {1, 2}, config.seed + seed));
           if (!evaluate(*probe.failing, h).is_zero())
             return pass_with("not derivable at D=" + std::to_string(config.degree) + "; " +
                              to_string(*probe.failing) + " is nonzero on a 2x2 model");
         }
         return fail_with("failing relation vanished on all sampled models");
       }});

  return finish("weak-saturation", config, run_cases(std::move(specs), config));
}

// ---------------------------------------------------- sphere intersections

Report run_sphere_intersections_suite(const SuiteConfig& config) {
  std::vector<CaseSpec> specs;

  struct Identity {
    const char* name;
    SphereClass a;
    SphereClass b;
    SphereClass expected_cls;
    int expected_d;
  };
  const std::vector<Identity> identities{
      {"classical-and-twisted-is-polygonal-1", SphereClass::classical, SphereClass::twisted, SphereClass::classical, 1},
      {"classical-and-twisted-half-is-polygonal-2", SphereClass::classical, SphereClass::twisted_half,
       SphereClass::classical, 2},
      {"half-and-twisted-is-twisted-polygonal-2", SphereClass::half, SphereClass::twisted, SphereClass::twisted, 2},
      {"half-and-twisted-half-is-half-polygonal-2", SphereClass::half, SphereClass::twisted_half, SphereClass::half,
       2},
  };

  for (Field field : {Field::real_coeffs, Field::complex_coeffs}) {
    std::string fname = field == Field::real_coeffs ? "real" : "complex";
    for (const auto& idn : identities) {
      specs.push_back(
          {"intersections/" + fname + "/" + idn.name,
           "the two relation families generate the same degree-bounded ideal as the expected polygonal sphere, "
           "certified in both directions",
           [idn, field, config]() {
             SpherePresentation a{field, idn.a, config.N, config.N};
             SpherePresentation b{field, idn.b, config.N, config.N};
             SpherePresentation expected{field, idn.expected_cls, idn.expected_d, config.N};
             auto verdict = intersect_equal(a, b, expected, config.degree);
             if (!verdict.equal) {
               std::string names;
               for (const auto& f : verdict.failures) names += f + " ";
               return fail_with("non-derivable: " + names);
             }
             // re-expand every certificate exactly
             auto find_combo = [](const std::vector<Relation>& rels, const std::string& name) -> const WordCombo& {
               for (const auto& r : rels)
                 if (r.name == name) return r.combo;
               throw std::logic_error("relation lookup failed: " + name);
             };
             auto expected_rels = expected.relations();
             for (const auto& [name, cert] : verdict.forward)
               if (!(expand_certificate(cert, verdict.joint_relations) == find_combo(expected_rels, name)))
                 return fail_with("forward certificate for " + name + " does not re-expand");
             for (const auto& [name, cert] : verdict.backward)
               if (!(expand_certificate(cert, expected_rels) == find_combo(verdict.joint_relations, name)))
                 return fail_with("backward certificate for " + name + " does not re-expand");
             return pass_with(std::to_string(verdict.certified_forward) + " + " +
                              std::to_string(verdict.certified_backward) + " certificates, all re-expanded");
           }});
    }
  }

  specs.push_back({"intersections/twist-chain/distinct",
                   "over the twisted sphere, abc + cba is derivable for distinct letters",
                   [config]() {
                     SpherePresentation tw{Field::real_coeffs, SphereClass::twisted, config.N, config.N};
                     IdealSpan span = IdealSpan::of(tw, 3);
                     WordCombo chain = WordCombo::monomial(parse_word("x1.x2.x3"));
                     chain.add(parse_word("x3.x2.x1"), 1);
                     auto cert = span.derive(chain);
                     if (!cert) return fail_with("abc + cba not derivable");
                     if (!(span.expand(*cert) == chain)) return fail_with("certificate does not re-expand");
                     return pass_with(std::to_string(cert->terms.size()) + "-term certificate");
                   }});
  specs.push_back({"intersections/twist-chain/repeated",
                   "over the twisted sphere, aab - baa is derivable",
                   [config]() {
                     SpherePresentation tw{Field::real_coeffs, SphereClass::twisted, config.N, config.N};
                     IdealSpan span = IdealSpan::of(tw, 3);
                     WordCombo chain = WordCombo::monomial(parse_word("x1.x1.x2"));
                     chain.add(parse_word("x2.x1.x1"), -1);
                     auto cert = span.derive(chain);
                     if (!cert) return fail_with("aab - baa not derivable");
                     return pass_with(std::to_string(cert->terms.size()) + "-term certificate");
                   }});
  specs.push_back({"intersections/twist-chain/aba",
                   "over the twisted sphere, x_a x_b x_a + x_a^2 x_b is derivable",
                   [config]() {
                     SpherePresentation tw{Field::real_coeffs, SphereClass::twisted, config.N, config.N};
                     IdealSpan span = IdealSpan::of(tw, 3);
                     WordCombo aba = WordCombo::monomial(parse_word("x1.x2.x1"));
                     aba.add(parse_word("x1.x1.x2"), 1);
                     auto cert = span.derive(aba);
                     if (!cert) return fail_with("not derivable");
                     return pass_with(std::to_string(cert->terms.size()) + "-term certificate");
                   }});

  specs.push_back(
      {"intersections/non-derivability-witness",
       "x1 x2 is not derivable on the plain classical sphere, and a rational point certifies it at every degree",
       [config]() {
         SpherePresentation cl{Field::real_coeffs, SphereClass::classical, config.N, config.N};
         for (int dd = 2; dd <= config.degree; ++dd)
           if (IdealSpan::of(cl, dd).derive(WordCombo::monomial(parse_word("x1.x2"))))
             return fail_with("unexpectedly derivable at D=" + std::to_string(dd));
         ModelPoint p = polygonal_point(config.N, config.N, [&] {
           std::vector<int> s;
           for (int i = 1; i <= config.N; ++i) s.push_back(i);
           return s;
         }(), config.seed + 13);
         if (evaluate(parse_word("x1.x2"), p).is_zero()) return fail_with("witness point degenerate");
         return pass_with("not derivable at D<=" + std::to_string(config.degree) + "; nonzero at a rational point");
       }});

  return finish("sphere-intersections", config, run_cases(std::move(specs), config));
}

// ------------------------------------------------------------ independence

Report run_independence_suite(const SuiteConfig& config) {
  std::vector<CaseSpec> specs;

  specs.push_back({"independence/circle-six",
                   "the six circle monomials are linearly independent over the complex circle",
                   [config]() {
                     std::vector<Word> six = {parse_word("x1.x1*.x2"), parse_word("x2.x2*.x1"),
                                              parse_word("x1.x1.x2*"), parse_word("x2.x2.x1*"),
                                              parse_word("x1.x1*.x1"), parse_word("x2.x2*.x2")};
                     std::vector<ModelPoint> pts;
                     for (std::uint64_t i = 1; i <= 8; ++i)
                       pts.push_back(complex_polygonal_point(2, 2, {1, 2}, config.seed + i));
                     auto rank = independence_rank(six, pts);
                     if (rank != 6) return fail_with("rank " + std::to_string(rank) + " != 6");
                     return pass_with("rank 6 over " + std::to_string(pts.size()) + " samples");
                   }});

  for (int N : {2, 3}) {
    specs.push_back(
        {"independence/halflib-monomials/N=" + std::to_string(N),
         "the cubic monomials x_a^2 x_b, x_a x_b x_a, x_a^3 are independent over the half-liberated polygonal "
         "sphere",
         [N, config]() {
           std::vector<Word> fns;
           for (int a = 1; a <= N; ++a)
             for (int b = 1; b <= N; ++b) {
               if (a == b) continue;
               fns.push_back({{a, false}, {a, false}, {b, false}});
               fns.push_back({{a, false}, {b, false}, {a, false}});
             }
           for (int a = 1; a <= N; ++a) fns.push_back({{a, false}, {a, false}, {a, false}});
           std::vector<ModelPoint> samples;
           std::uint64_t s = 0;
           for (int a = 1; a <= N; ++a)
             for (int b = a + 1; b <= N; ++b)
               for (int rep = 0; rep < 2 + 3 * N; ++rep)
                 samples.push_back(halflib_model(complex_polygonal_point(N, 2, {a, b}, config.seed + 31 + 17 * s++)));
           auto rank = independence_rank(fns, samples);
           std::size_t want = static_cast<std::size_t>(2 * N * (N - 1) + N);
           if (rank != want)
             return fail_with("rank " + std::to_string(rank) + " != " + std::to_string(want));
           return pass_with("rank " + std::to_string(want) + " over " + std::to_string(samples.size()) + " samples");
         }});
  }

  specs.push_back({"independence/classical-quadratics",
                   "the quadratic monomials x_i x_j (i <= j) are independent over the degree-2 polygonal sphere",
                   [config]() {
                     const int N = config.N;
                     std::vector<Word> quad;
                     for (int i = 1; i <= N; ++i)
                       for (int j = i; j <= N; ++j) quad.push_back({{i, false}, {j, false}});
                     std::vector<ModelPoint> pts;
                     std::uint64_t s = 0;
                     for (int a = 1; a <= N; ++a)
                       for (int b = a + 1; b <= N; ++b)
                         for (int rep = 0; rep < 4; ++rep)
                           pts.push_back(polygonal_point(N, 2, {a, b}, config.seed + 100 + s++));
                     auto rank = independence_rank(quad, pts);
                     std::size_t want = static_cast<std::size_t>(N * (N + 1) / 2);
                     if (rank != want)
                       return fail_with("rank " + std::to_string(rank) + " != " + std::to_string(want));
                     return pass_with("rank " + std::to_string(want) + " over " + std::to_string(pts.size()) +
                                      " samples");
                   }});

  specs.push_back({"independence/clifford-cubes",
                   "the monomials x_a^2 x_b (a != b) are independent over the anticommuting matrix models",
                   [config]() {
                     const int N = config.N;
                     std::vector<Word> cube;
                     for (int a = 1; a <= N; ++a)
                       for (int b = 1; b <= N; ++b)
                         if (a != b) cube.push_back({{a, false}, {a, false}, {b, false}});
                     std::vector<ModelPoint> cliffs;
                     for (std::uint64_t i = 1; i <= 6; ++i)
                       cliffs.push_back(clifford_model_seeded(N, config.seed + i));
                     auto rank = independence_rank(cube, cliffs);
                     std::size_t want = static_cast<std::size_t>(N * (N - 1));
                     if (rank != want)
                       return fail_with("rank " + std::to_string(rank) + " != " + std::to_string(want));
                     return pass_with("rank " + std::to_string(want) + " over " + std::to_string(cliffs.size()) +
                                      " models");
                   }});

  specs.push_back({"independence/twisted-half-monomials",
                   "independence of the twisted half-liberated monomials needs a model this toolkit does not have",
                   []() {
                     CaseOutcome o;
                     o.skip = true;
                     o.witness = "no finite twisted-half model available here; not certified";
                     return o;
                   }});

  return finish("independence", config, run_cases(std::move(specs), config));
}

// -------------------------------------------------------- quantum relations

Report run_quantum_relations_suite(const SuiteConfig& config) {
  std::vector<CaseSpec> specs;

  specs.push_back(
      {"qrel/signed-permutations",
       "every signed permutation matrix passes the hyperoctahedral relation sets and the five cubic families",
       []() {
         auto mats = signed_permutation_matrices(3);
         for (const auto& u : mats) {
           for (QgId id : {QgId::H, QgId::Obar, QgId::Hinf, QgId::Hstar, QgId::Hplus, QgId::K, QgId::Kinf,
                           QgId::Kstar, QgId::Kplus})
             if (auto v = check_matrix(u, id))
               return fail_with(qg_name(id) + " violated: " + v->identity + " " + v->detail);
           if (auto v = lemma54_check(u)) return fail_with("cubic family violated: " + v->identity);
           if (auto v = extended_vanishing_check(u)) return fail_with("extended vanishing violated");
         }
         return pass_with(std::to_string(mats.size()) + " matrices x 9 relation sets");
       }});

  specs.push_back({"qrel/monomial-iff-twisted/signed",
                   "signed permutations are exactly the monomial orthogonals, and they pass the twisted set",
                   []() {
                     for (int N = 2; N <= 4; ++N)
                       for (const auto& u : signed_permutation_matrices(N)) {
                         if (!is_monomial(u)) return fail_with("signed permutation not monomial");
                         if (check_matrix(u, QgId::Obar)) return fail_with("twisted set violated");
                       }
                     return pass_with("N = 2, 3, 4 exhaustive");
                   }});

  const int rotation_samples = suite_samples(config, 1000);
  for (int N : {2, 3}) {
    specs.push_back(
        {"qrel/rotations/N=" + std::to_string(N),
         "seeded rational orthogonal matrices pass the twisted relation set exactly when monomial",
         [N, rotation_samples, config]() {
           Rng rng(config.seed * 31 + N);
           int monomials = 0;
           for (int t = 0; t < rotation_samples; ++t) {
             ExactMatrix u = random_rational_orthogonal(N, rng);
             if (check_matrix(u, QgId::O)) return fail_with("sample not orthogonal at trial " + std::to_string(t));
             bool mono = is_monomial(u);
             monomials += mono;
             if ((check_matrix(u, QgId::Obar) == std::nullopt) != mono)
               return fail_with("twisted pass/monomial mismatch at trial " + std::to_string(t));
           }
           return pass_with(std::to_string(rotation_samples) + " samples, " + std::to_string(monomials) +
                            " monomial");
         }});
  }

  specs.push_back(
      {"qrel/obarstar-probe/N=3",
       "every sampled non-monomial orthogonal violates the (r,s) sign table",
       [rotation_samples, config]() {
         Rng rng(config.seed * 37 + 3);
         int tested = 0;
         for (int t = 0; t < rotation_samples; ++t) {
           ExactMatrix u = random_rational_orthogonal(3, rng);
           if (is_monomial(u)) continue;
           tested++;
           if (!check_matrix(u, QgId::Obarstar)) return fail_with("non-monomial passes at trial " + std::to_string(t));
         }
         return pass_with(std::to_string(tested) + " non-monomial samples all violate");
       }});

  specs.push_back({"qrel/hinf-extended",
                   "matrices passing the length-3 vanishing relations also satisfy the length-4 extension",
                   [config]() {
                     int tested = 0;
                     for (const auto& u : signed_permutation_matrices(3)) {
                       if (check_matrix(u, QgId::Hinf)) continue;
                       if (extended_vanishing_check(u)) return fail_with("extension fails on a signed permutation");
                       tested++;
                     }
                     Rng rng(config.seed * 41 + 7);
                     for (int t = 0; t < 200; ++t) {
                       ExactMatrix u = random_rational_orthogonal(3, rng);
                       if (check_matrix(u, QgId::Hinf)) continue;
                       if (extended_vanishing_check(u)) return fail_with("extension fails on a sample");
                       tested++;
                     }
                     return pass_with(std::to_string(tested) + " matrices");
                   }});

  specs.push_back(
      {"qrel/intertwiners",
       "the vanishing diagram intertwines signed permutations and rejects a non-monomial rotation",
       [config]() {
         Partition pi = hinf_pi_diagram(), sigma = hinf_sigma_diagram();
         for (const auto& u : signed_permutation_matrices(3)) {
           if (intertwines(pi, u)) return fail_with("pi fails on a signed permutation");
           if (intertwines(sigma, u)) return fail_with("sigma fails on a signed permutation");
         }
         ExactMatrix rot3 = direct_sum_with_identity(rotation2(config.seed + 5), 1);
         if (!intertwines(pi, rot3)) return fail_with("pi accepts a non-monomial rotation");
         if (intertwines(pair_partition(Permutation::identity(3)), rot3))
           return fail_with("identity strings rejected");
         return pass_with("48 signed permutations pass, rotation (+) 1 rejected");
       }});

  specs.push_back(
      {"qrel/rotation-compatibility",
       "bending the legs of the vanishing diagram yields the rotated diagram, as an exact matrix reshape",
       []() {
         Partition pi = hinf_pi_diagram();
         Partition middle = rotate_bottom_left_up(pi);
         Partition sigma = rotate_top_right_down(middle);
         if (!(sigma == hinf_sigma_diagram())) return fail_with("rotation chain does not reach the rotated diagram");
         for (int N : {2, 3}) {
           ExactMatrix tp = tpi_matrix(pi, N), tq = tpi_matrix(middle, N), tr = tpi_matrix(sigma, N);
           const int nk = tp.cols();
           for (int j = 0; j < tq.rows(); ++j)
             for (int x = 0; x < N; ++x)
               for (int i = 0; i < nk; ++i)
                 if (!(tq.at(j, x * nk + i) == tp.at(x * tq.rows() + j, i)))
                   return fail_with("first bend reshape fails at N=" + std::to_string(N));
           for (int j = 0; j < tq.rows(); ++j)
             for (int y = 0; y < N; ++y)
               for (int i = 0; i < tr.cols(); ++i)
                 if (!(tr.at(j * N + y, i) == tq.at(j, i * N + y)))
                   return fail_with("second bend reshape fails at N=" + std::to_string(N));
         }
         return pass_with("reshape identities exact at N = 2, 3");
       }});

  for (int N : {2, 3}) {
    specs.push_back(
        {"qrel/composition/N=" + std::to_string(N),
         "concatenating diagrams multiplies their matrices up to the loop factor",
         [N]() {
           std::vector<Partition> all;
           for (int k = 0; k <= 3; ++k)
             for (int l = 0; l <= 3; ++l)
               for (auto& p : all_partitions(k, l)) all.push_back(std::move(p));
           long long checked = 0;
           for (const auto& p : all)
             for (const auto& q : all) {
               if (p.lower != q.upper) continue;
               auto [comp, loops] = partition_compose(p, q);
               IntMatrix lhs = int_mul(tpi_int_matrix(q, N), tpi_int_matrix(p, N));
               long long scale = 1;
               for (int t = 0; t < loops; ++t) scale *= N;
               if (!(lhs == int_scale(scale, tpi_int_matrix(comp, N))))
                 return fail_with("composition identity fails for " + to_string(p) + " then " + to_string(q));
               checked++;
             }
           return pass_with(std::to_string(checked) + " composable pairs");
         }});
  }

  specs.push_back({"qrel/free-product",
                   "g_i g_j g_k = g_k g_j g_i exactly for non-distinct triples, and the diagonal dual model "
                   "passes the five cubic families",
                   []() {
                     for (int N = 2; N <= 4; ++N)
                       for (int i = 1; i <= N; ++i)
                         for (int j = 1; j <= N; ++j)
                           for (int k = 1; k <= N; ++k) {
                             bool distinct = i != j && j != k && i != k;
                             if (free_product_check(i, j, k) == distinct)
                               return fail_with("triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                                std::to_string(k) + ") wrong");
                           }
                     for (int N : {3, 4})
                       if (auto v = lemma54_check(free_product_dual_model(N)))
                         return fail_with("dual model violates " + v->identity);
                     return pass_with("triples N <= 4 exhaustive; dual model passes at N = 3, 4");
                   }});

  specs.push_back({"qrel/complex-reduction",
                   "the complex twisted checker agrees with the real one on real matrices",
                   [config]() {
                     Rng rng(config.seed * 43 + 11);
                     for (int t = 0; t < 100; ++t) {
                       ExactMatrix u = random_rational_orthogonal(3, rng);
                       if (check_matrix(u, QgId::Ubar).has_value() != check_matrix(u, QgId::Obar).has_value())
                         return fail_with("verdicts differ at trial " + std::to_string(t));
                     }
                     for (const auto& u : signed_permutation_matrices(3))
                       if (check_matrix(u, QgId::Ubar).has_value() != check_matrix(u, QgId::Obar).has_value())
                         return fail_with("verdicts differ on a signed permutation");
                     return pass_with("100 samples + 48 signed permutations");
                   }});

  specs.push_back({"qrel/halfclassical-intersections",
                   "the half-liberated intersection computations rest on structure theory with no finite matrix "
                   "shadow beyond the classical one",
                   []() {
                     CaseOutcome o;
                     o.skip = true;
                     o.witness = "only classical-matrix shadows are checked here; the rest is out of desk-scale reach";
                     return o;
                   }});

  specs.push_back(
      {"qrel/phase-monomials",
       "monomial matrices with unimodular phases pass the complex hyperoctahedral sets",
       [config]() {
         Rng rng(config.seed * 47 + 13);
         for (int t = 0; t < 50; ++t) {
           // random permutation with unimodular Gaussian phases
           const int N = 3;
           std::vector<int> perm{0, 1, 2};
           for (int i = N - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
           ExactMatrix u(N, N);
           for (int i = 0; i < N; ++i) {
             Rational tt = make_rational(rng.range(-3, 3), rng.range(1, 3));
             Rational denom = 1 + tt * tt;
             u.at(i, perm[i]) = GaussianRational((1 - tt * tt) / denom, 2 * tt / denom);
           }
           for (QgId id : {QgId::K, QgId::Kinf, QgId::Kstar, QgId::Kplus, QgId::Ubar})
             if (auto v = check_matrix(u, id))
               return fail_with(qg_name(id) + " violated at trial " + std::to_string(t) + ": " + v->identity);
         }
         return pass_with("50 phase monomials x 5 relation sets");
       }});

  return finish("quantum-relations", config, run_cases(std::move(specs), config));
}

// ------------------------------------------------------------------ runner

std::vector<std::string> suite_names() {
  return {"signature-calculus", "prop24",       "parametrization", "vanish-degree",
          "weak-saturation",    "sphere-intersections", "independence",    "quantum-relations"};
}

bool is_known_suite(const std::string& name) {
  if (name == "all") return true;
  for (const auto& s : suite_names())
    if (s == name) return true;
  return false;
}

namespace {

Report dispatch(const std::string& name, const SuiteConfig& config) {
  if (name == "signature-calculus") return run_signature_suite(config);
  if (name == "prop24") return run_prop24_suite(config);
  if (name == "parametrization") return run_parametrization_suite(config);
  if (name == "vanish-degree") return run_vanish_degree_suite(config);
  if (name == "weak-saturation") return run_weak_saturation_suite(config);
  if (name == "sphere-intersections") return run_sphere_intersections_suite(config);
  if (name == "independence") return run_independence_suite(config);
  if (name == "quantum-relations") return run_quantum_relations_suite(config);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

Report run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "all") {
    // exploratory modes stay out of the composite run
    SuiteConfig sub = config;
    sub.explore = false;
    Report all;
    all.suite = "all";
    all.config = config;
    for (const auto& s : suite_names()) {
      Report r = run_suite(s, sub);
      for (auto& c : r.cases) all.cases.push_back(std::move(c));
    }
    all.sort_cases();
    return all;
  }
  if (!is_known_suite(name)) throw std::invalid_argument("unknown suite: " + name);

  const std::uint64_t digest = config_digest(name, config);
  if (!config.no_cache) {
    if (auto cached = cache_load(name, digest)) {
      Report r;
      r.suite = name;
      r.config = config;
      r.cases = std::move(*cached);
      r.sort_cases();
      return r;
    }
  }
  Report r = dispatch(name, config);
  if (!config.no_cache) cache_store(name, digest, r.cases);
  return r;
}

}  // namespace ncsphere
