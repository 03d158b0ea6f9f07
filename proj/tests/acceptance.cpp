// Acceptance gate: runs the full verification pipeline twice and checks every
// criterion against the produced case records, one line per criterion.
#include "ncsphere/report.hpp"
#include "ncsphere/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ncsphere;

namespace {

int g_failures = 0;

const Report* g_report = nullptr;

const CaseRecord* find_case(const std::string& id) {
  for (const auto& c : g_report->cases)
    if (c.id == id) return &c;
  return nullptr;
}

struct Criterion {
  bool ok = true;
  std::string detail;
  double ms = 0;

  void require_pass(const std::string& id) {
    const CaseRecord* c = find_case(id);
    if (!c) {
      ok = false;
      detail += " [missing " + id + "]";
      return;
    }
    ms += c->ms;
    if (c->verdict != "pass") {
      ok = false;
      detail += " [" + id + ": " + c->verdict + " " + c->witness + "]";
    }
  }
};

void report_criterion(int number, const std::string& name, const Criterion& c) {
  std::printf("%s criterion %d: %s (%.0f ms)%s\n", c.ok ? "PASS" : "FAIL", number, name.c_str(), c.ms,
              c.detail.c_str());
  if (!c.ok) g_failures++;
}

}  // namespace

int main() {
  SuiteConfig config;
  config.seed = 0;
  config.no_cache = true;

  auto wall_start = std::chrono::steady_clock::now();
  Report first = run_suite("all", config);
  Report second = run_suite("all", config);
  double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - wall_start).count();
  g_report = &first;

  {  // 1: signature calculus, exhaustive and exact
    Criterion c;
    for (int k = 1; k <= 6; ++k) c.require_pass("signature/sgn/k=" + std::to_string(k));
    for (int n : {2, 4, 6, 8}) c.require_pass("signature/switch-parity/n=" + std::to_string(n));
    c.require_pass("signature/switch-involution");
    report_criterion(1, "signature equals inversion parity (k <= 6); switch parity well defined (<= 8 points)", c);
  }

  {  // 2: the kernel-signature sign against the anticommuting matrix model
    Criterion c;
    c.require_pass("signature/clifford-oracle");
    if (c.ok) {
      const CaseRecord* rec = find_case("signature/clifford-oracle");
      if (rec->witness.find("500") == std::string::npos) {
        c.ok = false;
        c.detail += " [expected 500 seeded instances, got: " + rec->witness + "]";
      }
    }
    report_criterion(2, "500 seeded twisted-relation signs match the matrix model exactly", c);
  }

  {  // 3: adjacent-pair witnesses for every non-identity permutation up to S_5
    Criterion c;
    const int sizes[] = {0, 0, 1, 5, 23, 119};
    int total_search = 0;
    for (int k = 2; k <= 5; ++k) {
      int seen = 0;
      for (const auto& rec : g_report->cases) {
        if (rec.id.rfind("prop24/S" + std::to_string(k) + "/", 0) != 0) continue;
        seen++;
        c.ms += rec.ms;
        if (rec.verdict != "pass") {
          c.ok = false;
          c.detail += " [" + rec.id + " " + rec.verdict + "]";
        }
      }
      if (seen != sizes[k]) {
        c.ok = false;
        c.detail += " [S" + std::to_string(k) + " has " + std::to_string(seen) + " cases, computed " +
                    std::to_string(sizes[k]) + "]";
      }
      total_search += seen;
    }
    for (const char* s : {"(231)", "(3412)", "(2413)", "(42513)"})
      c.require_pass(std::string("prop24/witness/") + s);
    if (total_search + 4 != 152) {
      c.ok = false;
      c.detail += " [record count " + std::to_string(total_search + 4) + " != 152]";
    }
    report_criterion(3, "adjacent-pair search succeeds on all 148 permutations; 4 published witnesses are members",
                     c);
  }

  {  // 4: standard parametrization of the levels
    Criterion c;
    for (int k = 2; k <= 6; ++k) {
      c.require_pass("parametrization/all-coarsenings/k=" + std::to_string(k));
      c.require_pass("parametrization/two-block/k=" + std::to_string(k));
    }
    report_criterion(4, "all-coarsenings levels are trivial; two-block levels are the parity-preserving groups", c);
  }

  {  // 5: twist vanishing degree
    Criterion c;
    c.require_pass("vanish-degree/identity");
    for (int k = 2; k <= 6; ++k) c.require_pass("vanish-degree/k=" + std::to_string(k));
    report_criterion(5, "twist vanishing degree lies in {1, 2} for every non-identity permutation, k <= 6", c);
  }

  {  // 6: weak saturation closures
    Criterion c;
    for (const char* f : {"trivial", "half-liberated", "full"})
      c.require_pass(std::string("weak-saturation/fixpoint/") + f + "/K=6");
    for (int k = 2; k <= 5; ++k) c.require_pass("weak-saturation/reaches-generator/k=" + std::to_string(k));
    report_criterion(6, "standard families are fixpoints at K=6; cyclic closures reach (21) or (321)", c);
  }

  {  // 7: sphere intersection identities with re-expanding certificates
    Criterion c;
    for (const char* field : {"real", "complex"})
      for (const char* idn : {"classical-and-twisted-is-polygonal-1", "classical-and-twisted-half-is-polygonal-2",
                              "half-and-twisted-is-twisted-polygonal-2", "half-and-twisted-half-is-half-polygonal-2"})
        c.require_pass(std::string("intersections/") + field + "/" + idn);
    report_criterion(7, "four intersection identities and their complex analogues certified in both directions", c);
  }

  {  // 8: linear independence ranks
    Criterion c;
    c.require_pass("independence/circle-six");
    c.require_pass("independence/halflib-monomials/N=2");
    c.require_pass("independence/halflib-monomials/N=3");
    c.require_pass("independence/classical-quadratics");
    c.require_pass("independence/clifford-cubes");
    report_criterion(8, "rank certificates: 6 circle monomials, 2N(N-1)+N cubics, N(N+1)/2 quadratics, N(N-1) cubes",
                     c);
  }

  {  // 9: quantum group relation checkers
    Criterion c;
    c.require_pass("qrel/signed-permutations");
    c.require_pass("qrel/monomial-iff-twisted/signed");
    c.require_pass("qrel/rotations/N=2");
    c.require_pass("qrel/rotations/N=3");
    c.require_pass("qrel/obarstar-probe/N=3");
    c.require_pass("qrel/intertwiners");
    c.require_pass("qrel/rotation-compatibility");
    c.require_pass("qrel/composition/N=2");
    c.require_pass("qrel/composition/N=3");
    c.require_pass("qrel/free-product");
    c.require_pass("qrel/hinf-extended");
    for (const char* id : {"qrel/rotations/N=2", "qrel/rotations/N=3"}) {
      const CaseRecord* rec = find_case(id);
      if (rec && rec->witness.find("1000 samples") == std::string::npos) {
        c.ok = false;
        c.detail += " [" + std::string(id) + ": expected 1000 samples]";
      }
    }
    report_criterion(9, "signed permutations, 1000 seeded rotations per dimension, intertwiners, compositions, dual",
                     c);
  }

  {  // 10: determinism of the composite run
    Criterion c;
    c.ms = wall_ms;
    std::string a = report_to_json(first, false).dump();
    std::string b = report_to_json(second, false).dump();
    if (a != b) {
      c.ok = false;
      c.detail = " [reports differ modulo timings]";
    }
    if (first.failed() != 0) {
      c.ok = false;
      c.detail += " [composite run has failures]";
    }
    report_criterion(10, "two seed-0 composite runs are byte-identical modulo timing fields", c);
  }

  std::printf("%s: %d criteria failed (total wall %.1f s)\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures, wall_ms / 1000.0);
  return g_failures == 0 ? 0 : 1;
}
