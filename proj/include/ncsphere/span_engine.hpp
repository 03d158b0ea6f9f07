// Degree-truncated ideal spans over the free *-algebra, with certificates.
//
// The span of a relation family at degree D is the rational span of all
// products w1 * r * w2 of total degree <= D. Membership of a combo in that
// span is decided by reduction against an echelonized basis; a positive
// answer carries an expressing combination over the framed relations, which
// re-expands exactly to the target. A negative answer means only
// "not derivable at degree D".
#pragma once

#include "ncsphere/filtered_family.hpp"
#include "ncsphere/presentation.hpp"
#include "ncsphere/word.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncsphere {

struct ResourceError : std::runtime_error {
  std::size_t required_dimension;
  explicit ResourceError(std::size_t required)
      : std::runtime_error("word space dimension " + std::to_string(required) + " exceeds the configured budget"),
        required_dimension(required) {}
};

struct CertificateTerm {
  Word left;
  std::string relation;  // name of the relation framed by left/right
  Word right;
  Rational coeff;
};

struct Certificate {
  std::vector<CertificateTerm> terms;
};

// Exact re-expansion of a certificate against a relation list; independent of
// the span machinery that produced it.
WordCombo expand_certificate(const Certificate& cert, const std::vector<Relation>& relations);

class IdealSpan {
 public:
  static constexpr std::size_t kDefaultBudget = 2'000'000;

  IdealSpan(std::vector<Relation> relations, Field field, int N, int degree_bound,
            std::size_t dimension_budget = kDefaultBudget);

  static IdealSpan of(const SpherePresentation& p, int degree_bound,
                      std::size_t dimension_budget = kDefaultBudget) {
    return IdealSpan(p.relations(), p.field, p.N, degree_bound, dimension_budget);
  }

  // Membership test; target degree must be <= the degree bound.
  std::optional<Certificate> derive(const WordCombo& target) const;

  // Exact re-expansion of a certificate (for soundness checks).
  WordCombo expand(const Certificate& cert) const;

  int degree_bound() const { return degree_bound_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t basis_size() const { return basis_.size(); }
  const std::vector<Relation>& relations() const { return relations_; }

 private:
  struct Row {
    WordCombo combo;                  // monic
    std::map<int, Rational> sources;  // generator index -> coefficient
  };
  struct Generator {
    int relation;
    Word left, right;
  };

  void insert_generator(int gen_index);

  std::vector<Relation> relations_;
  Field field_;
  int N_;
  int degree_bound_;
  std::size_t dimension_ = 0;
  std::vector<Generator> generators_;
  std::map<Word, Row, WordLess> basis_;  // keyed by leading word
};

// Verifies both inclusions between span(a u b) and span(expected) at the
// given degree: every relation of `expected` derivable from a u b, and every
// relation of a and of b derivable from `expected`.
struct IntersectVerdict {
  bool equal = false;
  std::size_t certified_forward = 0;   // relations of `expected` from a u b
  std::size_t certified_backward = 0;  // relations of a u b from `expected`
  std::vector<std::pair<std::string, Certificate>> forward;
  std::vector<std::pair<std::string, Certificate>> backward;
  std::vector<std::string> failures;   // names of non-derivable relations
  std::vector<Relation> joint_relations;  // the a u b list the certificates refer to
};

IntersectVerdict intersect_equal(const SpherePresentation& a, const SpherePresentation& b,
                                 const SpherePresentation& expected, int degree_bound);

// Tests whether all instantiated relations of s are derivable at the given
// degree from the presentation generated by the relations of the family g
// (unit-sphere relation included). Approximates saturation from below; a
// negative verdict only says "not derivable at this degree" and carries the
// first failing combo.
struct SaturationProbe {
  bool holds = false;
  int relations_checked = 0;
  std::optional<WordCombo> failing;
};

SaturationProbe saturation_probe(const FilteredFamily& g, const Permutation& s, bool twisted, Field field,
                                 int N, int degree_bound);

}  // namespace ncsphere
