// The 18 sphere presentations (9 real, 9 complex) as instantiable relation
// families: one unit-sphere relation per star pattern, commutation relations
// generated by a class permutation (twisted or not), and the vanishing
// relations of polygonal degree d. d = N means no vanishing relations.
#pragma once

#include "ncsphere/permutation.hpp"
#include "ncsphere/word.hpp"

#include <string>
#include <vector>

namespace ncsphere {

enum class Field { real_coeffs, complex_coeffs };
enum class SphereClass { classical, half, free_sphere, twisted, twisted_half };

struct Relation {
  std::string name;
  WordCombo combo;
};

struct SpherePresentation {
  Field field = Field::real_coeffs;
  SphereClass cls = SphereClass::free_sphere;
  int d = 1;  // polygonal degree, 1..N; d = N means the full sphere
  int N = 1;

  // "{real|complex}:{classical|half|free|twisted|twisted-half}:d=<k>:N=<n>"
  std::string id() const;
  static SpherePresentation parse(const std::string& id);

  std::vector<Relation> relations() const;
};

// All letters of the presentation alphabet: x_1..x_N for real, z_i and z_i*
// for complex.
std::vector<Letter> alphabet(Field field, int N);

// For every tuple over the alphabet, the combo (left - sign * permuted).
// Untwisted sign is +1; the twisted sign is the signature of the kernel of
// the generator-index tuples (star flags do not enter the kernel). Zero
// combos are dropped and duplicates (up to scaling) are removed.
std::vector<WordCombo> instantiate_relations(const Permutation& s, bool twisted, Field field, int N);

}  // namespace ncsphere
