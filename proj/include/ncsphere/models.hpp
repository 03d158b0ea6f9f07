// Exact models of the spheres: rational points on classical polygonal
// spheres, Gaussian-rational points on complex ones, the Clifford model of
// the twisted sphere, the 2x2 half-liberated model, plus word evaluation and
// exact linear-independence ranks.
#pragma once

#include "ncsphere/exact_matrix.hpp"
#include "ncsphere/word.hpp"

#include <cstdint>
#include <vector>

namespace ncsphere {

enum class ModelKind { classical_point, complex_point, clifford, halflib };

struct ModelPoint {
  ModelKind kind = ModelKind::classical_point;
  int N = 0;
  int d = 0;                        // polygonal degree the point satisfies
  int dim = 1;                      // matrix dimension of each coordinate
  std::vector<ExactMatrix> coords;  // N coordinates, dim x dim (1x1 for scalar kinds)
  std::vector<int> support;         // 1-based indices of nonzero coordinates
};

// Stereographic rational unit vector: x = (2t, 1 - |t|^2) / (1 + |t|^2) from
// a seeded rational t-vector; every entry nonzero, sum of squares exactly 1.
std::vector<Rational> rational_sphere_point(int m, std::uint64_t seed);

// Classical point supported on the given coordinates; all products of d+1
// distinct coordinates vanish.
ModelPoint polygonal_point(int N, int d, const std::vector<int>& support, std::uint64_t seed);

// Gaussian-rational point with unimodular phases and a rational magnitude
// split; sum z_i z_i* = 1 exactly.
ModelPoint complex_polygonal_point(int N, int d, const std::vector<int>& support, std::uint64_t seed);

// x_i = lambda_i gamma_i with gamma_i pairwise-anticommuting self-adjoint
// involutions of dimension 2^ceil(N/2); needs sum lambda_i^2 = 1 and N <= 8.
ModelPoint clifford_model(int N, const std::vector<Rational>& lambda);
ModelPoint clifford_model_seeded(int N, std::uint64_t seed);

// gamma_i = [[0, z_i], [z_i*, 0]] from a complex point with d <= 2:
// self-adjoint, squares summing to 1, half-commuting, and products of three
// distinct coordinates vanish.
ModelPoint halflib_model(const ModelPoint& z);

// Homomorphic evaluation: empty word -> identity, concatenation -> product,
// star -> adjoint. Star letters are rejected on classical real points.
ExactMatrix evaluate(const Word& w, const ModelPoint& m);
ExactMatrix evaluate(const WordCombo& c, const ModelPoint& m);

// Exact rank of the matrix whose rows are the functions and whose columns
// are all matrix entries of their evaluations across all samples. Rank equal
// to the function count certifies linear independence.
std::size_t independence_rank(const std::vector<Word>& functions, const std::vector<ModelPoint>& samples);

}  // namespace ncsphere
