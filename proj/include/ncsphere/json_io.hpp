// Exact JSON renderings of scalars, matrices, model points, and derivability
// certificates. Rationals are carried as "num/den" strings, never floats.
#pragma once

#include "ncsphere/exact_matrix.hpp"
#include "ncsphere/models.hpp"
#include "ncsphere/span_engine.hpp"

#include <json.hpp>

namespace ncsphere {

nlohmann::ordered_json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const ModelPoint& p);

nlohmann::ordered_json to_json(const Certificate& c);

}  // namespace ncsphere
