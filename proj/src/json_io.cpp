#include "ncsphere/json_io.hpp"

#include <stdexcept>

namespace ncsphere {

nlohmann::ordered_json rational_to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const nlohmann::json& j) {
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad rational: " + j.dump());
  q.canonicalize();
  return q;
}

nlohmann::ordered_json to_json(const GaussianRational& z) {
  return nlohmann::ordered_json{{"re", rational_to_json(z.re)}, {"im", rational_to_json(z.im)}};
}

GaussianRational gaussian_from_json(const nlohmann::json& j) {
  return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
}

nlohmann::ordered_json to_json(const ExactMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return nlohmann::ordered_json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
  int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  ExactMatrix m(rows, cols);
  const auto& entries = j.at("entries");
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = gaussian_from_json(entries.at(r).at(c));
  return m;
}

nlohmann::ordered_json to_json(const ModelPoint& p) {
  const char* kind = p.kind == ModelKind::classical_point ? "classical-point"
                     : p.kind == ModelKind::complex_point ? "complex-point"
                     : p.kind == ModelKind::clifford      ? "clifford"
                                                          : "halflib";
  nlohmann::ordered_json coords = nlohmann::ordered_json::array();
  for (const auto& c : p.coords) coords.push_back(to_json(c));
  return nlohmann::ordered_json{{"kind", kind},       {"n", p.N},          {"d", p.d},
                                {"dim", p.dim},       {"support", p.support}, {"coords", std::move(coords)}};
}

nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : c.terms)
    terms.push_back(nlohmann::ordered_json{{"left", word_to_string(t.left)},
                                           {"relation", t.relation},
                                           {"right", word_to_string(t.right)},
                                           {"coeff", rational_to_json(t.coeff)}});
  return terms;
}

}  // namespace ncsphere
