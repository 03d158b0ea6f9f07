#include "ncsphere/span_engine.hpp"

#include <algorithm>
#include <functional>

namespace ncsphere {

namespace {

// All words of exactly the given length over the alphabet, lexicographically.
void for_each_word(const std::vector<Letter>& letters, int length, const std::function<void(const Word&)>& fn) {
  Word w(length);
  std::vector<std::size_t> odo(length, 0);
  while (true) {
    for (int i = 0; i < length; ++i) w[i] = letters[odo[i]];
    fn(w);
    int pos = length - 1;
    while (pos >= 0 && odo[pos] + 1 == letters.size()) odo[pos--] = 0;
    if (pos < 0) return;
    odo[pos]++;
  }
}

}  // namespace

IdealSpan::IdealSpan(std::vector<Relation> relations, Field field, int N, int degree_bound,
                     std::size_t dimension_budget)
    : relations_(std::move(relations)), field_(field), N_(N), degree_bound_(degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  const auto letters = alphabet(field, N);
  const std::size_t a = letters.size();
  std::size_t dim = 0, pow = 1;
  for (int j = 0; j <= degree_bound; ++j) {
    dim += pow;
    if (dim > dimension_budget) throw ResourceError(dim);
    pow *= a;
  }
  dimension_ = dim;

  for (int r = 0; r < static_cast<int>(relations_.size()); ++r) {
    const int deg = relations_[r].combo.degree();
    if (deg < 0) continue;  // zero relation
    for (int pad = 0; pad + deg <= degree_bound; ++pad) {
      for (int left_len = 0; left_len <= pad; ++left_len) {
        const int right_len = pad - left_len;
        for_each_word(letters, left_len, [&](const Word& left) {
          for_each_word(letters, right_len, [&](const Word& right) {
            generators_.push_back({r, left, right});
            insert_generator(static_cast<int>(generators_.size()) - 1);
          });
        });
      }
    }
  }
}

void IdealSpan::insert_generator(int gen_index) {
  const Generator& g = generators_[gen_index];
  Row row;
  row.combo = relations_[g.relation].combo.framed(g.left, g.right);
  row.sources.emplace(gen_index, 1);
  while (!row.combo.is_zero()) {
    auto it = basis_.find(row.combo.leading_word());
    if (it == basis_.end()) break;
    Rational c = row.combo.leading_coeff();  // basis rows are monic
    row.combo.sub_scaled(c, it->second.combo);
    for (const auto& [src, k] : it->second.sources) {
      auto [slot, fresh] = row.sources.emplace(src, -c * k);
      if (!fresh) {
        slot->second -= c * k;
        if (slot->second == 0) row.sources.erase(slot);
      }
    }
  }
  if (row.combo.is_zero()) return;
  Rational lead = row.combo.leading_coeff();
  row.combo = row.combo.monic();
  for (auto& [src, k] : row.sources) k /= lead;
  Word key = row.combo.leading_word();
  basis_.emplace(std::move(key), std::move(row));
}

std::optional<Certificate> IdealSpan::derive(const WordCombo& target) const {
  if (target.degree() > degree_bound_) throw std::invalid_argument("target degree exceeds the span degree bound");
  WordCombo rem = target;
  std::map<int, Rational> used;
  while (!rem.is_zero()) {
    auto it = basis_.find(rem.leading_word());
    if (it == basis_.end()) return std::nullopt;
    Rational c = rem.leading_coeff();
    rem.sub_scaled(c, it->second.combo);
    for (const auto& [src, k] : it->second.sources) {
      auto [slot, fresh] = used.emplace(src, c * k);
      if (!fresh) {
        slot->second += c * k;
        if (slot->second == 0) used.erase(slot);
      }
    }
  }
  Certificate cert;
  for (const auto& [src, k] : used) {
    const Generator& g = generators_[src];
    cert.terms.push_back({g.left, relations_[g.relation].name, g.right, k});
  }
  return cert;
}

WordCombo IdealSpan::expand(const Certificate& cert) const { return expand_certificate(cert, relations_); }

WordCombo expand_certificate(const Certificate& cert, const std::vector<Relation>& relations) {
  WordCombo sum;
  for (const auto& term : cert.terms) {
    const Relation* rel = nullptr;
    for (const auto& r : relations)
      if (r.name == term.relation) {
        rel = &r;
        break;
      }
    if (!rel) throw std::invalid_argument("certificate names unknown relation " + term.relation);
    sum += rel->combo.framed(term.left, term.right).scaled(term.coeff);
  }
  return sum;
}

IntersectVerdict intersect_equal(const SpherePresentation& a, const SpherePresentation& b,
                                 const SpherePresentation& expected, int degree_bound) {
  if (a.field != b.field || a.field != expected.field || a.N != b.N || a.N != expected.N)
    throw std::invalid_argument("intersection needs matching field and dimension");

  std::vector<Relation> joint;
  for (const auto& r : a.relations()) joint.push_back({"A:" + r.name, r.combo});
  for (const auto& r : b.relations()) joint.push_back({"B:" + r.name, r.combo});

  IntersectVerdict v;
  IdealSpan joint_span(joint, a.field, a.N, degree_bound);
  for (const auto& r : expected.relations()) {
    if (auto cert = joint_span.derive(r.combo)) {
      v.certified_forward++;
      v.forward.emplace_back(r.name, std::move(*cert));
    } else {
      v.failures.push_back("expected:" + r.name);
    }
  }

  IdealSpan expected_span(expected.relations(), expected.field, expected.N, degree_bound);
  for (const auto& r : joint) {
    if (auto cert = expected_span.derive(r.combo)) {
      v.certified_backward++;
      v.backward.emplace_back(r.name, std::move(*cert));
    } else {
      v.failures.push_back(r.name);
    }
  }
  v.equal = v.failures.empty();
  v.joint_relations = std::move(joint);
  return v;
}

SaturationProbe saturation_probe(const FilteredFamily& g, const Permutation& s, bool twisted, Field field,
                                 int N, int degree_bound) {
  if (s.size() > degree_bound)
    throw std::invalid_argument("probe permutation size exceeds the degree bound");
  std::vector<Relation> rels;
  SpherePresentation base{field, SphereClass::free_sphere, N, N};
  for (const auto& r : base.relations()) rels.push_back(r);
  int n = 0;
  for (int k = 1; k <= std::min(g.cap(), degree_bound); ++k) {
    for (const auto& tau : g.level(k)) {
      if (tau.is_identity()) continue;
      for (auto& combo : instantiate_relations(tau, twisted, field, N))
        rels.push_back({"R#" + std::to_string(n++), std::move(combo)});
    }
  }
  IdealSpan span(rels, field, N, degree_bound);

  SaturationProbe probe;
  probe.holds = true;
  for (const auto& combo : instantiate_relations(s, twisted, field, N)) {
    probe.relations_checked++;
    if (!span.derive(combo)) {
      probe.holds = false;
      probe.failing = combo;
      return probe;
    }
  }
  return probe;
}

}  // namespace ncsphere
