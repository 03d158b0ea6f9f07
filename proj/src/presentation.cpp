#include "ncsphere/presentation.hpp"

#include "ncsphere/partition.hpp"

#include <set>
#include <stdexcept>

namespace ncsphere {

namespace {

const char* class_name(SphereClass c) {
  switch (c) {
    case SphereClass::classical: return "classical";
    case SphereClass::half: return "half";
    case SphereClass::free_sphere: return "free";
    case SphereClass::twisted: return "twisted";
    case SphereClass::twisted_half: return "twisted-half";
  }
  return "?";
}

}  // namespace

std::string SpherePresentation::id() const {
  std::string s = field == Field::real_coeffs ? "real" : "complex";
  s += ":";
  s += class_name(cls);
  s += ":d=" + std::to_string(d) + ":N=" + std::to_string(N);
  return s;
}

SpherePresentation SpherePresentation::parse(const std::string& id) {
  SpherePresentation p;
  std::vector<std::string> parts;
  std::string cur;
  for (char c : id) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw std::invalid_argument("presentation id needs 4 fields: " + id);
  if (parts[0] == "real") p.field = Field::real_coeffs;
  else if (parts[0] == "complex") p.field = Field::complex_coeffs;
  else throw std::invalid_argument("unknown field: " + parts[0]);
  bool found = false;
  for (SphereClass c : {SphereClass::classical, SphereClass::half, SphereClass::free_sphere,
                        SphereClass::twisted, SphereClass::twisted_half}) {
    if (parts[1] == class_name(c)) {
      p.cls = c;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown sphere class: " + parts[1]);
  if (parts[2].rfind("d=", 0) != 0 || parts[3].rfind("N=", 0) != 0)
    throw std::invalid_argument("presentation id needs d=<k>:N=<n>: " + id);
  p.d = std::atoi(parts[2].c_str() + 2);
  p.N = std::atoi(parts[3].c_str() + 2);
  if (p.N < 1 || p.d < 1 || p.d > p.N) throw std::invalid_argument("presentation needs 1 <= d <= N");
  return p;
}

std::vector<Letter> alphabet(Field field, int N) {
  std::vector<Letter> out;
  for (int i = 1; i <= N; ++i) {
    out.push_back({i, false});
    if (field == Field::complex_coeffs) out.push_back({i, true});
  }
  return out;
}

std::vector<WordCombo> instantiate_relations(const Permutation& s, bool twisted, Field field, int N) {
  if (N < 1) throw std::invalid_argument("dimension must be positive");
  const int k = s.size();
  const auto letters = alphabet(field, N);
  std::vector<WordCombo> out;
  std::set<std::string> seen;
  std::vector<std::size_t> odo(k, 0);
  while (true) {
    Word left(k), right(k);
    std::vector<int> upper(k), lower(k);
    for (int pos = 0; pos < k; ++pos) {
      left[pos] = letters[odo[pos]];
      right[pos] = letters[odo[s(pos + 1) - 1]];
      upper[pos] = left[pos].index;
      lower[pos] = right[pos].index;
    }
    int sign = twisted ? signature(kernel(upper, lower)) : 1;
    WordCombo combo = WordCombo::monomial(left) - WordCombo::monomial(right, sign);
    if (!combo.is_zero()) {
      std::string key = to_string(combo.monic());
      if (seen.insert(key).second) out.push_back(combo.monic());
    }
    int pos = k - 1;
    while (pos >= 0 && odo[pos] + 1 == letters.size()) odo[pos--] = 0;
    if (pos < 0) break;
    odo[pos]++;
  }
  return out;
}

std::vector<Relation> SpherePresentation::relations() const {
  std::vector<Relation> rels;

  // unit sphere
  if (field == Field::real_coeffs) {
    WordCombo unit;
    for (int i = 1; i <= N; ++i) unit.add({{i, false}, {i, false}}, 1);
    unit.add({}, -1);
    rels.push_back({"unit", unit});
  } else {
    WordCombo unit_rs, unit_sr;
    for (int i = 1; i <= N; ++i) {
      unit_rs.add({{i, false}, {i, true}}, 1);
      unit_sr.add({{i, true}, {i, false}}, 1);
    }
    unit_rs.add({}, -1);
    unit_sr.add({}, -1);
    rels.push_back({"unit", unit_rs});
    rels.push_back({"unit*", unit_sr});
  }

  // class relations
  std::optional<Permutation> generator;
  bool twisted = false;
  switch (cls) {
    case SphereClass::classical: generator = parse_permutation("(21)"); break;
    case SphereClass::twisted: generator = parse_permutation("(21)"), twisted = true; break;
    case SphereClass::half: generator = parse_permutation("(321)"); break;
    case SphereClass::twisted_half: generator = parse_permutation("(321)"), twisted = true; break;
    case SphereClass::free_sphere: break;
  }
  if (generator) {
    int n = 0;
    for (auto& combo : instantiate_relations(*generator, twisted, field, N))
      rels.push_back({"class#" + std::to_string(n++), std::move(combo)});
  }

  // vanishing relations of polygonal degree d: words in d+1 distinct indices
  if (d < N) {
    const auto letters = alphabet(field, N);
    int n = 0;
    std::vector<std::size_t> odo(d + 1, 0);
    while (true) {
      bool distinct = true;
      for (int a = 0; a <= d && distinct; ++a)
        for (int b = a + 1; b <= d && distinct; ++b)
          if (letters[odo[a]].index == letters[odo[b]].index) distinct = false;
      if (distinct) {
        Word w(d + 1);
        for (int a = 0; a <= d; ++a) w[a] = letters[odo[a]];
        rels.push_back({"vanish#" + std::to_string(n++), WordCombo::monomial(w)});
      }
      int pos = d;
      while (pos >= 0 && odo[pos] + 1 == letters.size()) odo[pos--] = 0;
      if (pos < 0) break;
      odo[pos]++;
    }
  }
  return rels;
}

}  // namespace ncsphere
