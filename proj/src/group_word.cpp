#include "ncsphere/group_word.hpp"

namespace ncsphere {

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  for (int x : b.letters) {
    if (!out.letters.empty() && out.letters.back() == x) out.letters.pop_back();
    else out.letters.push_back(x);
  }
  return out;
}

std::string to_string(const GroupWord& w) {
  if (w.is_identity()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += '.';
    s += 'g' + std::to_string(w.letters[i]);
  }
  return s;
}

bool free_product_check(int i, int j, int k) {
  GroupWord lhs = GroupWord::gen(i) * GroupWord::gen(j) * GroupWord::gen(k);
  GroupWord rhs = GroupWord::gen(k) * GroupWord::gen(j) * GroupWord::gen(i);
  return lhs == rhs;
}

void GroupAlgebra::add(const GroupWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebra operator+(const GroupAlgebra& a, const GroupAlgebra& b) {
  GroupAlgebra out = a;
  for (const auto& [w, c] : b.terms_) out.add(w, c);
  return out;
}

GroupAlgebra operator-(const GroupAlgebra& a, const GroupAlgebra& b) {
  GroupAlgebra out = a;
  for (const auto& [w, c] : b.terms_) out.add(w, -c);
  return out;
}

GroupAlgebra operator*(const GroupAlgebra& a, const GroupAlgebra& b) {
  GroupAlgebra out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(wa * wb, ca * cb);
  return out;
}

std::string to_string(const GroupAlgebra& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : a.terms()) {
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += '-';
    Rational k = abs(c);
    if (k != 1) s += k.get_str() + "*";
    s += to_string(w);
  }
  return s;
}

GroupAlgebraMatrix free_product_dual_model(int N) {
  GroupAlgebraMatrix m;
  m.n = N;
  m.entries.assign(static_cast<std::size_t>(N) * N, GroupAlgebra::zero());
  for (int i = 0; i < N; ++i) m.at(i, i) = GroupAlgebra(GroupWord::gen(i + 1));
  return m;
}

}  // namespace ncsphere
