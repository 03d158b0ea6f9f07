#include "ncsphere/word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ncsphere {

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += 'x' + std::to_string(w[i].index);
    if (w[i].star) s += '*';
  }
  return s;
}

Word parse_word(const std::string& text) {
  if (text == "1" || text.empty()) return {};
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '.') {
      pos++;
      continue;
    }
    if (c != 'x' && c != 'z') throw std::invalid_argument("word letter must start with x or z: " + text);
    pos++;
    std::size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) pos++;
    if (start == pos) throw std::invalid_argument("word letter missing index: " + text);
    Letter l;
    l.index = std::atoi(text.substr(start, pos - start).c_str());
    if (pos < text.size() && text[pos] == '*') {
      l.star = true;
      pos++;
    }
    w.push_back(l);
  }
  return w;
}

WordCombo WordCombo::monomial(Word w, Rational coeff) {
  WordCombo c;
  c.add(w, coeff);
  return c;
}

void WordCombo::add(const Word& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(w, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int WordCombo::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

const Word& WordCombo::leading_word() const {
  if (terms_.empty()) throw std::logic_error("leading word of zero combo");
  return terms_.rbegin()->first;
}

const Rational& WordCombo::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero combo");
  return terms_.rbegin()->second;
}

WordCombo& WordCombo::operator+=(const WordCombo& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WordCombo& WordCombo::operator-=(const WordCombo& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

WordCombo WordCombo::scaled(const Rational& c) const {
  WordCombo out;
  if (c == 0) return out;
  for (const auto& [w, k] : terms_) out.terms_.emplace(w, c * k);
  return out;
}

void WordCombo::sub_scaled(const Rational& c, const WordCombo& o) {
  if (c == 0) return;
  for (const auto& [w, k] : o.terms_) add(w, -c * k);
}

WordCombo WordCombo::framed(const Word& left, const Word& right) const {
  WordCombo out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(concat(left, concat(w, right)), c);
  return out;
}

WordCombo WordCombo::monic() const {
  if (terms_.empty()) return {};
  Rational lead = leading_coeff();
  WordCombo out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c / lead);
  return out;
}

std::string to_string(const WordCombo& c) {
  if (c.is_zero()) return "0";
  std::string s;
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    const auto& [w, k] = *it;
    if (!s.empty()) s += k > 0 ? " + " : " - ";
    else if (k < 0) s += "-";
    Rational a = abs(k);
    if (a != 1 || w.empty()) s += a.get_str() + (w.empty() ? "" : "*");
    if (!w.empty()) s += word_to_string(w);
  }
  return s;
}

}  // namespace ncsphere
