// Letters, words, and rational linear combinations of words in a free
// *-algebra on N generators. Real presentations never set the star flag;
// complex presentations use both z_i and z_i*.
#pragma once

#include "ncsphere/arith.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace ncsphere {

struct Letter {
  int index = 1;  // 1..N
  bool star = false;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Degree-lexicographic order: shorter words first, then letterwise.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Word concat(const Word& a, const Word& b);
std::string word_to_string(const Word& w);  // "x1.x2*.x1"; empty word is "1"
Word parse_word(const std::string& text);

class WordCombo {
 public:
  WordCombo() = default;
  static WordCombo monomial(Word w, Rational coeff = 1);

  void add(const Word& w, const Rational& coeff);  // drops zero coefficients
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max word length; -1 for zero
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Rational, WordLess>& terms() const { return terms_; }

  // Largest word in the degree-lex order; combo must be nonzero.
  const Word& leading_word() const;
  const Rational& leading_coeff() const;

  WordCombo& operator+=(const WordCombo& o);
  WordCombo& operator-=(const WordCombo& o);
  friend WordCombo operator+(WordCombo a, const WordCombo& b) { return a += b; }
  friend WordCombo operator-(WordCombo a, const WordCombo& b) { return a -= b; }
  WordCombo scaled(const Rational& c) const;
  // subtracts c * o, fused
  void sub_scaled(const Rational& c, const WordCombo& o);
  // w1 * this * w2
  WordCombo framed(const Word& left, const Word& right) const;
  // scaled so the leading coefficient is 1
  WordCombo monic() const;

  friend bool operator==(const WordCombo&, const WordCombo&) = default;

 private:
  std::map<Word, Rational, WordLess> terms_;
};

std::string to_string(const WordCombo& c);

}  // namespace ncsphere
