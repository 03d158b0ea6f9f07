// Exact scalars: rationals and Gaussian rationals. All arithmetic in the
// toolkit is exact; no floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ncsphere {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Element of Q(i). Conjugation is the involution a+bi -> a-bi.
struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }  // a^2 + b^2

  GaussianRational operator-() const { return {-re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const Rational& c, const GaussianRational& a) {
    return {c * a.re, c * a.im};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero Gaussian rational");
    Rational n = norm();
    return {re / n, -im / n};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

std::string to_string(const GaussianRational& z);

}  // namespace ncsphere
