#include "ncsphere/exact_matrix.hpp"

#include <stdexcept>

namespace ncsphere {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

ExactMatrix ExactMatrix::scalar(int n, const GaussianRational& c) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

ExactMatrix ExactMatrix::conjugate() const {
  ExactMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).conj();
  return m;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
  ExactMatrix m(rows_ * o.rows_, cols_ * o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (at(r, c).is_zero()) continue;
      for (int r2 = 0; r2 < o.rows_; ++r2)
        for (int c2 = 0; c2 < o.cols_; ++c2)
          m.at(r * o.rows_ + r2, c * o.cols_ + c2) = at(r, c) * o.at(r2, c2);
    }
  return m;
}

ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  ExactMatrix m(x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.a_.size(); ++i) m.a_[i] = x.a_[i] + y.a_[i];
  return m;
}

ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  ExactMatrix m(x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.a_.size(); ++i) m.a_[i] = x.a_[i] - y.a_[i];
  return m;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  ExactMatrix m(x.rows_, y.cols_);
  for (int r = 0; r < x.rows_; ++r)
    for (int k = 0; k < x.cols_; ++k) {
      if (x.at(r, k).is_zero()) continue;
      for (int c = 0; c < y.cols_; ++c) {
        if (y.at(k, c).is_zero()) continue;
        m.at(r, c) += x.at(r, k) * y.at(k, c);
      }
    }
  return m;
}

ExactMatrix operator*(const GaussianRational& c, const ExactMatrix& x) {
  ExactMatrix m(x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.a_.size(); ++i) m.a_[i] = c * x.a_[i];
  return m;
}

bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

}  // namespace ncsphere
