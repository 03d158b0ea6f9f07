// Dense matrices over the Gaussian rationals.
#pragma once

#include "ncsphere/arith.hpp"

#include <vector>

namespace ncsphere {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static ExactMatrix identity(int n);
  static ExactMatrix scalar(int n, const GaussianRational& c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussianRational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const GaussianRational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  ExactMatrix transpose() const;
  ExactMatrix conjugate() const;
  ExactMatrix adjoint() const { return conjugate().transpose(); }
  ExactMatrix kron(const ExactMatrix& o) const;

  friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator*(const GaussianRational& c, const ExactMatrix& x);
  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<GaussianRational> a_;
};

}  // namespace ncsphere
