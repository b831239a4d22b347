#pragma once

#include <vector>

#include "homq/scalar.hpp"

namespace homq {

// Dense matrix of scalars, row major.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(Mat& m);
int rank(Mat m);

}  // namespace homq
