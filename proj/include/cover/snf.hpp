#ifndef COVER_SNF_HPP
#define COVER_SNF_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace cover {

// Exact integer arithmetic; arbitrary precision so elimination never
// overflows regardless of pivot growth.
using Int = boost::multiprecision::cpp_int;

class IMat {
 public:
  IMat() = default;
  IMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static IMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  IMat operator*(const IMat& rhs) const;
  IMat operator+(const IMat& rhs) const;
  IMat transposed() const;
  bool operator==(const IMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool isZero() const;

  Int trace() const;
  Int determinant() const;  // Bareiss fraction-free elimination

  void swapRows(int a, int b);
  void swapCols(int a, int b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// U * m * V = D with D diagonal, d1 | d2 | ..., U and V unimodular.
struct SNFResult {
  IMat U, D, V;

  std::vector<Int> diagonal() const;
  int rank() const;  // nonzero diagonal entries
};

SNFResult smithNormalForm(const IMat& m);

}  // namespace cover

#endif
