#include "cover/snf.hpp"

#include <algorithm>

#include "cover/error.hpp"

namespace cover {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::operator*(const IMat& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(ErrorKind::Integrity, "matrix dimension mismatch");
  IMat out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IMat IMat::operator+(const IMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::Integrity, "matrix dimension mismatch");
  IMat out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + rhs.at(i, j);
  return out;
}

IMat IMat::transposed() const {
  IMat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool IMat::isZero() const {
  for (const Int& v : data_)
    if (v != 0) return false;
  return true;
}

Int IMat::trace() const {
  Int t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

Int IMat::determinant() const {
  if (rows_ != cols_)
    throw Error(ErrorKind::Integrity, "determinant of non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IMat a = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      a.swapRows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

void IMat::swapRows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IMat::swapCols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

std::vector<Int> SNFResult::diagonal() const {
  std::vector<Int> d;
  for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D.at(i, i));
  return d;
}

int SNFResult::rank() const {
  int r = 0;
  for (const Int& v : diagonal())
    if (v != 0) ++r;
  return r;
}

SNFResult smithNormalForm(const IMat& m) {
  const int rows = m.rows(), cols = m.cols();
  SNFResult res{IMat::identity(rows), m, IMat::identity(cols)};
  IMat& D = res.D;
  IMat& U = res.U;
  IMat& V = res.V;

  auto addRow = [&](int dst, int src, const Int& f) {  // row dst += f * row src
    for (int j = 0; j < cols; ++j) D.at(dst, j) += f * D.at(src, j);
    for (int j = 0; j < rows; ++j) U.at(dst, j) += f * U.at(src, j);
  };
  auto addCol = [&](int dst, int src, const Int& f) {  // col dst += f * col src
    for (int i = 0; i < rows; ++i) D.at(i, dst) += f * D.at(i, src);
    for (int i = 0; i < cols; ++i) V.at(i, dst) += f * V.at(i, src);
  };
  auto negateRow = [&](int r) {
    for (int j = 0; j < cols; ++j) D.at(r, j) = -D.at(r, j);
    for (int j = 0; j < rows; ++j) U.at(r, j) = -U.at(r, j);
  };

  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    bool exhausted = false;
    while (true) {
      // Pivot: smallest nonzero absolute value in the trailing submatrix.
      // Re-selected after every pass so remainders (always smaller than the
      // previous pivot) become the new pivot; entries stay tame that way.
      int pr = -1, pc = -1;
      Int best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          Int v = abs(D.at(i, j));
          if (v != 0 && (pr < 0 || v < best)) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) {  // trailing block is zero
        exhausted = true;
        break;
      }

      D.swapRows(t, pr);
      U.swapRows(t, pr);
      D.swapCols(t, pc);
      for (int i = 0; i < cols; ++i) std::swap(V.at(i, t), V.at(i, pc));

      const Int pivot = D.at(t, t);
      bool remainder = false;
      for (int i = t + 1; i < rows; ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = D.at(i, t) / pivot;
        if (q != 0) addRow(i, t, -q);
        if (D.at(i, t) != 0) remainder = true;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = D.at(t, j) / pivot;
        if (q != 0) addCol(j, t, -q);
        if (D.at(t, j) != 0) remainder = true;
      }
      if (remainder) continue;  // some entry shrank below the pivot

      // Row and column are clear; make the pivot divide the whole submatrix.
      bool divisible = true;
      for (int i = t + 1; i < rows && divisible; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (D.at(i, j) % pivot != 0) {
            addRow(t, i, 1);  // pulls the offending row up, next pass shrinks
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (exhausted) break;
    if (D.at(t, t) < 0) negateRow(t);
  }

  // Divisibility chain: fold any entry not divisible by an earlier diagonal
  // entry back into it via one extra elimination round.
  for (int t = 0; t + 1 < steps; ++t) {
    if (D.at(t, t) == 0) break;
    for (int s = t + 1; s < steps; ++s) {
      if (D.at(s, s) % D.at(t, t) == 0) continue;
      addCol(t, s, 1);  // brings d_s into column t, row s
      bool clean = false;
      while (!clean) {
        clean = true;
        if (D.at(s, t) != 0) {
          Int q = D.at(s, t) / D.at(t, t);
          addRow(s, t, -q);
          if (D.at(s, t) != 0) {
            D.swapRows(t, s);
            U.swapRows(t, s);
            clean = false;
            continue;
          }
        }
        if (D.at(t, s) != 0) {
          Int q = D.at(t, s) / D.at(t, t);
          addCol(s, t, -q);
          if (D.at(t, s) != 0) {
            D.swapCols(t, s);
            for (int i = 0; i < cols; ++i) std::swap(V.at(i, t), V.at(i, s));
            clean = false;
          }
        }
      }
      if (D.at(t, t) < 0) negateRow(t);
      if (D.at(s, s) < 0) negateRow(s);
      s = t;  // re-check the chain from this position
    }
  }

  return res;
}

}  // namespace cover
