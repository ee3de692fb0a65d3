#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "catc/rational.hpp"

namespace catc {

// Dense exact-rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const = default;

  QMatrix transpose() const;
  bool is_zero() const;

  // Sub-block copy helpers.
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

struct Rref {
  QMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Reduced row echelon form, pivoting on the first nonzero entry of each column.
Rref rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
// Columns form a basis of the null space; free variables set to unit vectors in column order.
QMatrix kernel(const QMatrix& m);
// Rows span the left null space: q * m = 0 and q has full row rank.
QMatrix cokernel_map(const QMatrix& m);
bool is_invertible(const QMatrix& m);
QMatrix inverse(const QMatrix& m);
// Basis of the column space, as a matrix whose columns are pivot columns of m.
QMatrix column_space(const QMatrix& m);

}  // namespace catc
