#pragma once

// Exact linear algebra over Q: a small dense matrix type for transition
// matrices and an incremental sparse row-echelon form for rank questions.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "heiscat/scalar.hpp"

namespace heiscat {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Throws PreconditionError when the matrix is singular or not square.
  Matrix inverse() const;
  std::size_t rank() const;

  /// Numerator/denominator grid, one row per line.
  std::string dump() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v);

using SparseVector = std::map<int, Rational>;

/// Row-echelon basis grown one vector at a time.  Each stored row has a
/// pivot column (its smallest key) with coefficient one.
class SparseEchelon {
 public:
  /// Reduces `v` against the stored rows; stores the remainder and returns
  /// true if it was nonzero.
  bool insert(SparseVector v);
  /// True iff `v` lies in the span of the inserted vectors.
  bool contains(SparseVector v) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  void reduce(SparseVector& v) const;
  std::map<int, SparseVector> rows_;
};

}  // namespace heiscat
