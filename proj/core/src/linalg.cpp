#include "heiscat/linalg.hpp"

#include <utility>

namespace heiscat {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw PreconditionError("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational scale = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t Matrix::rank() const {
  SparseEchelon echelon;
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseVector v;
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) v[static_cast<int>(c)] = (*this)(r, c);
    echelon.insert(std::move(v));
  }
  return echelon.rank();
}

std::string Matrix::dump() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ' ';
      const Rational& q = (*this)(r, c);
      out += q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    out += '\n';
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix dimensions do not match");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v) {
  if (a.cols() != v.size()) throw PreconditionError("matrix and vector dimensions do not match");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (v[k] != 0 && a(i, k) != 0) out[i] += a(i, k) * v[k];
  return out;
}

void SparseEchelon::reduce(SparseVector& v) const {
  // Pivots are smallest keys, so eliminating in increasing key order never
  // reintroduces an already-cleared pivot.
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Rational factor = it->second;
    const int key = it->first;
    for (const auto& [col, val] : row->second) {
      Rational& slot = v[col];
      slot -= factor * val;
      if (slot == 0 && col != key) v.erase(col);
    }
    it = v.erase(v.find(key));
    it = v.upper_bound(key);
  }
}

bool SparseEchelon::insert(SparseVector v) {
  for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
  reduce(v);
  if (v.empty()) return false;
  const Rational lead = v.begin()->second;
  for (auto& [col, val] : v) val /= lead;
  rows_.emplace(v.begin()->first, std::move(v));
  return true;
}

bool SparseEchelon::contains(SparseVector v) const {
  for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
  reduce(v);
  return v.empty();
}

}  // namespace heiscat
