#include "hurwitz/matrix.hpp"

#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const int> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Rational> Matrix::column(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Element operator*(const Matrix& a, const Element& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product: shape mismatch");
  std::vector<Rational> w(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Rational& aij = a(i, j);
      if (aij != 0 && v[j] != 0) acc += aij * v[j];
    }
    w[i] = acc;
  }
  return Element(std::move(w));
}

Rational quadratic_value(const Matrix& m, const Element& u) {
  if (m.rows() != u.size() || m.cols() != u.size()) throw DimensionMismatch("quadratic_value: shape mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) acc += m(i, j) * u[i] * u[j];
  return acc;
}

std::vector<Element> null_space(const Matrix& a) {
  Matrix r = a;
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && r(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(sel, j), r(pivot_row, j));
    Rational inv = 1 / r(pivot_row, col);
    for (std::size_t j = 0; j < cols; ++j) r(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || r(i, col) == 0) continue;
      Rational f = r(i, col);
      for (std::size_t j = 0; j < cols; ++j) r(i, j) -= f * r(pivot_row, j);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<Element> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Element v = Element::zero(static_cast<int>(cols));
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << to_string(m(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace hurwitz
