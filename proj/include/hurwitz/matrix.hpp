#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/algebra.hpp"
#include "hurwitz/scalar.hpp"

namespace hurwitz {

/// Dense row-major matrix of exact rationals. Sizes in this library never
/// exceed 8x8.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const int> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> column(std::size_t j) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Element operator*(const Matrix& a, const Element& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// u^T M u.
Rational quadratic_value(const Matrix& m, const Element& u);

/// Basis of the right null space {x : A x = 0}, by exact Gauss-Jordan elimination.
std::vector<Element> null_space(const Matrix& a);

std::string to_string(const Matrix& m);

}  // namespace hurwitz
