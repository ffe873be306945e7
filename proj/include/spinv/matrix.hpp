#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spinv/rational.hpp"

namespace spinv {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
///
/// Values are immutable in spirit: every arithmetic operation returns a new
/// matrix, and equality is exact entrywise comparison.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::span<const Vector> columns, std::size_t height);
  static Matrix column(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const { return entries_; }

  Vector col(std::size_t j) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const Matrix& b);

  bool is_zero() const;
  bool is_symmetric() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Matrix a, const Rational& s);
Matrix operator*(const Rational& s, Matrix a);
Vector operator*(const Matrix& a, const Vector& v);

// [a | b]
Matrix hcat(const Matrix& a, const Matrix& b);
// diag(a, b)
Matrix block_diag(const Matrix& a, const Matrix& b);

Rational dot(const Vector& a, const Vector& b);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Rational& s, Vector v);
bool is_zero(const Vector& v);
Vector unit_vector(std::size_t dim, std::size_t i);

Rational trace(const Matrix& m);

/// Reduced row echelon form by Gauss–Jordan elimination, always taking the
/// first nonzero entry in a column as pivot.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};
RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);

// Throws SingularMatrixError.
Matrix inverse(const Matrix& m);

// Basis of {x : m x = 0}, one column per free variable, in increasing
// free-column order. Result has m.cols() rows and possibly zero columns.
Matrix null_space(const Matrix& m);

// Unique solution of m x = b for square invertible m. Throws SingularMatrixError.
Matrix solve(const Matrix& m, const Matrix& b);

// Reduced column echelon form of the column span: nonzero columns only,
// ordered by increasing pivot row.
Matrix column_echelon(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace spinv
