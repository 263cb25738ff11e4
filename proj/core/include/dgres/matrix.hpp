#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over an exact Field with Gaussian elimination.
 *
 * Row-major storage. Everything is exact: rank, kernels and solves are
 * computed by elimination over the field (fraction-free Bareiss for rank
 * over Q), so results are bit-for-bit reproducible.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dgres/field.hpp"

namespace dgres {

class Matrix {
 public:
  Matrix() : field_(Field::rationals()) {}
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  /// Copies `block` with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block);

  bool is_zero() const noexcept;
  Matrix transpose() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::size_t rank() const;

  struct Echelon;
  Echelon rref() const;

  /// Basis of {x : A x = 0}, one vector per free column.
  std::vector<Vector> kernel_basis() const;
  /// Some x with A x = b, or nullopt when b is outside the column space.
  std::optional<Vector> solve(const Vector& b) const;

 private:
  void check_same_field(const Matrix& other) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Matrix::Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Sparse vector as (index, nonzero value) pairs, sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const Field& field, std::size_t size, const SparseVector& v);

/// [A | B] side by side; both need the same row count.
Matrix hstack(const Matrix& a, const Matrix& b);

}  // namespace dgres
