#include "dgres/matrix.hpp"

#include <utility>

#include "dgres/error.hpp"

namespace dgres {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_ || c >= cols_) fail(ErrorKind::ShapeMismatch, "set_column out of shape");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& block) {
  if (r + block.rows_ > rows_ || c + block.cols_ > cols_) fail(ErrorKind::ShapeMismatch, "set_block out of shape");
  for (std::size_t i = 0; i < block.rows_; ++i) {
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
  }
}

bool Matrix::is_zero() const noexcept {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

void Matrix::check_same_field(const Matrix& other) const {
  if (!(field_ == other.field_)) fail(ErrorKind::FieldMismatch, "matrices over " + field_.name() + " and " + other.field_.name());
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  a.check_same_field(b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::ShapeMismatch, "matrix sum shape");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.check_same_field(b);
  if (a.cols_ != b.rows_) fail(ErrorKind::ShapeMismatch, "matrix product shape");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) m(i, j) += aik * bkj;
      }
    }
  }
  return m;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols_ != x.size()) fail(ErrorKind::ShapeMismatch, "matrix-vector product shape");
  Vector y = zero_vector(a.field_, a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const Scalar& aik = a(i, k);
      if (!aik.is_zero()) y[i] += aik * x[k];
    }
  }
  return y;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Fraction-free Bareiss elimination on an integer matrix; returns the rank.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[r][j] = (m[rank][c] * m[r][j] - m[r][c] * m[rank][j]);
        mpz_divexact(m[r][j].get_mpz_t(), m[r][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t Matrix::rank() const {
  if (!field_.is_rational()) return rref().pivots.size();
  // Clear denominators row by row, then eliminate over Z.
  std::vector<std::vector<mpz_class>> ints(rows_, std::vector<mpz_class>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      const mpq_class& q = (*this)(r, c).rational();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      const mpq_class& q = (*this)(r, c).rational();
      ints[r][c] = q.get_num() * (lcm / q.get_den());
    }
  }
  return bareiss_rank(std::move(ints), cols_);
}

Matrix::Echelon Matrix::rref() const {
  Echelon e{*this, {}};
  Matrix& m = e.reduced;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
    std::size_t pivot = rows_;
    for (std::size_t r = row; r < rows_; ++r) {
      if (!m(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows_) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(row, j), m(pivot, j));
    }
    Scalar inv = m(row, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      Scalar factor = m(r, c);
      for (std::size_t j = c; j < cols_; ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
      }
    }
    e.pivots.push_back(c);
    ++row;
  }
  return e;
}

std::vector<Vector> Matrix::kernel_basis() const {
  Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(field_, cols_);
    v[free] = field_.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
  if (b.size() != rows_) fail(ErrorKind::ShapeMismatch, "solve: right-hand side length");
  Matrix aug(field_, rows_, cols_ + 1);
  aug.set_block(0, 0, *this);
  aug.set_column(cols_, b);
  Echelon e = aug.rref();
  if (!e.pivots.empty() && e.pivots.back() == cols_) return std::nullopt;
  Vector x = zero_vector(field_, cols_);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, cols_);
  return x;
}

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  }
  return out;
}

Vector to_dense(const Field& field, std::size_t size, const SparseVector& v) {
  Vector out = zero_vector(field, size);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::ShapeMismatch, "hstack row counts differ");
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

}  // namespace dgres
