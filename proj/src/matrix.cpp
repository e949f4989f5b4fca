#include "permlei/matrix.hpp"

#include <algorithm>

namespace permlei {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Rational& q) { return q == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix addition shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix subtraction shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vec r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

Matrix operator*(const Rational& c, const Matrix& m) {
  Matrix r(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = c * m.e_[i];
  return r;
}

Matrix flip(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("flip needs a square matrix");
  return m.transpose();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return r;
}

std::optional<Matrix> try_invert(const Matrix& m, std::size_t* rank_out) {
  if (!m.is_square()) throw DimensionError("invert needs a square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t i = r; i < n; ++i)
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a.at(r, j), a.at(pivot, j));
      std::swap(inv.at(r, j), inv.at(pivot, j));
    }
    Rational p = a.at(r, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(r, j) /= p;
      inv.at(r, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a.at(i, col) == 0) continue;
      Rational f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(r, j);
        inv.at(i, j) -= f * inv.at(r, j);
      }
    }
    ++r;
  }
  if (rank_out) *rank_out = r;
  if (r < n) return std::nullopt;
  return inv;
}

Matrix invert(const Matrix& m) {
  std::size_t r = 0;
  auto inv = try_invert(m, &r);
  if (!inv)
    throw SingularMatrixError(
        r, "not invertible (rank " + std::to_string(r) + " of " +
               std::to_string(m.rows()) + ")");
  return *inv;
}

std::size_t rank(const Matrix& m) {
  // Row-reduce a copy; works for rectangular shapes too.
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(pivot, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a.at(i, col) == 0) continue;
      Rational f = a.at(i, col) / a.at(r, col);
      for (std::size_t j = col; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& q) { return q == 0; });
}

void axpy(Vec& y, const Rational& c, const Vec& x) {
  if (y.size() != x.size()) throw DimensionError("axpy size mismatch");
  if (c == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

Vec row_major_flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionError("unflatten size mismatch");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
  return m;
}

}  // namespace permlei
