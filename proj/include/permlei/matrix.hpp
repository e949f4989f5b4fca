#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "permlei/rational.hpp"
#include "permlei/report.hpp"

namespace permlei {

using Vec = std::vector<Rational>;

// Dense row-major rational matrix. Dimensions in this library are tiny
// (<= ~12), so dense is the simple, auditable choice.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  friend Matrix operator*(const Rational& c, const Matrix& m);
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

// tau on coefficient matrices of A (x) A: the transpose. Square only.
Matrix flip(const Matrix& m);

// (f (x) g)(u (x) v) = f(u) (x) g(v), row-major flattening with the left
// factor outer: row index i*rows(b)+p.
Matrix kron(const Matrix& a, const Matrix& b);

// Exact Gauss-Jordan. Throws SingularMatrixError carrying the rank found.
Matrix invert(const Matrix& m);
// Non-throwing variant; rank_out is always filled.
std::optional<Matrix> try_invert(const Matrix& m, std::size_t* rank_out = nullptr);
std::size_t rank(const Matrix& m);

// Vector helpers shared by the checkers.
Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
void axpy(Vec& y, const Rational& c, const Vec& x);
Vec row_major_flatten(const Matrix& m);
Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols);

}  // namespace permlei
