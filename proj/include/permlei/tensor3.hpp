#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "permlei/matrix.hpp"
#include "permlei/rational.hpp"
#include "permlei/report.hpp"

namespace permlei {

// Sparse 3-tensor, canonical form: entries sorted lexicographically on
// (i,j,k), no zeros, no duplicates. Structural equality is therefore
// coefficient equality. Houses the structure constants c_ij^k of every
// bilinear operation (entry (i,j,k) = coefficient of e_k in e_i * e_j)
// and coproducts d_i^jk (entry (i,j,k) = coefficient of e_j (x) e_k in
// delta(e_i)).
class Tensor3 {
 public:
  struct Entry {
    std::size_t i, j, k;
    Rational c;
  };

  Tensor3() = default;
  Tensor3(std::size_t n1, std::size_t n2, std::size_t n3)
      : n1_(n1), n2_(n2), n3_(n3) {}

  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  std::size_t n3() const { return n3_; }

  // Accumulates; the canonical form is restored on the spot.
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
  Rational get(std::size_t i, std::size_t j, std::size_t k) const;
  const std::vector<Entry>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }

  Tensor3 operator+(const Tensor3& o) const;
  Tensor3 operator-(const Tensor3& o) const;
  friend Tensor3 operator*(const Rational& c, const Tensor3& t);
  bool operator==(const Tensor3& o) const {
    return n1_ == o.n1_ && n2_ == o.n2_ && n3_ == o.n3_ && eq_entries(o);
  }
  bool operator!=(const Tensor3& o) const { return !(*this == o); }

  // c_ij^k viewed as a bilinear map: z_k = sum_ij x_i y_j c_ij^k.
  Vec apply(const Vec& x, const Vec& y) const;
  // Operator matrices of the product: L(v)w = v*w, R(v)w = w*v.
  Matrix left_operator(const Vec& v) const;
  Matrix right_operator(const Vec& v) const;

 private:
  bool eq_entries(const Tensor3& o) const;
  std::size_t n1_ = 0, n2_ = 0, n3_ = 0;
  std::vector<Entry> e_;  // sorted, zero-free
};

}  // namespace permlei
