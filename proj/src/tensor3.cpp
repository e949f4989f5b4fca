#include "permlei/tensor3.hpp"

#include <algorithm>
#include <tuple>

namespace permlei {

namespace {
auto key(const Tensor3::Entry& e) { return std::make_tuple(e.i, e.j, e.k); }
}  // namespace

void Tensor3::add(std::size_t i, std::size_t j, std::size_t k,
                  const Rational& c) {
  if (i >= n1_ || j >= n2_ || k >= n3_)
    throw DimensionError("tensor entry out of range");
  if (c == 0) return;
  auto t = std::make_tuple(i, j, k);
  auto it = std::lower_bound(
      e_.begin(), e_.end(), t,
      [](const Entry& e, const std::tuple<std::size_t, std::size_t,
                                          std::size_t>& v) { return key(e) < v; });
  if (it != e_.end() && key(*it) == t) {
    it->c += c;
    if (it->c == 0) e_.erase(it);
  } else {
    e_.insert(it, Entry{i, j, k, c});
  }
}

Rational Tensor3::get(std::size_t i, std::size_t j, std::size_t k) const {
  auto t = std::make_tuple(i, j, k);
  auto it = std::lower_bound(
      e_.begin(), e_.end(), t,
      [](const Entry& e, const std::tuple<std::size_t, std::size_t,
                                          std::size_t>& v) { return key(e) < v; });
  if (it != e_.end() && key(*it) == t) return it->c;
  return Rational(0);
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
  if (n1_ != o.n1_ || n2_ != o.n2_ || n3_ != o.n3_)
    throw DimensionError("tensor addition extent mismatch");
  Tensor3 r = *this;
  for (const auto& e : o.e_) r.add(e.i, e.j, e.k, e.c);
  return r;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
  if (n1_ != o.n1_ || n2_ != o.n2_ || n3_ != o.n3_)
    throw DimensionError("tensor subtraction extent mismatch");
  Tensor3 r = *this;
  for (const auto& e : o.e_) r.add(e.i, e.j, e.k, -e.c);
  return r;
}

Tensor3 operator*(const Rational& c, const Tensor3& t) {
  Tensor3 r(t.n1_, t.n2_, t.n3_);
  if (c == 0) return r;
  for (const auto& e : t.e_) r.e_.push_back({e.i, e.j, e.k, c * e.c});
  return r;
}

bool Tensor3::eq_entries(const Tensor3& o) const {
  if (e_.size() != o.e_.size()) return false;
  for (std::size_t n = 0; n < e_.size(); ++n)
    if (key(e_[n]) != key(o.e_[n]) || e_[n].c != o.e_[n].c) return false;
  return true;
}

Vec Tensor3::apply(const Vec& x, const Vec& y) const {
  if (x.size() != n1_ || y.size() != n2_)
    throw DimensionError("tensor apply size mismatch");
  Vec z(n3_, Rational(0));
  for (const auto& e : e_) {
    if (x[e.i] == 0 || y[e.j] == 0) continue;
    z[e.k] += x[e.i] * y[e.j] * e.c;
  }
  return z;
}

Matrix Tensor3::left_operator(const Vec& v) const {
  // L(v): column j holds v * e_j.
  Matrix m(n3_, n2_);
  for (const auto& e : e_)
    if (v[e.i] != 0) m.at(e.k, e.j) += v[e.i] * e.c;
  return m;
}

Matrix Tensor3::right_operator(const Vec& v) const {
  // R(v): column i holds e_i * v.
  Matrix m(n3_, n1_);
  for (const auto& e : e_)
    if (v[e.j] != 0) m.at(e.k, e.i) += v[e.j] * e.c;
  return m;
}

}  // namespace permlei
