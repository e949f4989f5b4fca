#pragma once

#include <cstddef>
#include <vector>

#include "permlei/rational.hpp"
#include "permlei/report.hpp"

namespace permlei {

// Formal power series truncated at a fixed order: exactly order+1
// rational coefficients c_0..c_N.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order)
      : c_(order + 1, Rational(0)) {}

  std::size_t order() const { return c_.size() - 1; }
  const Rational& coeff(std::size_t n) const { return c_.at(n); }
  void set_coeff(std::size_t n, const Rational& v) { c_.at(n) = v; }

  bool is_zero() const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  // Product truncated at min(orders).
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

 private:
  std::vector<Rational> c_;
};

// f(g(t)) through the shared truncation order; g must have zero constant
// term, else ConfigError.
TruncatedSeries series_compose(const TruncatedSeries& f,
                               const TruncatedSeries& g);

}  // namespace permlei
