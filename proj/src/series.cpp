#include "permlei/series.hpp"

#include <algorithm>

namespace permlei {

bool TruncatedSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& q) { return q == 0; });
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  std::size_t n = std::min(order(), o.order());
  TruncatedSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  std::size_t n = std::min(order(), o.order());
  TruncatedSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  std::size_t n = std::min(order(), o.order());
  TruncatedSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n && j <= o.order(); ++j)
      if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

TruncatedSeries series_compose(const TruncatedSeries& f,
                               const TruncatedSeries& g) {
  if (g.coeff(0) != 0)
    throw ConfigError(
        "series composition needs a zero constant term in the inner series");
  std::size_t n = std::min(f.order(), g.order());
  // Horner over truncated polynomials: f(g) = c_0 + g*(c_1 + g*(c_2 + ...)).
  TruncatedSeries acc(n);
  for (std::size_t idx = n + 1; idx-- > 0;) {
    acc = acc * g;
    acc.set_coeff(0, acc.coeff(0) + f.coeff(idx));
  }
  return acc;
}

}  // namespace permlei
