#include "permlei/operad_series.hpp"

#include <vector>

namespace permlei {

TruncatedSeries series_prepois(std::size_t order) {
  if (order < 1) throw ConfigError("series_prepois needs order >= 1");
  // c_n = Catalan(n) via Cat(k+1) = sum_{i<=k} Cat(i) Cat(k-i), Cat(0)=1.
  std::vector<Int> cat(order + 1);
  cat[0] = 1;
  for (std::size_t k = 0; k + 1 <= order; ++k) {
    Int acc = 0;
    for (std::size_t i = 0; i <= k; ++i) acc += cat[i] * cat[k - i];
    cat[k + 1] = acc;
  }
  TruncatedSeries f(order);
  for (std::size_t nn = 1; nn <= order; ++nn)
    f.set_coeff(nn, Rational(cat[nn]));
  return f;
}

TruncatedSeries series_dualprepois(std::size_t order) {
  if (order < 1) throw ConfigError("series_dualprepois needs order >= 1");
  TruncatedSeries f(order);
  for (std::size_t nn = 1; nn <= order; ++nn)
    f.set_coeff(nn, Rational(static_cast<long>(nn)));
  return f;
}

TruncatedSeries gk_check(std::size_t order) {
  if (order < 2) throw ConfigError("gk_check needs order >= 2");
  TruncatedSeries fd = series_dualprepois(order);
  TruncatedSeries fp = series_prepois(order);
  TruncatedSeries inner(order);  // -f_prePois(-t)
  for (std::size_t nn = 0; nn <= order; ++nn) {
    Rational sign = (nn % 2 == 0) ? Rational(-1) : Rational(1);
    inner.set_coeff(nn, sign * fp.coeff(nn));
  }
  TruncatedSeries residual = series_compose(fd, inner);
  residual.set_coeff(1, residual.coeff(1) - 1);
  return residual;
}

Int operad_dim(std::size_t n) {
  if (n < 1) throw ConfigError("operad_dim needs n >= 1");
  Int fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<long>(i);
  Int dim = fact * static_cast<long>(n);
  // Cross-check against n! * [t^n] t/(1-t)^2.
  TruncatedSeries f = series_dualprepois(n);
  if (Rational(dim) != Rational(fact) * f.coeff(n))
    throw std::logic_error("operad dimension cross-check failed");
  return dim;
}

}  // namespace permlei
