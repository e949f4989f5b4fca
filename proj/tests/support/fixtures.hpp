#pragma once

// The worked examples from the fixture catalog, 0-based indices.

#include <vector>

#include "permlei/bialgebra.hpp"
#include "permlei/constructions.hpp"
#include "permlei/yang_baxter.hpp"

namespace fixtures {

using namespace permlei;

inline Tensor3 tensor(std::size_t n,
                      std::initializer_list<std::tuple<int, int, int, long>> entries) {
  Tensor3 t(n, n, n);
  for (const auto& [i, j, k, c] : entries)
    t.add(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
          static_cast<std::size_t>(k), Rational(c));
  return t;
}

// e2 o e2 = [e2, e2] = e1 on a 2-dim space.
inline Algebra ex22() {
  Algebra a(2);
  a.set_op("perm", tensor(2, {{1, 1, 0, 1}}));
  a.set_op("bracket", tensor(2, {{1, 1, 0, 1}}));
  a.set_basis_names({"e1", "e2"});
  return a;
}

// Its permutative part alone.
inline Algebra perm2() {
  Algebra a(2);
  a.set_op("perm", tensor(2, {{1, 1, 0, 1}}));
  a.set_basis_names({"e1", "e2"});
  return a;
}

// Noncommutative permutative algebra with composable products:
// e1 o e1 = e1, e1 o e2 = e2.
inline Algebra perm2nc() {
  Algebra a(2);
  a.set_op("perm", tensor(2, {{0, 0, 0, 1}, {0, 1, 1, 1}}));
  return a;
}

inline Algebra perm2nc_dpp() {
  Algebra a = perm2nc();
  a.set_op("bracket", Tensor3(2, 2, 2));
  return a;
}

// 1-dim idempotent permutative algebra e * e = e.
inline Algebra perm1_idem() {
  Algebra a(1);
  a.set_op("perm", tensor(1, {{0, 0, 0, 1}}));
  return a;
}

// 3-dim Poisson algebra: e1 . e2 = e3, {e1, e2} = 2 e3.
inline Algebra ex212() {
  Algebra a(3);
  a.set_op("assoc", tensor(3, {{0, 1, 2, 1}, {1, 0, 2, 1}}));
  a.set_op("lie", tensor(3, {{0, 1, 2, 2}, {1, 0, 2, -2}}));
  a.set_basis_names({"e1", "e2", "e3"});
  return a;
}

// P(e1) = e1, P(e2) = P(e3) = 0.
inline Matrix ex212_avg() {
  Matrix p(3, 3);
  p.at(0, 0) = 1;
  return p;
}

// The averaging-induced dpp: e1 o e2 = e3, [e1, e2] = 2 e3.
inline Algebra ex212_induced() {
  Algebra a(3);
  a.set_op("perm", tensor(3, {{0, 1, 2, 1}}));
  a.set_op("bracket", tensor(3, {{0, 1, 2, 2}}));
  a.set_basis_names({"e1", "e2", "e3"});
  return a;
}

// 1-dim Poisson: e . e = e, zero bracket.
inline Algebra pois1() {
  Algebra a(1);
  a.set_op("assoc", tensor(1, {{0, 0, 0, 1}}));
  a.set_op("lie", Tensor3(1, 1, 1));
  return a;
}

// The 6-dim double of ex212 through (-L.*, ad*); basis
// (e1,e2,e3,e1*,e2*,e3*).
inline Algebra ex216() {
  Algebra a(6);
  a.set_op("perm", tensor(6, {{0, 1, 2, 1}, {1, 0, 2, 1}, {0, 5, 4, 1}, {1, 5, 3, 1}}));
  a.set_op("bracket",
           tensor(6, {{0, 1, 2, 2}, {1, 0, 2, -2}, {0, 5, 4, -2}, {1, 5, 3, 2}}));
  a.set_basis_names({"e1", "e2", "e3", "e1*", "e2*", "e3*"});
  return a;
}

// The 4-dim coregular double of ex22; basis (e1,e2,e1*,e2*).
inline Algebra double4() {
  Algebra a(4);
  a.set_op("perm", tensor(4, {{1, 1, 0, 1}, {1, 2, 3, 1}}));
  a.set_op("bracket", tensor(4, {{1, 1, 0, 1}, {1, 2, 3, -1}, {2, 1, 3, 2}}));
  a.set_basis_names({"e1", "e2", "e1*", "e2*"});
  return a;
}

// The Rota-Baxter operator of the closing pipeline: P(e1) = e1/2,
// P(e2) = e2 on ex22.
inline Matrix ex331_rb() {
  Matrix p(2, 2);
  p.at(0, 0) = Rational(1, 2);
  p.at(1, 1) = 1;
  return p;
}

// Its pre-dual pre-Poisson algebra: all four products e2 * e2 = e1.
inline Algebra ex331_predpp() {
  Algebra a(2);
  for (const char* op : {"rtri", "ltri", "succ", "prec"})
    a.set_op(op, tensor(2, {{1, 1, 0, 1}}));
  a.set_basis_names({"e1", "e2"});
  return a;
}

// The closing example: A-hat on (e1,e2,e1*,e2*) with
// e2 o e2 = [e2,e2] = 2e1, e2 o e1* = e2*, [e2,e1*] = -e2*, [e1*,e2] = 2e2*.
inline Algebra final_ahat() {
  Algebra a(4);
  a.set_op("perm", tensor(4, {{1, 1, 0, 2}, {1, 2, 3, 1}}));
  a.set_op("bracket", tensor(4, {{1, 1, 0, 2}, {1, 2, 3, -1}, {2, 1, 3, 2}}));
  a.set_basis_names({"e1", "e2", "e1*", "e2*"});
  return a;
}

// r = sum_i (e_i (x) e_i* + e_i* (x) e_i) on the 4-dim space.
inline TensorElement final_r() {
  Matrix r(4, 4);
  r.at(0, 2) = 1;
  r.at(2, 0) = 1;
  r.at(1, 3) = 1;
  r.at(3, 1) = 1;
  return r;
}

// The closing example's coproduct table.
inline Coproduct final_delta_perm() {
  return Coproduct{tensor(4, {{1, 3, 0, 1}, {2, 3, 3, 2}})};
}
inline Coproduct final_delta_br() {
  return Coproduct{tensor(4, {{1, 0, 3, 2}, {1, 3, 0, -1}, {2, 3, 3, 2}})};
}

// Derived by the catalog search (dim 3, <= 3 entries, constants in
// {-2..2}): truncated polynomials span(t, s, ts) with t*s = s*t = ts and
// the Euler derivations.
inline Algebra perm3_ts() {
  Algebra a(3);
  a.set_op("perm", tensor(3, {{0, 1, 2, 1}, {1, 0, 2, 1}}));
  a.set_basis_names({"t", "s", "ts"});
  return a;
}

inline Matrix perm3_d1() {
  Matrix d(3, 3);
  d.at(0, 0) = 1;
  d.at(2, 2) = 1;
  return d;
}

inline Matrix perm3_d2() {
  Matrix d(3, 3);
  d.at(1, 1) = 1;
  d.at(2, 2) = 1;
  return d;
}

// 2-dim pre-Poisson algebra: Zinbiel e1 (.) e1 = e2, zero pre-Lie.
inline Algebra prepois2() {
  Algebra a(2);
  a.set_op("prelie", Tensor3(2, 2, 2));
  a.set_op("zinbiel", tensor(2, {{0, 0, 1, 1}}));
  return a;
}

inline Algebra zero_dpp(std::size_t n) {
  Algebra a(n);
  a.set_op("perm", Tensor3(n, n, n));
  a.set_op("bracket", Tensor3(n, n, n));
  return a;
}

inline Algebra zero_poisson(std::size_t n) {
  Algebra a(n);
  a.set_op("assoc", Tensor3(n, n, n));
  a.set_op("lie", Tensor3(n, n, n));
  return a;
}

inline Algebra zero_predpp(std::size_t n) {
  Algebra a(n);
  for (const char* op : {"rtri", "ltri", "succ", "prec"})
    a.set_op(op, Tensor3(n, n, n));
  return a;
}

inline Algebra zero_prepois(std::size_t n) {
  Algebra a(n);
  a.set_op("prelie", Tensor3(n, n, n));
  a.set_op("zinbiel", Tensor3(n, n, n));
  return a;
}

// The order-1 diassociative deformation of perm2 whose limit is ex22.
inline DeformedDialgebra deformation_order1() {
  DeformedDialgebra d;
  d.base = perm2();
  d.order = 1;
  d.right.push_back(tensor(2, {{1, 1, 0, 1}}));
  d.left.push_back(Tensor3(2, 2, 2));
  return d;
}

// Catalog used by the closure and property suites.
inline std::vector<Algebra> dpp_catalog() {
  return {zero_dpp(2),          ex22(),          ex212_induced(),
          poisson_as_dpp(ex212()), poisson_as_dpp(pois1()),
          ex216(),              double4(),       final_ahat(),
          perm2nc_dpp()};
}

inline std::vector<Algebra> small_dpp_catalog() {
  return {zero_dpp(2), ex22(), ex212_induced(), poisson_as_dpp(ex212()),
          poisson_as_dpp(pois1()), perm2nc_dpp()};
}

inline std::vector<Algebra> perm_catalog() {
  return {perm2(), perm1_idem(), perm3_ts(), perm2nc()};
}

inline std::vector<Algebra> poisson_catalog() {
  return {ex212(), pois1(), zero_poisson(2)};
}

inline std::vector<Algebra> predpp_catalog() {
  return {ex331_predpp(), zero_predpp(2)};
}

inline std::vector<Algebra> prepois_catalog() {
  return {prepois2(), zero_prepois(2)};
}

}  // namespace fixtures
