#pragma once

#include <utility>
#include <vector>

#include "permlei/algebra.hpp"
#include "permlei/matrix.hpp"

namespace permlei {

// A representation of a dual pre-Poisson algebra: four families of m x m
// matrices, one per basis vector of the acting algebra, realizing
// l_perm, r_perm, l_br, r_br.
struct Representation {
  std::size_t dimV = 0;
  std::vector<Matrix> l_perm, r_perm, l_br, r_br;

  // Family evaluated at an algebra element given by coefficients.
  static Matrix at(const std::vector<Matrix>& family, const Vec& v);
  bool operator==(const Representation& o) const {
    return dimV == o.dimV && l_perm == o.l_perm && r_perm == o.r_perm &&
           l_br == o.l_br && r_br == o.r_br;
  }
};

// The sign convention <f*(x)v*, u> = -<v*, f(x)u>: under dual bases the
// starred map is -f(x)^T. Every dual construction routes through this.
Matrix star(const Matrix& f);

// The thirteen operator identities of a dual pre-Poisson representation,
// checked on all basis pairs of A.
VerificationReport check_representation(const Algebra& a,
                                        const Representation& rep);

Representation regular_rep(const Algebra& a);

// (V*; -l_perm*, -l_perm*+r_perm*, l_br*, -l_br*-r_br*).
Representation dual_rep(const Algebra& a, const Representation& rep);

// dual_rep(regular_rep): the coregular representation on A*.
Representation coregular_rep(const Algebra& a);

// (n+m)-dim algebra on A (+) V, A-indices first. semidirect() checks the
// representation first; the _raw variant glues unconditionally (used to
// exercise the "iff" direction of the gluing proposition).
Algebra semidirect(const Algebra& a, const Representation& rep);
Algebra semidirect_raw(const Algebra& a, const Representation& rep);

// semidirect(a, dual_rep(regular_rep(a))), basis order (A, A*).
Algebra coregular_double(const Algebra& a);

// phi f1(x) = f2(x) phi for all four families and all basis x.
VerificationReport check_equivalence(const Algebra& a,
                                     const Representation& rep1,
                                     const Representation& rep2,
                                     const Matrix& phi);

// Sub-adjacent dual pre-Poisson algebra of a pre-dual pre-Poisson
// algebra: x o y = x|>y + x<|y, [x,y] = x>y + x<y, together with the
// representation (L_|>, R_<|, L_>, R_<) of it on A.
std::pair<Algebra, Representation> predpp_sub_adjacent(const Algebra& predpp);

// Under x<|y = y|>x, x<y = -y>x: the associated pre-Poisson algebra
// (diamond = succ, odot = rtri) and its Poisson algebra.
std::pair<Algebra, Algebra> predpp_associated_pre_poisson(
    const Algebra& predpp);

}  // namespace permlei
