#pragma once

#include <vector>

#include "permlei/algebra.hpp"
#include "permlei/matrix.hpp"

namespace permlei {

// Operators (averaging operators, derivations, Rota-Baxter maps) are
// plain square matrices over the carrier.
using LinearOperator = Matrix;

// (V; mu, rho): a representation of a Poisson algebra, one m x m matrix
// per basis vector for each of the two actions.
struct PoissonRepresentation {
  std::size_t dimV = 0;
  std::vector<Matrix> mu, rho;
};

// A polynomial diassociative deformation of a permutative algebra: the
// degree-0 layers are fixed by x |>0 y := x o y =: y <|0 x, the layers
// 1..order are free, everything above is zero.
struct DeformedDialgebra {
  Algebra base;  // must carry "perm"
  std::size_t order = 0;
  std::vector<Tensor3> right;  // |>_1 .. |>_order
  std::vector<Tensor3> left;   // <|_1 .. <|_order
};

// Tensor product of two dual pre-Poisson algebras (flattened index
// i*dim(b)+j).
Algebra tensor_dpp(const Algebra& a, const Algebra& b);

// Tensor product of a permutative ("perm") and a Poisson ("assoc"/"lie")
// algebra.
Algebra tensor_perm_poisson(const Algebra& a, const Algebra& b);

// P(x)*P(y) = P(P(x)*y) for both Poisson products, on all basis pairs.
VerificationReport check_averaging(const Algebra& poisson,
                                   const LinearOperator& p);

// x o y = P(x).y, [x,y] = {P(x),y}.
Algebra average_induced(const Algebra& poisson, const LinearOperator& p);

// Leibniz rule D(x o y) = D(x) o y + x o D(y) on all basis pairs.
VerificationReport check_derivation(const Algebra& perm,
                                    const LinearOperator& d);

// [x,y] = D1(x) o D2(y) - D2(x) o D1(y) for commuting derivations.
Algebra derivation_induced(const Algebra& perm, const LinearOperator& d1,
                           const LinearOperator& d2);

VerificationReport check_poisson_representation(
    const Algebra& poisson, const PoissonRepresentation& rep);

// (x+u) o (y+v) = x.y + mu(x)v, [x+u,y+v] = {x,y} + rho(x)v.
Algebra poisson_rep_semidirect(const Algebra& poisson,
                               const PoissonRepresentation& rep);

struct CompatiblePreLie {
  Algebra prelie_pair;  // ops "prelie", "prelie2"
  Algebra lie_pair;     // ops "lie", "lie2" (the commutator brackets)
};

// (x(x)a) <>1 (y(x)b) = (x o y)(x)(a <> b),
// (x(x)a) <>2 (y(x)b) = [x,y](x)(a (.) b); a compatible pre-Lie pair.
CompatiblePreLie compatible_prelie_tensor(const Algebra& dpp,
                                          const Algebra& prepoisson);

// All five dialgebra equation families for every total degree 0..2*order.
VerificationReport check_deformation(const DeformedDialgebra& d);

// [x,y] = x |>1 y - y <|1 x over the base permutative product.
Algebra semiclassical_limit(const DeformedDialgebra& d);

}  // namespace permlei
