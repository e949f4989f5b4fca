#pragma once

#include <utility>

#include "permlei/bialgebra.hpp"

namespace permlei {

// r = sum m_ij e_i (x) e_j in A (x) A, as its coefficient matrix. The
// induced map r~: A* -> A is the same data under dual bases.
using TensorElement = Matrix;

struct OOperatorData {
  Algebra alg;
  Representation rep;
  Matrix t;  // n x m, V -> A
};

// P(r) = r13 o r23 - r12 o r23 + r13 [bs] r12 and
// L(r) = [r13,r23] + [r12,r23] - r12 [sq] r13 as n x n x n tensors;
// r solves the PLYBE iff both vanish.
std::pair<Tensor3, Tensor3> plybe_residual(const Algebra& a,
                                           const TensorElement& r);

// delta_perm(x) = E(x) r with E(x) = R_bs(x) (x) id + id (x) R_perm(x);
// delta_br(x) = F(x) r with F(x) = L_sq(x) (x) id - id (x) R_br(x).
std::pair<Coproduct, Coproduct> coproducts_from_r(const Algebra& a,
                                                  const TensorElement& r);

// Coboundary bialgebra of a symmetric PLYBE solution; re-verified.
BialgebraData bialgebra_from_r(const Algebra& a, const TensorElement& r);

// T(u)*T(v) = T(l(Tu)v + r(Tv)u) for both products, on basis pairs of V.
VerificationReport check_o_operator(const OOperatorData& od);

// O-operator condition for the regular representation.
VerificationReport check_rota_baxter(const Algebra& a,
                                     const LinearOperator& p);

struct IffReport {
  VerificationReport lhs, rhs;
  bool agree() const { return lhs.passed() == rhs.passed(); }
  bool both_pass() const { return lhs.passed() && rhs.passed(); }
};

// PLYBE verdict vs O-operator verdict of r~ on the coregular
// representation, both computed independently.
IffReport r_is_solution_iff_o_operator(const Algebra& a,
                                       const TensorElement& r);

// a* o_r b* = -L_perm*(r~a*)b* - L_bs*(r~b*)a*,
// [a*,b*]_r = L_br*(r~a*)b* - L_sq*(r~b*)a*; r~ becomes a homomorphism.
Algebra dual_products_from_r(const Algebra& a, const TensorElement& r);

// B(x,y) = <r~^{-1}(x), y>: the inverse coefficient matrix.
BilinearForm induced_form(const Algebra& a, const TensorElement& r);

// B(x o y, z) = B(y, x o z) + B(x, y [bs] z) and
// B([x,y], z) = -B(y, [x,z]) + B(x, y [sq] z) on all basis triples.
VerificationReport check_closed_conditions(const Algebra& a,
                                           const BilinearForm& b);

// P_r = r~ . phi with <phi(x), y> = B(x,y); PLYBE verdict vs Rota-Baxter
// verdict of P_r, both computed.
std::pair<LinearOperator, IffReport> r_to_rota_baxter(const Algebra& a,
                                                      const BilinearForm& b,
                                                      const TensorElement& r);

// u|>v = l_perm(Tu)v, u<|v = r_perm(Tv)u, u>v = l_br(Tu)v, u<v = r_br(Tv)u
// on V; T becomes a homomorphism from the sub-adjacent algebra to A.
Algebra o_operator_to_predpp(const OOperatorData& od);

// Invertible square T: x|>y = T(l_perm(x)T^{-1}y) etc.; the sub-adjacent
// algebra of the result equals (A, o, [,]) exactly.
Algebra invertible_o_to_compatible_predpp(const OOperatorData& od);

struct CanonicalR {
  Algebra ahat;     // 2n-dim semidirect through the dualized action
  TensorElement r;  // sum_i (e_i (x) e_i* + e_i* (x) e_i)
};

// The canonical symmetric PLYBE solution attached to a pre-dual
// pre-Poisson algebra; residuals re-verified to vanish.
CanonicalR predpp_canonical_r(const Algebra& predpp);

}  // namespace permlei
