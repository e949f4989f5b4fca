#pragma once

#include <utility>

#include "permlei/algebra.hpp"
#include "permlei/constructions.hpp"
#include "permlei/representation.hpp"

namespace permlei {

// B(x,y) = x^T M y in coordinates.
using BilinearForm = Matrix;

// A linear map A -> A (x) A as a 3-tensor d_i^jk:
// delta(e_i) = sum_jk d_i^jk e_j (x) e_k.
struct Coproduct {
  Tensor3 t;  // extents (n, n, n)

  std::size_t dim() const { return t.n1(); }
  // delta(v) as an n x n coefficient matrix.
  Matrix apply(const Vec& v) const;
  Matrix apply_basis(std::size_t i) const;
  bool operator==(const Coproduct& o) const { return t == o.t; }
};

// Two dual pre-Poisson algebras plus eight families of action matrices:
// rep1 = (l_perm1, r_perm1, l_br1, r_br1): A1 acting on A2 (dimV = dim A2),
// rep2 likewise with the roles swapped.
struct MatchedPairData {
  Algebra a1, a2;
  Representation rep1, rep2;
};

struct BialgebraData {
  Algebra alg;
  Coproduct delta_perm, delta_br;
};

struct FormReport {
  bool skew = false;
  bool nondegenerate = false;
  VerificationReport invariance;
  VerificationReport lemma;  // the two consequences of skew invariance;
                             // filled only when quadratic
  bool invariant() const { return invariance.passed(); }
  bool quadratic() const { return skew && nondegenerate && invariant(); }
};

// Invariance residuals B(x o y, z) - B(x, y o z - z o y) and
// B([x,y], z) - B(x, [y,z]+[z,y]) on all basis triples, plus the
// skew/nondegeneracy flags. When quadratic, also asserts
// B(x o y, z) = B(y, x o z) and B([x,y], z) = -B(y, [x,z]).
FormReport check_invariant_form(const Algebra& a, const BilinearForm& b);

// [[0, -I], [I, 0]] on A (+) A*: B(x+a*, y+b*) = <y,a*> - <x,b*>.
BilinearForm standard_form(std::size_t n);

enum class DoubleMode { poisson, dpp };

// The 2n-dim double carrying the standard form: Poisson semidirect with
// (-L.*, ad*) in poisson mode, the coregular double in dpp mode.
std::pair<Algebra, BilinearForm> quadratic_doubles(const Algebra& a,
                                                   DoubleMode mode);

// Product form B(x(x)a, y(x)b) = B_A(x,y) B_B(a,b) on the tensor of a
// quadratic perm algebra and a quadratic Poisson algebra.
std::pair<Algebra, BilinearForm> quadratic_tensor(const Algebra& perm,
                                                  const BilinearForm& ba,
                                                  const Algebra& poisson,
                                                  const BilinearForm& bb);

// derivation_induced plus the form, with both derivations skew w.r.t. b.
std::pair<Algebra, BilinearForm> skew_derivation_quadratic(
    const Algebra& perm, const LinearOperator& d1, const LinearOperator& d2,
    const BilinearForm& b);

// The five coassociativity/compatibility identities of a dual
// pre-Poisson coalgebra, residuals per basis vector.
VerificationReport check_coalgebra(const Coproduct& delta_perm,
                                   const Coproduct& delta_br);

// Transpose between the "two inputs one output" layout of a product
// tensor and the "one input two outputs" layout of a coproduct:
// <a* o b*, x> = <a* (x) b*, delta(x)>. Round-trips exactly.
Coproduct dualize(const Tensor3& product);
Tensor3 dualize(const Coproduct& delta);

// Convenience on whole structures.
std::pair<Coproduct, Coproduct> coproducts_of_dual(const Algebra& astar_ops);
Algebra dual_algebra_of(const Coproduct& delta_perm,
                        const Coproduct& delta_br);

// The twelve bialgebra compatibility conditions. Preconditions (alg is
// dpp, coproducts form a coalgebra) raise PreconditionError carrying the
// failing sub-report.
VerificationReport check_bialgebra(const BialgebraData& bd);

// All matched-pair equation families of Def. 3.1 on mixed basis tuples.
VerificationReport check_matched_pair(const MatchedPairData& mp);

// A1 |><| A2 with the eight-term products; always defined.
Algebra matched_pair_glue(const MatchedPairData& mp);

// The coregular-type matched-pair candidate of two n-dim dpp structures
// (A and a structure on A*).
MatchedPairData coregular_matched_pair(const Algebra& a,
                                       const Algebra& astar_ops);

struct ManinReport {
  VerificationReport subalgebras;  // A and A* closed in the candidate
  VerificationReport big_dpp;
  FormReport form;
  bool passed() const {
    return subalgebras.passed() && big_dpp.passed() && form.quadratic();
  }
};

// Standard Manin-triple check on the bow-tie candidate built from the
// coregular-type actions.
ManinReport check_manin_triple(const Algebra& a, const Algebra& astar_ops);

struct TripleEquivalenceReport {
  ManinReport manin;
  VerificationReport matched_pair;
  VerificationReport bialgebra;
  bool manin_passed = false, matched_passed = false, bialgebra_passed = false;
  bool verdicts_agree() const {
    return manin_passed == matched_passed && matched_passed == bialgebra_passed;
  }
  bool all_passed() const {
    return manin_passed && matched_passed && bialgebra_passed;
  }
};

// Computes the three verdicts of the equivalence theorem independently
// and asserts they coincide.
TripleEquivalenceReport triple_equivalence(const Algebra& a,
                                           const Algebra& astar_ops);

}  // namespace permlei
