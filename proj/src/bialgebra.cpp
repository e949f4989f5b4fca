#include "permlei/bialgebra.hpp"

namespace permlei {

Matrix Coproduct::apply(const Vec& v) const {
  const std::size_t n = t.n1();
  if (v.size() != n) throw DimensionError("coproduct apply size mismatch");
  Matrix m(n, n);
  for (const auto& e : t.entries())
    if (v[e.i] != 0) m.at(e.j, e.k) += v[e.i] * e.c;
  return m;
}

Matrix Coproduct::apply_basis(std::size_t i) const {
  return apply(basis_vec(t.n1(), i));
}

namespace {

Rational form_eval(const Matrix& b, const Vec& x, const Vec& y) {
  Rational acc(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0 && b.at(i, j) != 0) acc += x[i] * b.at(i, j) * y[j];
  }
  return acc;
}

void push_scalar_witness(VerificationReport& report, const std::string& label,
                         int decl, std::size_t i, std::size_t j, std::size_t k,
                         const Rational& residual) {
  if (residual == 0) return;
  report.witnesses.push_back(Witness{label, decl, 3, {i, j, k}, {residual}});
}

}  // namespace

FormReport check_invariant_form(const Algebra& a, const BilinearForm& b) {
  require_structure(a, StructureKind::dual_pre_poisson,
                    "check_invariant_form algebra");
  const std::size_t n = a.dim();
  if (b.rows() != n || b.cols() != n)
    throw DimensionError("bilinear form shape mismatch");
  FormReport fr;
  fr.skew = (b + b.transpose()).is_zero();
  fr.nondegenerate = (rank(b) == n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ex = basis_vec(n, i), ey = basis_vec(n, j), ez = basis_vec(n, k);
        Vec xy = a.basis_product("perm", i, j);
        Vec brxy = a.basis_product("bracket", i, j);
        // B(x o y, z) - B(x, y o z - z o y)
        Vec rhs1 = a.basis_product("perm", j, k);
        axpy(rhs1, Rational(-1), a.basis_product("perm", k, j));
        push_scalar_witness(fr.invariance, "perm_inv", 0, i, j, k,
                            form_eval(b, xy, ez) - form_eval(b, ex, rhs1));
        // B([x,y], z) - B(x, [y,z] + [z,y])
        Vec rhs2 = a.basis_product("bracket", j, k);
        axpy(rhs2, Rational(1), a.basis_product("bracket", k, j));
        push_scalar_witness(fr.invariance, "br_inv", 1, i, j, k,
                            form_eval(b, brxy, ez) - form_eval(b, ex, rhs2));
      }
  fr.invariance.sort_canonical();
  if (fr.quadratic()) {
    // Consequences of skew invariance: B(x o y, z) = B(y, x o z) and
    // B([x,y], z) = -B(y, [x,z]).
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vec ey = basis_vec(n, j), ez = basis_vec(n, k);
          push_scalar_witness(
              fr.lemma, "lemma_perm", 0, i, j, k,
              form_eval(b, a.basis_product("perm", i, j), ez) -
                  form_eval(b, ey, a.basis_product("perm", i, k)));
          push_scalar_witness(
              fr.lemma, "lemma_br", 1, i, j, k,
              form_eval(b, a.basis_product("bracket", i, j), ez) +
                  form_eval(b, ey, a.basis_product("bracket", i, k)));
        }
    fr.lemma.sort_canonical();
    if (!fr.lemma.passed())
      throw std::logic_error(
          "skew invariant form violated its derived identities");
  }
  return fr;
}

BilinearForm standard_form(std::size_t n) {
  Matrix b(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    b.at(i, n + i) = -1;
    b.at(n + i, i) = 1;
  }
  return b;
}

std::pair<Algebra, BilinearForm> quadratic_doubles(const Algebra& a,
                                                   DoubleMode mode) {
  const std::size_t n = a.dim();
  Algebra big;
  if (mode == DoubleMode::dpp) {
    big = coregular_double(a);
  } else {
    require_structure(a, StructureKind::poisson, "quadratic_doubles input");
    // (A*; -L.*, ad*): mu = -L_assoc*, rho = ad_lie* = -(L_lie)^T signed.
    PoissonRepresentation rep;
    rep.dimV = n;
    for (std::size_t i = 0; i < n; ++i) {
      rep.mu.push_back(-star(a.left_op("assoc", i)));
      rep.rho.push_back(star(a.left_op("lie", i)));
    }
    big = poisson_rep_semidirect(a, rep);
  }
  BilinearForm b = standard_form(n);
  FormReport fr = check_invariant_form(big, b);
  if (!fr.quadratic())
    throw std::logic_error("quadratic double violated its theorem");
  return {big, b};
}

namespace {

// Perm-factor precondition of the quadratic tensor: skew plus
// B(x*y, z) = B(x, y*z - z*y).
VerificationReport quadratic_perm_form_check(const Algebra& perm,
                                             const BilinearForm& b) {
  const std::size_t n = perm.dim();
  VerificationReport report;
  Matrix skew = b + b.transpose();
  if (!skew.is_zero())
    report.witnesses.push_back(
        Witness{"factor_perm_skew", 0, 1, {0, 0, 0}, row_major_flatten(skew)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ex = basis_vec(n, i), ez = basis_vec(n, k);
        Vec rhs = perm.basis_product("perm", j, k);
        axpy(rhs, Rational(-1), perm.basis_product("perm", k, j));
        push_scalar_witness(report, "factor_perm_inv", 1, i, j, k,
                            form_eval(b, perm.basis_product("perm", i, j), ez) -
                                form_eval(b, ex, rhs));
      }
  report.sort_canonical();
  return report;
}

// Poisson-factor precondition: symmetric, B(x.y,z) = B(x,y.z),
// B({x,y},z) = B(x,{y,z}).
VerificationReport quadratic_poisson_form_check(const Algebra& poisson,
                                                const BilinearForm& b) {
  const std::size_t n = poisson.dim();
  VerificationReport report;
  Matrix sym = b - b.transpose();
  if (!sym.is_zero())
    report.witnesses.push_back(
        Witness{"factor_pois_sym", 0, 1, {0, 0, 0}, row_major_flatten(sym)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ex = basis_vec(n, i), ez = basis_vec(n, k);
        push_scalar_witness(
            report, "factor_pois_assoc_inv", 1, i, j, k,
            form_eval(b, poisson.basis_product("assoc", i, j), ez) -
                form_eval(b, ex, poisson.basis_product("assoc", j, k)));
        push_scalar_witness(
            report, "factor_pois_lie_inv", 2, i, j, k,
            form_eval(b, poisson.basis_product("lie", i, j), ez) -
                form_eval(b, ex, poisson.basis_product("lie", j, k)));
      }
  report.sort_canonical();
  return report;
}

}  // namespace

std::pair<Algebra, BilinearForm> quadratic_tensor(const Algebra& perm,
                                                  const BilinearForm& ba,
                                                  const Algebra& poisson,
                                                  const BilinearForm& bb) {
  require_structure(perm, StructureKind::permutative,
                    "quadratic_tensor permutative factor");
  require_structure(poisson, StructureKind::poisson,
                    "quadratic_tensor Poisson factor");
  if (ba.rows() != perm.dim() || ba.cols() != perm.dim() ||
      bb.rows() != poisson.dim() || bb.cols() != poisson.dim())
    throw DimensionError("quadratic_tensor form shape mismatch");
  VerificationReport fa = quadratic_perm_form_check(perm, ba);
  if (!fa.passed())
    throw PreconditionError("permutative factor form is not invariant",
                            std::move(fa));
  VerificationReport fb = quadratic_poisson_form_check(poisson, bb);
  if (!fb.passed())
    throw PreconditionError("Poisson factor form is not invariant",
                            std::move(fb));
  Algebra out = tensor_perm_poisson(perm, poisson);
  BilinearForm b = kron(ba, bb);
  FormReport fr = check_invariant_form(out, b);
  if (!fr.skew || !fr.invariant())
    throw std::logic_error("quadratic tensor form violated its theorem");
  return {out, b};
}

std::pair<Algebra, BilinearForm> skew_derivation_quadratic(
    const Algebra& perm, const LinearOperator& d1, const LinearOperator& d2,
    const BilinearForm& b) {
  VerificationReport fa = quadratic_perm_form_check(perm, b);
  if (!fa.passed() || rank(b) != perm.dim()) {
    if (fa.passed())
      fa.witnesses.push_back(Witness{"factor_perm_nondegenerate",
                                     2,
                                     1,
                                     {rank(b), 0, 0},
                                     {Rational(0)}});
    throw PreconditionError("form is not quadratic on the permutative part",
                            std::move(fa));
  }
  VerificationReport skewness;
  int which = 0;
  for (const auto* d : {&d1, &d2}) {
    // B(D(x), y) + B(x, D(y)) = 0  <=>  D^T B + B D = 0
    Matrix residual = d->transpose() * b + b * (*d);
    if (!residual.is_zero())
      skewness.witnesses.push_back(
          Witness{which == 0 ? "skew_d1" : "skew_d2",
                  which,
                  1,
                  {static_cast<std::size_t>(which), 0, 0},
                  row_major_flatten(residual)});
    ++which;
  }
  if (!skewness.passed())
    throw PreconditionError("derivations are not skew w.r.t. the form",
                            std::move(skewness));
  Algebra out = derivation_induced(perm, d1, d2);
  FormReport fr = check_invariant_form(out, b);
  if (!fr.quadratic())
    throw std::logic_error("skew derivation quadratic violated its theorem");
  return {out, b};
}

// ---------------------------------------------------------------------------
// Coalgebras.

namespace {

// Element of A (x) A (x) A as a dense cube, index ((a*n)+b)*n+c.
struct Cube {
  std::size_t n = 0;
  Vec v;
  explicit Cube(std::size_t n_) : n(n_), v(n_ * n_ * n_, Rational(0)) {}
  Rational& at(std::size_t a, std::size_t b, std::size_t c) {
    return v[(a * n + b) * n + c];
  }
};

// (id (x) inner) outer (e_i)
Cube comp_second(const Coproduct& outer, const Coproduct& inner,
                 std::size_t i) {
  const std::size_t n = outer.dim();
  Cube cube(n);
  for (const auto& e : outer.t.entries()) {
    if (e.i != i) continue;
    for (const auto& f : inner.t.entries())
      if (f.i == e.k) cube.at(e.j, f.j, f.k) += e.c * f.c;
  }
  return cube;
}

// (inner (x) id) outer (e_i)
Cube comp_first(const Coproduct& outer, const Coproduct& inner,
                std::size_t i) {
  const std::size_t n = outer.dim();
  Cube cube(n);
  for (const auto& e : outer.t.entries()) {
    if (e.i != i) continue;
    for (const auto& f : inner.t.entries())
      if (f.i == e.j) cube.at(f.j, f.k, e.k) += e.c * f.c;
  }
  return cube;
}

Cube tau12(const Cube& c) {
  Cube out(c.n);
  for (std::size_t a = 0; a < c.n; ++a)
    for (std::size_t b = 0; b < c.n; ++b)
      for (std::size_t d = 0; d < c.n; ++d)
        out.at(a, b, d) = c.v[(b * c.n + a) * c.n + d];
  return out;
}

void cube_axpy(Cube& y, const Rational& coeff, const Cube& x) {
  axpy(y.v, coeff, x.v);
}

}  // namespace

VerificationReport check_coalgebra(const Coproduct& delta_perm,
                                   const Coproduct& delta_br) {
  const std::size_t n = delta_perm.dim();
  if (delta_br.dim() != n)
    throw DimensionError("coproduct dimension mismatch");
  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    auto push = [&](const char* label, int decl, Cube residual) {
      if (is_zero(residual.v)) return;
      report.witnesses.push_back(
          Witness{label, decl, 1, {i, 0, 0}, std::move(residual.v)});
    };
    // Permutative coassociativity chain.
    {
      Cube r = comp_second(delta_perm, delta_perm, i);
      cube_axpy(r, Rational(-1), comp_first(delta_perm, delta_perm, i));
      push("permco_a", 0, std::move(r));
    }
    {
      Cube lhs = comp_first(delta_perm, delta_perm, i);
      cube_axpy(lhs, Rational(-1),
                tau12(comp_first(delta_perm, delta_perm, i)));
      push("permco_b", 1, std::move(lhs));
    }
    // Leibniz coalgebra.
    {
      Cube r = comp_second(delta_br, delta_br, i);
      cube_axpy(r, Rational(-1), comp_first(delta_br, delta_br, i));
      cube_axpy(r, Rational(-1), tau12(comp_second(delta_br, delta_br, i)));
      push("leibnizco", 2, std::move(r));
    }
    // Compatibilities.
    {
      Cube r = comp_second(delta_br, delta_perm, i);
      cube_axpy(r, Rational(-1), comp_first(delta_perm, delta_br, i));
      cube_axpy(r, Rational(-1), tau12(comp_second(delta_perm, delta_br, i)));
      push("codpp1", 3, std::move(r));
    }
    {
      Cube r = comp_first(delta_br, delta_perm, i);
      cube_axpy(r, Rational(-1), comp_second(delta_perm, delta_br, i));
      cube_axpy(r, Rational(-1), tau12(comp_second(delta_perm, delta_br, i)));
      push("codpp2", 4, std::move(r));
    }
    {
      Cube r = comp_first(delta_perm, delta_br, i);
      cube_axpy(r, Rational(1), tau12(comp_first(delta_perm, delta_br, i)));
      push("codpp3", 5, std::move(r));
    }
  }
  report.sort_canonical();
  return report;
}

Coproduct dualize(const Tensor3& product) {
  Tensor3 t(product.n3(), product.n1(), product.n2());
  for (const auto& e : product.entries()) t.add(e.k, e.i, e.j, e.c);
  return Coproduct{t};
}

Tensor3 dualize(const Coproduct& delta) {
  Tensor3 t(delta.t.n2(), delta.t.n3(), delta.t.n1());
  for (const auto& e : delta.t.entries()) t.add(e.j, e.k, e.i, e.c);
  return t;
}

std::pair<Coproduct, Coproduct> coproducts_of_dual(const Algebra& astar_ops) {
  return {dualize(astar_ops.op("perm")), dualize(astar_ops.op("bracket"))};
}

Algebra dual_algebra_of(const Coproduct& delta_perm,
                        const Coproduct& delta_br) {
  Algebra a(delta_perm.dim());
  a.set_op("perm", dualize(delta_perm));
  a.set_op("bracket", dualize(delta_br));
  return a;
}

// ---------------------------------------------------------------------------
// Bialgebras.

VerificationReport check_bialgebra(const BialgebraData& bd) {
  require_structure(bd.alg, StructureKind::dual_pre_poisson,
                    "check_bialgebra algebra");
  if (bd.delta_perm.dim() != bd.alg.dim() || bd.delta_br.dim() != bd.alg.dim())
    throw DimensionError("bialgebra coproduct dimension mismatch");
  {
    VerificationReport co = check_coalgebra(bd.delta_perm, bd.delta_br);
    if (!co.passed())
      throw PreconditionError("coproducts do not form a coalgebra",
                              std::move(co));
  }
  const Algebra alg = derived_products(bd.alg);
  const std::size_t n = alg.dim();
  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix lp = alg.left_op("perm", i), rp_i = alg.right_op("perm", i);
    Matrix lb = alg.left_op("bracket", i), rb_i = alg.right_op("bracket", i);
    Matrix lbs = alg.left_op("blacksquare", i);
    Matrix lsq = alg.left_op("square", i);
    Matrix dp_i = bd.delta_perm.apply_basis(i);
    Matrix db_i = bd.delta_br.apply_basis(i);
    Matrix dbs_i = dp_i - dp_i.transpose();
    Matrix dsq_i = db_i + db_i.transpose();
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lp_j = alg.left_op("perm", j), rp_j = alg.right_op("perm", j);
      Matrix lb_j = alg.left_op("bracket", j),
             rb_j = alg.right_op("bracket", j);
      Matrix lbs_j = alg.left_op("blacksquare", j);
      Matrix rbs_j = alg.right_op("blacksquare", j);
      Matrix lsq_j = alg.left_op("square", j);
      Matrix dp_j = bd.delta_perm.apply_basis(j);
      Matrix db_j = bd.delta_br.apply_basis(j);
      Matrix dbs_j = dp_j - dp_j.transpose();
      Matrix dsq_j = db_j + db_j.transpose();
      Vec xy = alg.basis_product("perm", i, j);
      Vec brxy = alg.basis_product("bracket", i, j);
      Vec sqxy = alg.basis_product("square", i, j);
      Matrix dp_xy = bd.delta_perm.apply(xy);
      Matrix db_xy = bd.delta_br.apply(xy);
      Matrix dp_br = bd.delta_perm.apply(brxy);
      Matrix db_br = bd.delta_br.apply(brxy);
      Matrix dsq_xy = db_xy + db_xy.transpose();
      Matrix dp_sq = bd.delta_perm.apply(sqxy);

      auto push = [&](const char* label, int decl, Matrix residual) {
        if (residual.is_zero()) return;
        report.witnesses.push_back(
            Witness{label, decl, 2, {i, j, 0}, row_major_flatten(residual)});
      };
      // Permutative bialgebra.
      push("pbi1", 0, dp_xy - lbs * dp_j - dp_i * rp_j.transpose());
      push("pbi2", 1,
           dp_j.transpose() * rp_i.transpose() - rp_j * dp_i);
      push("pbi3", 2, dp_xy - lbs_j * dbs_i - dp_j * lp.transpose());
      // Leibniz bialgebra.
      push("leibbi1", 3,
           db_j.transpose() * rb_i.transpose() - rb_j * db_i);
      push("leibbi2", 4,
           db_br - (dsq_i * rb_j.transpose() - lsq_j * dsq_i) -
               (db_j * lb.transpose() + lb * db_j));
      // Mixed conditions; dppbi1 takes delta_square of the first argument.
      push("dppbi1", 5,
           dp_br - (dp_j * lb.transpose() + lb * dp_j) -
               (lbs_j * dsq_i - dsq_i * rp_j.transpose()));
      push("dppbi2", 6,
           db_xy - db_j * lp.transpose() - db_i * rp_j.transpose() +
               lsq * dp_j + lsq_j * dbs_i);
      push("dppbi3", 7,
           dp_j.transpose() * rb_i.transpose() + rp_j * db_i);
      push("dppbi4", 8,
           dp_br - (db_j * lp.transpose() - lp * db_j) -
               (dbs_i * rb_j.transpose() - lsq_j * dbs_i));
      push("dppbi5", 9,
           dsq_xy - dsq_j * lp.transpose() - dsq_i * lp_j.transpose() +
               lb * dbs_j + lb_j * dbs_i);
      push("dppbi6", 10,
           db_xy - lp * db_j + dbs_i * rb_j.transpose() -
               dp_j * lb.transpose() + rbs_j * dsq_i);
      push("dppbi7", 11,
           dp_sq - dp_j * lsq.transpose() - lsq * dp_j.transpose() +
               db_i * rbs_j.transpose() + rbs_j * db_i.transpose());
    }
  }
  report.sort_canonical();
  return report;
}

// ---------------------------------------------------------------------------
// Matched pairs.

namespace {

void validate_matched_shapes(const MatchedPairData& mp) {
  const std::size_t n1 = mp.a1.dim(), n2 = mp.a2.dim();
  if (mp.rep1.dimV != n2 || mp.rep2.dimV != n1)
    throw DimensionError("matched pair family dimensions inconsistent");
  for (const auto* fam :
       {&mp.rep1.l_perm, &mp.rep1.r_perm, &mp.rep1.l_br, &mp.rep1.r_br}) {
    if (fam->size() != n1)
      throw DimensionError("matched pair rep1 family size mismatch");
    for (const auto& m : *fam)
      if (m.rows() != n2 || m.cols() != n2)
        throw DimensionError("matched pair rep1 matrix shape mismatch");
  }
  for (const auto* fam :
       {&mp.rep2.l_perm, &mp.rep2.r_perm, &mp.rep2.l_br, &mp.rep2.r_br}) {
    if (fam->size() != n2)
      throw DimensionError("matched pair rep2 family size mismatch");
    for (const auto& m : *fam)
      if (m.rows() != n1 || m.cols() != n1)
        throw DimensionError("matched pair rep2 matrix shape mismatch");
  }
}

void merge_with_prefix(VerificationReport& into, VerificationReport from,
                       const std::string& prefix, int decl_base) {
  for (auto& w : from.witnesses) {
    w.identity = prefix + w.identity;
    w.decl_index += decl_base;
    into.witnesses.push_back(std::move(w));
  }
}

}  // namespace

VerificationReport check_matched_pair(const MatchedPairData& mp) {
  require_structure(mp.a1, StructureKind::dual_pre_poisson, "matched pair A1");
  require_structure(mp.a2, StructureKind::dual_pre_poisson, "matched pair A2");
  validate_matched_shapes(mp);
  const std::size_t n1 = mp.a1.dim(), n2 = mp.a2.dim();

  VerificationReport report;
  // Both sides must be dual pre-Poisson representations.
  merge_with_prefix(report, check_representation(mp.a1, mp.rep1), "rep1_", 0);
  merge_with_prefix(report, check_representation(mp.a2, mp.rep2), "rep2_", 16);
  int decl = 32;

  auto L1p = [&](std::size_t i) { return mp.rep1.l_perm[i]; };
  auto R1p = [&](std::size_t i) { return mp.rep1.r_perm[i]; };
  auto L1b = [&](std::size_t i) { return mp.rep1.l_br[i]; };
  auto R1b = [&](std::size_t i) { return mp.rep1.r_br[i]; };
  auto L2p = [&](std::size_t a) { return mp.rep2.l_perm[a]; };
  auto R2p = [&](std::size_t a) { return mp.rep2.r_perm[a]; };
  auto L2b = [&](std::size_t a) { return mp.rep2.l_br[a]; };
  auto R2b = [&](std::size_t a) { return mp.rep2.r_br[a]; };
  // Families applied at non-basis algebra arguments.
  auto L1p_at = [&](const Vec& v) { return Representation::at(mp.rep1.l_perm, v); };
  auto R1p_at = [&](const Vec& v) { return Representation::at(mp.rep1.r_perm, v); };
  auto L1b_at = [&](const Vec& v) { return Representation::at(mp.rep1.l_br, v); };
  auto R1b_at = [&](const Vec& v) { return Representation::at(mp.rep1.r_br, v); };
  auto L2p_at = [&](const Vec& v) { return Representation::at(mp.rep2.l_perm, v); };
  auto R2p_at = [&](const Vec& v) { return Representation::at(mp.rep2.r_perm, v); };
  auto L2b_at = [&](const Vec& v) { return Representation::at(mp.rep2.l_br, v); };
  auto R2b_at = [&](const Vec& v) { return Representation::at(mp.rep2.r_br, v); };
  auto p1 = [&](const Vec& u, const Vec& v) { return mp.a1.apply("perm", u, v); };
  auto b1 = [&](const Vec& u, const Vec& v) { return mp.a1.apply("bracket", u, v); };
  auto p2 = [&](const Vec& u, const Vec& v) { return mp.a2.apply("perm", u, v); };
  auto b2 = [&](const Vec& u, const Vec& v) { return mp.a2.apply("bracket", u, v); };

  auto push = [&](const char* label, int decl_idx, std::size_t i,
                  std::size_t j, std::size_t k, Vec residual) {
    if (is_zero(residual)) return;
    report.witnesses.push_back(
        Witness{label, decl_idx, 3, {i, j, k}, std::move(residual)});
  };

  // Permutative matched pair, variables (x; a, b) then (a; x, y).
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t a = 0; a < n2; ++a) {
      Vec ex = basis_vec(n1, x), ea = basis_vec(n2, a);
      for (std::size_t b = 0; b < n2; ++b) {
        Vec eb = basis_vec(n2, b);
        Vec ab = p2(ea, eb);
        {
          Vec r = L1p(x) * ab;
          axpy(r, Rational(-1), p2(L1p(x) * ea, eb));
          axpy(r, Rational(-1), L1p_at(R2p(a) * ex) * eb);
          push("mpp1", decl + 0, x, a, b, std::move(r));
        }
        {
          Vec r = R1p(x) * ab;
          axpy(r, Rational(-1), p2(ea, R1p(x) * eb));
          axpy(r, Rational(-1), R1p_at(L2p(b) * ex) * ea);
          push("mpp2", decl + 1, x, a, b, std::move(r));
        }
        {
          Vec r = p2(R1p(x) * ea, eb);
          axpy(r, Rational(1), L1p_at(L2p(a) * ex) * eb);
          axpy(r, Rational(-1), p2(ea, L1p(x) * eb));
          axpy(r, Rational(-1), R1p_at(R2p(b) * ex) * ea);
          push("mpp5", decl + 4, x, a, b, std::move(r));
        }
        {
          Vec r = p2(L1p(x) * ea, eb);
          axpy(r, Rational(1), L1p_at(R2p(a) * ex) * eb);
          axpy(r, Rational(-1), p2(R1p(x) * ea, eb));
          axpy(r, Rational(-1), L1p_at(L2p(a) * ex) * eb);
          push("mpp7", decl + 6, x, a, b, std::move(r));
        }
        {
          Vec r = R1p(x) * ab;
          axpy(r, Rational(-1), R1p(x) * p2(eb, ea));
          push("mpp9", decl + 8, x, a, b, std::move(r));
        }
      }
    }
  for (std::size_t a = 0; a < n2; ++a)
    for (std::size_t x = 0; x < n1; ++x) {
      Vec ea = basis_vec(n2, a), ex = basis_vec(n1, x);
      for (std::size_t y = 0; y < n1; ++y) {
        Vec ey = basis_vec(n1, y);
        Vec xy = p1(ex, ey);
        {
          Vec r = L2p(a) * xy;
          axpy(r, Rational(-1), p1(L2p(a) * ex, ey));
          axpy(r, Rational(-1), L2p_at(R1p(x) * ea) * ey);
          push("mpp3", decl + 2, a, x, y, std::move(r));
        }
        {
          Vec r = R2p(a) * xy;
          axpy(r, Rational(-1), p1(ex, R2p(a) * ey));
          axpy(r, Rational(-1), R2p_at(L1p(y) * ea) * ex);
          push("mpp4", decl + 3, a, x, y, std::move(r));
        }
        {
          Vec r = p1(R2p(a) * ex, ey);
          axpy(r, Rational(1), L2p_at(L1p(x) * ea) * ey);
          axpy(r, Rational(-1), p1(ex, L2p(a) * ey));
          axpy(r, Rational(-1), R2p_at(R1p(y) * ea) * ex);
          push("mpp6", decl + 5, a, x, y, std::move(r));
        }
        {
          Vec r = p1(L2p(a) * ex, ey);
          axpy(r, Rational(1), L2p_at(R1p(x) * ea) * ey);
          axpy(r, Rational(-1), p1(R2p(a) * ex, ey));
          axpy(r, Rational(-1), L2p_at(L1p(x) * ea) * ey);
          push("mpp8", decl + 7, a, x, y, std::move(r));
        }
        {
          Vec r = R2p(a) * xy;
          axpy(r, Rational(-1), R2p(a) * p1(ey, ex));
          push("mpp10", decl + 9, a, x, y, std::move(r));
        }
      }
    }
  decl += 10;

  // Leibniz matched pair.
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t a = 0; a < n2; ++a) {
      Vec ex = basis_vec(n1, x), ea = basis_vec(n2, a);
      for (std::size_t b = 0; b < n2; ++b) {
        Vec eb = basis_vec(n2, b);
        Vec ab = b2(ea, eb);
        {
          Vec r = R1b(x) * ab;
          axpy(r, Rational(-1), b2(ea, R1b(x) * eb));
          axpy(r, Rational(1), b2(eb, R1b(x) * ea));
          axpy(r, Rational(-1), R1b_at(L2b(b) * ex) * ea);
          axpy(r, Rational(1), R1b_at(L2b(a) * ex) * eb);
          push("mpl1", decl + 0, x, a, b, std::move(r));
        }
        {
          Vec r = L1b(x) * ab;
          axpy(r, Rational(-1), b2(L1b(x) * ea, eb));
          axpy(r, Rational(-1), b2(ea, L1b(x) * eb));
          axpy(r, Rational(-1), L1b_at(R2b(a) * ex) * eb);
          axpy(r, Rational(-1), R1b_at(R2b(b) * ex) * ea);
          push("mpl2", decl + 1, x, a, b, std::move(r));
        }
        {
          Vec r = b2(L1b(x) * ea, eb);
          axpy(r, Rational(1), L1b_at(R2b(a) * ex) * eb);
          axpy(r, Rational(1), b2(R1b(x) * ea, eb));
          axpy(r, Rational(1), L1b_at(L2b(a) * ex) * eb);
          push("mpl3", decl + 2, x, a, b, std::move(r));
        }
      }
    }
  for (std::size_t a = 0; a < n2; ++a)
    for (std::size_t x = 0; x < n1; ++x) {
      Vec ea = basis_vec(n2, a), ex = basis_vec(n1, x);
      for (std::size_t y = 0; y < n1; ++y) {
        Vec ey = basis_vec(n1, y);
        Vec xy = b1(ex, ey);
        {
          Vec r = R2b(a) * xy;
          axpy(r, Rational(-1), b1(ex, R2b(a) * ey));
          axpy(r, Rational(1), b1(ey, R2b(a) * ex));
          axpy(r, Rational(-1), R2b_at(L1b(y) * ea) * ex);
          axpy(r, Rational(1), R2b_at(L1b(x) * ea) * ey);
          push("mpl4", decl + 3, a, x, y, std::move(r));
        }
        {
          Vec r = L2b(a) * xy;
          axpy(r, Rational(-1), b1(L2b(a) * ex, ey));
          axpy(r, Rational(-1), b1(ex, L2b(a) * ey));
          axpy(r, Rational(-1), L2b_at(R1b(x) * ea) * ey);
          axpy(r, Rational(-1), R2b_at(R1b(y) * ea) * ex);
          push("mpl5", decl + 4, a, x, y, std::move(r));
        }
        {
          Vec r = b1(L2b(a) * ex, ey);
          axpy(r, Rational(1), L2b_at(R1b(x) * ea) * ey);
          axpy(r, Rational(1), b1(R2b(a) * ex, ey));
          axpy(r, Rational(1), L2b_at(L1b(x) * ea) * ey);
          push("mpl6", decl + 5, a, x, y, std::move(r));
        }
      }
    }
  decl += 6;

  // Mixed dual pre-Poisson conditions mpc1..mpc16.
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t y = 0; y < n1; ++y)
      for (std::size_t a = 0; a < n2; ++a) {
        Vec ex = basis_vec(n1, x), ey = basis_vec(n1, y),
            ea = basis_vec(n2, a);
        Vec brxy = b1(ex, ey), bryx = b1(ey, ex), xy = p1(ex, ey),
            yx = p1(ey, ex);
        {
          Vec r = b1(ex, L2p(a) * ey);
          axpy(r, Rational(1), R2b_at(R1p(y) * ea) * ex);
          axpy(r, Rational(-1), p1(R2b(a) * ex, ey));
          axpy(r, Rational(-1), L2p(a) * brxy);
          axpy(r, Rational(-1), L2p_at(L1b(x) * ea) * ey);
          push("mpc1", decl + 0, x, y, a, std::move(r));
        }
        {
          Vec r = b1(ex, R2p(a) * ey);
          axpy(r, Rational(1), R2b_at(L1p(y) * ea) * ex);
          axpy(r, Rational(-1), p1(ey, R2b(a) * ex));
          axpy(r, Rational(-1), R2p(a) * brxy);
          axpy(r, Rational(-1), R2p_at(L1b(x) * ea) * ey);
          push("mpc3", decl + 2, x, y, a, std::move(r));
        }
        {
          Vec r = L2b(a) * xy;
          axpy(r, Rational(-1), L2p_at(R1b(x) * ea) * ey);
          axpy(r, Rational(-1), R2p_at(R1b(y) * ea) * ex);
          axpy(r, Rational(-1), p1(L2b(a) * ex, ey));
          axpy(r, Rational(-1), p1(ex, L2b(a) * ey));
          push("mpc5", decl + 4, x, y, a, std::move(r));
        }
        {
          Vec r = b1(R2p(a) * ex, ey);
          axpy(r, Rational(1), L2b_at(L1p(x) * ea) * ey);
          axpy(r, Rational(-1), L2p(a) * brxy);
          axpy(r, Rational(-1), p1(ex, L2b(a) * ey));
          axpy(r, Rational(-1), R2p_at(R1b(y) * ea) * ex);
          push("mpc7", decl + 6, x, y, a, std::move(r));
        }
        {
          Vec r = b1(R2p(a) * ex, ey);
          axpy(r, Rational(1), L2b_at(L1p(x) * ea) * ey);
          axpy(r, Rational(-1), b1(L2p(a) * ex, ey));
          axpy(r, Rational(-1), L2b_at(R1p(x) * ea) * ey);
          push("mpc8", decl + 7, x, y, a, std::move(r));
        }
        {
          Vec r = R2b(a) * xy;
          axpy(r, Rational(-1), p1(ex, R2b(a) * ey));
          axpy(r, Rational(-1), R2p_at(L1b(y) * ea) * ex);
          axpy(r, Rational(-1), p1(ey, R2b(a) * ex));
          axpy(r, Rational(-1), R2p_at(L1b(x) * ea) * ey);
          push("mpc9", decl + 8, x, y, a, std::move(r));
        }
        {
          Vec r = L2p_at(L1b(x) * ea) * ey;
          axpy(r, Rational(1), p1(R2b(a) * ex, ey));
          axpy(r, Rational(1), p1(L2b(a) * ex, ey));
          axpy(r, Rational(1), L2p_at(R1b(x) * ea) * ey);
          push("mpc13", decl + 12, x, y, a, std::move(r));
        }
        {
          Vec r = R2p(a) * brxy;
          axpy(r, Rational(1), R2p(a) * bryx);
          push("mpc15", decl + 14, x, y, a, std::move(r));
        }
      }
  for (std::size_t a = 0; a < n2; ++a)
    for (std::size_t b = 0; b < n2; ++b)
      for (std::size_t x = 0; x < n1; ++x) {
        Vec ea = basis_vec(n2, a), eb = basis_vec(n2, b),
            ex = basis_vec(n1, x);
        Vec brab = b2(ea, eb), brba = b2(eb, ea), ab = p2(ea, eb);
        {
          Vec r = b2(ea, L1p(x) * eb);
          axpy(r, Rational(1), R1b_at(R2p(b) * ex) * ea);
          axpy(r, Rational(-1), p2(R1b(x) * ea, eb));
          axpy(r, Rational(-1), L1p(x) * brab);
          axpy(r, Rational(-1), L1p_at(L2b(a) * ex) * eb);
          push("mpc2", decl + 1, a, b, x, std::move(r));
        }
        {
          Vec r = b2(ea, R1p(x) * eb);
          axpy(r, Rational(1), R1b_at(L2p(b) * ex) * ea);
          axpy(r, Rational(-1), p2(eb, R1b(x) * ea));
          axpy(r, Rational(-1), R1p(x) * brab);
          axpy(r, Rational(-1), R1p_at(L2b(a) * ex) * eb);
          push("mpc4", decl + 3, a, b, x, std::move(r));
        }
        {
          Vec r = L1b(x) * ab;
          axpy(r, Rational(-1), L1p_at(R2b(a) * ex) * eb);
          axpy(r, Rational(-1), R1p_at(R2b(b) * ex) * ea);
          axpy(r, Rational(-1), p2(L1b(x) * ea, eb));
          axpy(r, Rational(-1), p2(ea, L1b(x) * eb));
          push("mpc6", decl + 5, a, b, x, std::move(r));
        }
        {
          Vec r = b2(L1p(x) * ea, eb);
          axpy(r, Rational(1), L1b_at(R2p(a) * ex) * eb);
          axpy(r, Rational(-1), L1p(x) * brab);
          axpy(r, Rational(-1), p2(ea, L1b(x) * eb));
          axpy(r, Rational(-1), R1p_at(R2b(b) * ex) * ea);
          push("mpc10", decl + 9, a, b, x, std::move(r));
        }
        {
          Vec r = b2(L1p(x) * ea, eb);
          axpy(r, Rational(1), L1b_at(R2p(a) * ex) * eb);
          axpy(r, Rational(-1), b2(R1p(x) * ea, eb));
          axpy(r, Rational(-1), L1b_at(L2p(a) * ex) * eb);
          push("mpc11", decl + 10, a, b, x, std::move(r));
        }
        {
          Vec r = R1b(x) * ab;
          axpy(r, Rational(-1), p2(ea, R1b(x) * eb));
          axpy(r, Rational(-1), R1p_at(L2b(b) * ex) * ea);
          axpy(r, Rational(-1), p2(eb, R1b(x) * ea));
          axpy(r, Rational(-1), R1p_at(L2b(a) * ex) * eb);
          push("mpc12", decl + 11, a, b, x, std::move(r));
        }
        {
          Vec r = L1p_at(L2b(a) * ex) * eb;
          axpy(r, Rational(1), p2(R1b(x) * ea, eb));
          axpy(r, Rational(1), p2(L1b(x) * ea, eb));
          axpy(r, Rational(1), L1p_at(R2b(a) * ex) * eb);
          push("mpc14", decl + 13, a, b, x, std::move(r));
        }
        {
          Vec r = R1p(x) * brab;
          axpy(r, Rational(1), R1p(x) * brba);
          push("mpc16", decl + 15, a, b, x, std::move(r));
        }
      }
  report.sort_canonical();
  return report;
}

Algebra matched_pair_glue(const MatchedPairData& mp) {
  validate_matched_shapes(mp);
  const std::size_t n1 = mp.a1.dim(), n2 = mp.a2.dim();
  const std::size_t n = n1 + n2;
  Tensor3 perm(n, n, n), br(n, n, n);
  for (const auto& e : mp.a1.op("perm").entries()) perm.add(e.i, e.j, e.k, e.c);
  for (const auto& e : mp.a1.op("bracket").entries()) br.add(e.i, e.j, e.k, e.c);
  for (const auto& e : mp.a2.op("perm").entries())
    perm.add(n1 + e.i, n1 + e.j, n1 + e.k, e.c);
  for (const auto& e : mp.a2.op("bracket").entries())
    br.add(n1 + e.i, n1 + e.j, n1 + e.k, e.c);
  // x * a = l1(x)a + r2(a)x ; a * x = l2(a)x + r1(x)a, for both products.
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t a = 0; a < n2; ++a) {
      for (std::size_t k = 0; k < n2; ++k) {
        perm.add(x, n1 + a, n1 + k, mp.rep1.l_perm[x].at(k, a));
        perm.add(n1 + a, x, n1 + k, mp.rep1.r_perm[x].at(k, a));
        br.add(x, n1 + a, n1 + k, mp.rep1.l_br[x].at(k, a));
        br.add(n1 + a, x, n1 + k, mp.rep1.r_br[x].at(k, a));
      }
      for (std::size_t k = 0; k < n1; ++k) {
        perm.add(n1 + a, x, k, mp.rep2.l_perm[a].at(k, x));
        perm.add(x, n1 + a, k, mp.rep2.r_perm[a].at(k, x));
        br.add(n1 + a, x, k, mp.rep2.l_br[a].at(k, x));
        br.add(x, n1 + a, k, mp.rep2.r_br[a].at(k, x));
      }
    }
  Algebra out(n);
  out.set_op("perm", perm);
  out.set_op("bracket", br);
  return out;
}

MatchedPairData coregular_matched_pair(const Algebra& a,
                                       const Algebra& astar_ops) {
  if (a.dim() != astar_ops.dim())
    throw DimensionError("coregular matched pair needs equal dimensions");
  MatchedPairData mp;
  mp.a1 = a;
  mp.a2 = astar_ops;
  mp.rep1 = coregular_rep(a);
  mp.rep2 = coregular_rep(astar_ops);
  return mp;
}

ManinReport check_manin_triple(const Algebra& a, const Algebra& astar_ops) {
  require_structure(a, StructureKind::dual_pre_poisson, "Manin triple A");
  require_structure(astar_ops, StructureKind::dual_pre_poisson,
                    "Manin triple A*");
  if (a.dim() != astar_ops.dim())
    throw DimensionError("Manin triple needs dim A = dim A*");
  const std::size_t n = a.dim();
  MatchedPairData mp = coregular_matched_pair(a, astar_ops);
  Algebra big = matched_pair_glue(mp);
  ManinReport mr;
  // A and A* must sit inside the candidate with their own products.
  for (const char* opname : {"perm", "bracket"}) {
    int decl = std::string(opname) == "perm" ? 0 : 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec inside = big.basis_product(opname, i, j);
        Vec expect = a.basis_product(opname, i, j);
        bool bad = false;
        for (std::size_t k = 0; k < n; ++k)
          if (inside[k] != expect[k]) bad = true;
        for (std::size_t k = n; k < 2 * n; ++k)
          if (inside[k] != 0) bad = true;
        if (bad)
          mr.subalgebras.witnesses.push_back(Witness{
              std::string("subalg_A_") + opname, decl, 2, {i, j, 0}, inside});
        Vec inside2 = big.basis_product(opname, n + i, n + j);
        Vec expect2 = astar_ops.basis_product(opname, i, j);
        bad = false;
        for (std::size_t k = 0; k < n; ++k)
          if (inside2[k] != 0) bad = true;
        for (std::size_t k = 0; k < n; ++k)
          if (inside2[n + k] != expect2[k]) bad = true;
        if (bad)
          mr.subalgebras.witnesses.push_back(
              Witness{std::string("subalg_Astar_") + opname, 2 + decl, 2,
                      {i, j, 0}, inside2});
      }
  }
  mr.subalgebras.sort_canonical();
  mr.big_dpp = check_structure(big, StructureKind::dual_pre_poisson);
  if (mr.big_dpp.passed()) {
    mr.form = check_invariant_form(big, standard_form(n));
  } else {
    // The invariance residuals are still meaningful on the raw candidate.
    const BilinearForm b = standard_form(n);
    mr.form.skew = (b + b.transpose()).is_zero();
    mr.form.nondegenerate = (rank(b) == 2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i)
      for (std::size_t j = 0; j < 2 * n; ++j)
        for (std::size_t k = 0; k < 2 * n; ++k) {
          Vec ex = basis_vec(2 * n, i), ez = basis_vec(2 * n, k);
          Vec rhs1 = big.basis_product("perm", j, k);
          axpy(rhs1, Rational(-1), big.basis_product("perm", k, j));
          push_scalar_witness(
              mr.form.invariance, "perm_inv", 0, i, j, k,
              form_eval(b, big.basis_product("perm", i, j), ez) -
                  form_eval(b, ex, rhs1));
          Vec rhs2 = big.basis_product("bracket", j, k);
          axpy(rhs2, Rational(1), big.basis_product("bracket", k, j));
          push_scalar_witness(
              mr.form.invariance, "br_inv", 1, i, j, k,
              form_eval(b, big.basis_product("bracket", i, j), ez) -
                  form_eval(b, ex, rhs2));
        }
    mr.form.invariance.sort_canonical();
  }
  return mr;
}

TripleEquivalenceReport triple_equivalence(const Algebra& a,
                                           const Algebra& astar_ops) {
  TripleEquivalenceReport tr;
  tr.manin = check_manin_triple(a, astar_ops);
  tr.manin_passed = tr.manin.passed();
  tr.matched_pair = check_matched_pair(coregular_matched_pair(a, astar_ops));
  tr.matched_passed = tr.matched_pair.passed();
  auto [dp, db] = coproducts_of_dual(astar_ops);
  tr.bialgebra = check_bialgebra(BialgebraData{a, dp, db});
  tr.bialgebra_passed = tr.bialgebra.passed();
  if (!tr.verdicts_agree())
    throw std::logic_error(
        "equivalence theorem verdicts disagree; this is a library bug");
  return tr;
}

}  // namespace permlei
