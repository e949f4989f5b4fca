#include "permlei/yang_baxter.hpp"

namespace permlei {

namespace {

bool is_symmetric(const Matrix& r) {
  return r.is_square() && flip(r) == r;
}

VerificationReport residual_report(const std::pair<Tensor3, Tensor3>& res) {
  VerificationReport report;
  for (const auto& e : res.first.entries())
    report.witnesses.push_back(
        Witness{"plybe_P", 0, 3, {e.i, e.j, e.k}, {e.c}});
  for (const auto& e : res.second.entries())
    report.witnesses.push_back(
        Witness{"plybe_L", 1, 3, {e.i, e.j, e.k}, {e.c}});
  report.sort_canonical();
  return report;
}

}  // namespace

std::pair<Tensor3, Tensor3> plybe_residual(const Algebra& a,
                                           const TensorElement& r) {
  require_structure(a, StructureKind::dual_pre_poisson,
                    "plybe_residual algebra");
  const std::size_t n = a.dim();
  if (r.rows() != n || r.cols() != n)
    throw DimensionError("tensor element shape mismatch");
  const Algebra alg = derived_products(a);
  Tensor3 p(n, n, n), l(n, n, n);
  // P(r) = r13 o r23 - r12 o r23 + r13 [blacksquare] r12, with the
  // permutative product in the third slot of the first term.
  for (const auto& e : alg.op("perm").entries()) {
    // r13 o r23: sum a_i (x) a_j (x) (b_i o b_j)
    for (std::size_t u = 0; u < n; ++u) {
      if (r.at(u, e.i) == 0) continue;
      for (std::size_t v = 0; v < n; ++v)
        p.add(u, v, e.k, r.at(u, e.i) * r.at(v, e.j) * e.c);
    }
    // r12 o r23: sum a_i (x) (b_i o a_j) (x) b_j
    for (std::size_t u = 0; u < n; ++u) {
      if (r.at(u, e.i) == 0) continue;
      for (std::size_t w = 0; w < n; ++w)
        p.add(u, e.k, w, -r.at(u, e.i) * r.at(e.j, w) * e.c);
    }
  }
  // r13 [bs] r12: sum (a_i bs a_j) (x) b_j (x) b_i
  for (const auto& e : alg.op("blacksquare").entries())
    for (std::size_t w = 0; w < n; ++w) {
      if (r.at(e.i, w) == 0) continue;
      for (std::size_t v = 0; v < n; ++v)
        p.add(e.k, v, w, r.at(e.i, w) * r.at(e.j, v) * e.c);
    }
  // L(r) = [r13, r23] + [r12, r23] - r12 [square] r13.
  for (const auto& e : alg.op("bracket").entries()) {
    for (std::size_t u = 0; u < n; ++u) {
      if (r.at(u, e.i) == 0) continue;
      for (std::size_t v = 0; v < n; ++v)
        l.add(u, v, e.k, r.at(u, e.i) * r.at(v, e.j) * e.c);
    }
    // [r12, r23]: sum a_i (x) [b_i, a_j] (x) b_j
    for (std::size_t u = 0; u < n; ++u) {
      if (r.at(u, e.i) == 0) continue;
      for (std::size_t w = 0; w < n; ++w)
        l.add(u, e.k, w, r.at(u, e.i) * r.at(e.j, w) * e.c);
    }
  }
  // r12 [sq] r13: sum (a_i sq a_j) (x) b_i (x) b_j
  for (const auto& e : alg.op("square").entries())
    for (std::size_t v = 0; v < n; ++v) {
      if (r.at(e.i, v) == 0) continue;
      for (std::size_t w = 0; w < n; ++w)
        l.add(e.k, v, w, -r.at(e.i, v) * r.at(e.j, w) * e.c);
    }
  return {p, l};
}

std::pair<Coproduct, Coproduct> coproducts_from_r(const Algebra& a,
                                                  const TensorElement& r) {
  require_structure(a, StructureKind::dual_pre_poisson,
                    "coproducts_from_r algebra");
  const std::size_t n = a.dim();
  if (r.rows() != n || r.cols() != n)
    throw DimensionError("tensor element shape mismatch");
  const Algebra alg = derived_products(a);
  const Matrix id = Matrix::identity(n);
  const Vec rflat = row_major_flatten(r);
  Tensor3 dp(n, n, n), db(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix e_op = kron(alg.right_op("blacksquare", i), id) +
                  kron(id, alg.right_op("perm", i));
    Matrix f_op = kron(alg.left_op("square", i), id) -
                  kron(id, alg.right_op("bracket", i));
    Matrix delta_perm = unflatten(e_op * rflat, n, n);
    Matrix delta_br = unflatten(f_op * rflat, n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        dp.add(i, j, k, delta_perm.at(j, k));
        db.add(i, j, k, delta_br.at(j, k));
      }
  }
  return {Coproduct{dp}, Coproduct{db}};
}

BialgebraData bialgebra_from_r(const Algebra& a, const TensorElement& r) {
  if (!is_symmetric(r)) throw ConfigError("r is not symmetric");
  auto res = plybe_residual(a, r);
  if (!res.first.is_zero() || !res.second.is_zero())
    throw PreconditionError("r does not solve the PLYBE",
                            residual_report(res));
  auto [dp, db] = coproducts_from_r(a, r);
  BialgebraData bd{a, dp, db};
  if (!check_bialgebra(bd).passed())
    throw std::logic_error("coboundary bialgebra violated its theorem");
  return bd;
}

VerificationReport check_o_operator(const OOperatorData& od) {
  VerificationReport pre = check_representation(od.alg, od.rep);
  if (!pre.passed())
    throw PreconditionError("check_o_operator needs a representation",
                            std::move(pre));
  const std::size_t n = od.alg.dim(), m = od.rep.dimV;
  if (od.t.rows() != n || od.t.cols() != m)
    throw DimensionError("O-operator matrix must be dim(A) x dim(V)");
  VerificationReport report;
  for (std::size_t u = 0; u < m; ++u) {
    Vec tu = od.t.col(u);
    for (std::size_t v = 0; v < m; ++v) {
      Vec tv = od.t.col(v);
      Vec eu = basis_vec(m, u), ev = basis_vec(m, v);
      {
        Vec arg = Representation::at(od.rep.l_perm, tu) * ev;
        axpy(arg, Rational(1), Representation::at(od.rep.r_perm, tv) * eu);
        Vec r = od.alg.apply("perm", tu, tv);
        axpy(r, Rational(-1), od.t * arg);
        if (!is_zero(r))
          report.witnesses.push_back(Witness{"oop_perm", 0, 2, {u, v, 0}, r});
      }
      {
        Vec arg = Representation::at(od.rep.l_br, tu) * ev;
        axpy(arg, Rational(1), Representation::at(od.rep.r_br, tv) * eu);
        Vec r = od.alg.apply("bracket", tu, tv);
        axpy(r, Rational(-1), od.t * arg);
        if (!is_zero(r))
          report.witnesses.push_back(Witness{"oop_br", 1, 2, {u, v, 0}, r});
      }
    }
  }
  report.sort_canonical();
  return report;
}

VerificationReport check_rota_baxter(const Algebra& a,
                                     const LinearOperator& p) {
  if (p.rows() != a.dim() || p.cols() != a.dim())
    throw DimensionError("Rota-Baxter operator must be square");
  return check_o_operator(OOperatorData{a, regular_rep(a), p});
}

IffReport r_is_solution_iff_o_operator(const Algebra& a,
                                       const TensorElement& r) {
  if (!is_symmetric(r)) throw ConfigError("r is not symmetric");
  IffReport iff;
  iff.lhs = residual_report(plybe_residual(a, r));
  iff.rhs =
      check_o_operator(OOperatorData{a, coregular_rep(a), r.transpose()});
  if (!iff.agree())
    throw std::logic_error(
        "PLYBE / O-operator verdicts disagree; this is a library bug");
  return iff;
}

Algebra dual_products_from_r(const Algebra& a, const TensorElement& r) {
  if (!is_symmetric(r)) throw ConfigError("r is not symmetric");
  auto res = plybe_residual(a, r);
  if (!res.first.is_zero() || !res.second.is_zero())
    throw PreconditionError("r does not solve the PLYBE",
                            residual_report(res));
  const std::size_t n = a.dim();
  const Algebra alg = derived_products(a);
  Tensor3 perm(n, n, n), br(n, n, n);
  for (std::size_t u = 0; u < n; ++u) {
    Vec alpha = r.row(u);  // r~(e_u*) in A coordinates
    Matrix lp = alg.op("perm").left_operator(alpha);
    Matrix lb = alg.op("bracket").left_operator(alpha);
    for (std::size_t v = 0; v < n; ++v) {
      Vec beta = r.row(v);
      Matrix lbs = alg.op("blacksquare").left_operator(beta);
      Matrix lsq = alg.op("square").left_operator(beta);
      for (std::size_t w = 0; w < n; ++w) {
        // e_u* o_r e_v* = -L_perm*(r~u*)v* - L_bs*(r~v*)u*
        perm.add(u, v, w, lp.at(v, w) + lbs.at(u, w));
        // [e_u*, e_v*]_r = L_br*(r~u*)v* - L_sq*(r~v*)u*
        br.add(u, v, w, -lb.at(v, w) + lsq.at(u, w));
      }
    }
  }
  Algebra out(n);
  out.set_op("perm", perm);
  out.set_op("bracket", br);
  if (!check_structure(out, StructureKind::dual_pre_poisson).passed())
    throw std::logic_error("dual products violated their theorem");
  // r~ must be a homomorphism onto (A, o, [,]).
  Matrix rt = r.transpose();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      Vec lhs1 = rt * out.basis_product("perm", u, v);
      Vec rhs1 = a.apply("perm", r.row(u), r.row(v));
      Vec lhs2 = rt * out.basis_product("bracket", u, v);
      Vec rhs2 = a.apply("bracket", r.row(u), r.row(v));
      if (lhs1 != rhs1 || lhs2 != rhs2)
        throw std::logic_error("r~ failed to be a homomorphism");
    }
  return out;
}

BilinearForm induced_form(const Algebra& a, const TensorElement& r) {
  if (r.rows() != a.dim() || r.cols() != a.dim())
    throw DimensionError("tensor element shape mismatch");
  return invert(r);  // SingularMatrixError with the rank when degenerate
}

VerificationReport check_closed_conditions(const Algebra& a,
                                           const BilinearForm& b) {
  require_structure(a, StructureKind::dual_pre_poisson,
                    "check_closed_conditions algebra");
  const std::size_t n = a.dim();
  if (b.rows() != n || b.cols() != n)
    throw DimensionError("bilinear form shape mismatch");
  const Algebra alg = derived_products(a);
  auto bform = [&](const Vec& x, const Vec& y) {
    Rational acc(0);
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] != 0)
        for (std::size_t j = 0; j < n; ++j)
          if (y[j] != 0 && b.at(i, j) != 0) acc += x[i] * b.at(i, j) * y[j];
    return acc;
  };
  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ex = basis_vec(n, i), ey = basis_vec(n, j), ez = basis_vec(n, k);
        Rational r1 = bform(alg.basis_product("perm", i, j), ez) -
                      bform(ey, alg.basis_product("perm", i, k)) -
                      bform(ex, alg.basis_product("blacksquare", j, k));
        if (r1 != 0)
          report.witnesses.push_back(
              Witness{"closed_perm", 0, 3, {i, j, k}, {r1}});
        Rational r2 = bform(alg.basis_product("bracket", i, j), ez) +
                      bform(ey, alg.basis_product("bracket", i, k)) -
                      bform(ex, alg.basis_product("square", j, k));
        if (r2 != 0)
          report.witnesses.push_back(
              Witness{"closed_br", 1, 3, {i, j, k}, {r2}});
      }
  report.sort_canonical();
  return report;
}

std::pair<LinearOperator, IffReport> r_to_rota_baxter(const Algebra& a,
                                                      const BilinearForm& b,
                                                      const TensorElement& r) {
  if (!is_symmetric(r)) throw ConfigError("r is not symmetric");
  FormReport fr = check_invariant_form(a, b);
  if (!fr.quadratic())
    throw PreconditionError("form is not quadratic",
                            std::move(fr.invariance));
  // <phi(x), y> = B(x,y), so phi = B^T under dual bases; P_r = r~ . phi.
  LinearOperator p = r.transpose() * b.transpose();
  IffReport iff;
  iff.lhs = residual_report(plybe_residual(a, r));
  iff.rhs = check_rota_baxter(a, p);
  if (!iff.agree())
    throw std::logic_error(
        "PLYBE / Rota-Baxter verdicts disagree; this is a library bug");
  return {p, iff};
}

Algebra o_operator_to_predpp(const OOperatorData& od) {
  VerificationReport pre = check_o_operator(od);
  if (!pre.passed())
    throw PreconditionError("o_operator_to_predpp needs an O-operator",
                            std::move(pre));
  const std::size_t m = od.rep.dimV;
  Tensor3 rt(m, m, m), lt(m, m, m), sc(m, m, m), pc(m, m, m);
  for (std::size_t u = 0; u < m; ++u) {
    Vec tu = od.t.col(u);
    Matrix lp = Representation::at(od.rep.l_perm, tu);
    Matrix rp = Representation::at(od.rep.r_perm, tu);
    Matrix lb = Representation::at(od.rep.l_br, tu);
    Matrix rb = Representation::at(od.rep.r_br, tu);
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) {
        rt.add(u, v, w, lp.at(w, v));  // u |> v = l_perm(Tu) v
        lt.add(v, u, w, rp.at(w, v));  // v <| u = r_perm(Tu) v
        sc.add(u, v, w, lb.at(w, v));  // u > v = l_br(Tu) v
        pc.add(v, u, w, rb.at(w, v));  // v < u = r_br(Tu) v
      }
  }
  Algebra out(m);
  out.set_op("rtri", rt);
  out.set_op("ltri", lt);
  out.set_op("succ", sc);
  out.set_op("prec", pc);
  if (!check_structure(out, StructureKind::pre_dual_pre_poisson).passed())
    throw std::logic_error("O-operator pre-dpp violated its theorem");
  // T is a homomorphism from the sub-adjacent algebra to A.
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Vec subp = out.basis_product("rtri", u, v);
      axpy(subp, Rational(1), out.basis_product("ltri", u, v));
      Vec subb = out.basis_product("succ", u, v);
      axpy(subb, Rational(1), out.basis_product("prec", u, v));
      if (od.t * subp != od.alg.apply("perm", od.t.col(u), od.t.col(v)) ||
          od.t * subb != od.alg.apply("bracket", od.t.col(u), od.t.col(v)))
        throw std::logic_error("T failed to be a homomorphism");
    }
  return out;
}

Algebra invertible_o_to_compatible_predpp(const OOperatorData& od) {
  if (od.t.rows() != od.t.cols())
    throw DimensionError("invertible O-operator must be square");
  Matrix tinv = invert(od.t);
  VerificationReport pre = check_o_operator(od);
  if (!pre.passed())
    throw PreconditionError("invertible_o_to_compatible_predpp needs an O-operator",
                            std::move(pre));
  const std::size_t n = od.alg.dim();
  Tensor3 rt(n, n, n), lt(n, n, n), sc(n, n, n), pc(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix mrt = od.t * od.rep.l_perm[i] * tinv;  // y -> T(l_perm(e_i)T^-1 y)
    Matrix mlt = od.t * od.rep.r_perm[i] * tinv;  // x -> T(r_perm(e_i)T^-1 x)
    Matrix msc = od.t * od.rep.l_br[i] * tinv;
    Matrix mpc = od.t * od.rep.r_br[i] * tinv;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        rt.add(i, j, k, mrt.at(k, j));  // e_i |> e_j
        lt.add(j, i, k, mlt.at(k, j));  // e_j <| e_i
        sc.add(i, j, k, msc.at(k, j));
        pc.add(j, i, k, mpc.at(k, j));
      }
  }
  Algebra out(n);
  out.set_op("rtri", rt);
  out.set_op("ltri", lt);
  out.set_op("succ", sc);
  out.set_op("prec", pc);
  out.set_basis_names(od.alg.basis_names());
  if (!check_structure(out, StructureKind::pre_dual_pre_poisson).passed())
    throw std::logic_error("compatible pre-dpp violated its theorem");
  if (out.op("rtri") + out.op("ltri") != od.alg.op("perm") ||
      out.op("succ") + out.op("prec") != od.alg.op("bracket"))
    throw std::logic_error("compatible pre-dpp is not compatible");
  return out;
}

CanonicalR predpp_canonical_r(const Algebra& predpp) {
  auto [sub, rep] = predpp_sub_adjacent(predpp);
  Representation dual = dual_rep(sub, rep);
  Algebra ahat = semidirect(sub, dual);
  const std::size_t n = predpp.dim();
  TensorElement r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    r.at(i, n + i) = 1;
    r.at(n + i, i) = 1;
  }
  auto res = plybe_residual(ahat, r);
  if (!res.first.is_zero() || !res.second.is_zero())
    throw std::logic_error("canonical r failed to solve the PLYBE");
  return {ahat, r};
}

}  // namespace permlei
