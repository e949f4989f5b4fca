#include "permlei/representation.hpp"

namespace permlei {

Matrix Representation::at(const std::vector<Matrix>& family, const Vec& v) {
  if (family.empty()) throw DimensionError("empty representation family");
  Matrix acc(family[0].rows(), family[0].cols());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) acc = acc + v[i] * family[i];
  return acc;
}

Matrix star(const Matrix& f) { return -f.transpose(); }

namespace {

void validate_rep_shape(const Algebra& a, const Representation& rep) {
  const std::size_t n = a.dim(), m = rep.dimV;
  for (const auto* fam : {&rep.l_perm, &rep.r_perm, &rep.l_br, &rep.r_br}) {
    if (fam->size() != n)
      throw DimensionError("representation family must have dim(A) members");
    for (const auto& mat : *fam)
      if (mat.rows() != m || mat.cols() != m)
        throw DimensionError("representation matrices must be dimV-square");
  }
}

void push_matrix_witness(VerificationReport& report, const std::string& label,
                         int decl, std::size_t i, std::size_t j,
                         const Matrix& residual) {
  if (residual.is_zero()) return;
  report.witnesses.push_back(
      Witness{label, decl, 2, {i, j, 0}, row_major_flatten(residual)});
}

}  // namespace

VerificationReport check_representation(const Algebra& a,
                                        const Representation& rep) {
  require_structure(a, StructureKind::dual_pre_poisson,
                    "check_representation algebra");
  validate_rep_shape(a, rep);
  const std::size_t n = a.dim();
  VerificationReport report;

  auto lp = [&](const Vec& v) { return Representation::at(rep.l_perm, v); };
  auto rp = [&](const Vec& v) { return Representation::at(rep.r_perm, v); };
  auto lb = [&](const Vec& v) { return Representation::at(rep.l_br, v); };
  auto rb = [&](const Vec& v) { return Representation::at(rep.r_br, v); };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix& lpx = rep.l_perm[i];
      const Matrix& lpy = rep.l_perm[j];
      const Matrix& rpx = rep.r_perm[i];
      const Matrix& rpy = rep.r_perm[j];
      const Matrix& lbx = rep.l_br[i];
      const Matrix& lby = rep.l_br[j];
      const Matrix& rbx = rep.r_br[i];
      const Matrix& rby = rep.r_br[j];
      Vec xy = a.basis_product("perm", i, j);
      Vec yx = a.basis_product("perm", j, i);
      Vec brxy = a.basis_product("bracket", i, j);
      Vec bryx = a.basis_product("bracket", j, i);

      // Permutative representation.
      push_matrix_witness(report, "permrep1a", 0, i, j, rpx * rpy - rp(yx));
      push_matrix_witness(report, "permrep1b", 1, i, j, rp(yx) - lpy * rpx);
      push_matrix_witness(report, "permrep1c", 2, i, j, lpy * rpx - rpx * lpy);
      push_matrix_witness(report, "permrep2a", 3, i, j, lp(xy) - lpx * lpy);
      push_matrix_witness(report, "permrep2b", 4, i, j, lpx * lpy - lpy * lpx);
      // Leibniz representation.
      push_matrix_witness(report, "leibrep1", 5, i, j,
                          lb(brxy) - lbx * lby + lby * lbx);
      push_matrix_witness(report, "leibrep2", 6, i, j,
                          rb(brxy) - rby * rbx - lbx * rby);
      push_matrix_witness(report, "leibrep3", 7, i, j, rbx * rby + rbx * lby);
      // Mixed conditions.
      push_matrix_witness(report, "dpp1", 8, i, j,
                          rb(xy) - rpy * rbx - lpx * rby);
      push_matrix_witness(report, "dpp2", 9, i, j,
                          lbx * rpy - rpy * lbx - rp(brxy));
      push_matrix_witness(report, "dpp3", 10, i, j,
                          lbx * lpy - lp(brxy) - lpy * lbx);
      push_matrix_witness(report, "dpp4", 11, i, j,
                          rbx * rpy - rp(bryx) - lpy * rbx);
      push_matrix_witness(report, "dpp5", 12, i, j,
                          lb(xy) - lpx * lby - lpy * lbx);
      push_matrix_witness(report, "dpp6", 13, i, j, rbx * (lpy - rpy));
      push_matrix_witness(report, "dpp7", 14, i, j, rpx * (lby + rby));
      {
        Vec sum = brxy;
        axpy(sum, Rational(1), bryx);
        push_matrix_witness(report, "dpp8", 15, i, j, lp(sum));
      }
    }
  }
  report.sort_canonical();
  return report;
}

Representation regular_rep(const Algebra& a) {
  require_structure(a, StructureKind::dual_pre_poisson, "regular_rep input");
  Representation rep;
  rep.dimV = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    rep.l_perm.push_back(a.left_op("perm", i));
    rep.r_perm.push_back(a.right_op("perm", i));
    rep.l_br.push_back(a.left_op("bracket", i));
    rep.r_br.push_back(a.right_op("bracket", i));
  }
  return rep;
}

Representation dual_rep(const Algebra& a, const Representation& rep) {
  VerificationReport pre = check_representation(a, rep);
  if (!pre.passed())
    throw PreconditionError("dual_rep input is not a representation",
                            std::move(pre));
  Representation d;
  d.dimV = rep.dimV;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix slp = star(rep.l_perm[i]);
    Matrix srp = star(rep.r_perm[i]);
    Matrix slb = star(rep.l_br[i]);
    Matrix srb = star(rep.r_br[i]);
    d.l_perm.push_back(-slp);
    d.r_perm.push_back(-slp + srp);
    d.l_br.push_back(slb);
    d.r_br.push_back(-slb - srb);
  }
  return d;
}

Representation coregular_rep(const Algebra& a) {
  return dual_rep(a, regular_rep(a));
}

Algebra semidirect_raw(const Algebra& a, const Representation& rep) {
  validate_rep_shape(a, rep);
  const std::size_t n = a.dim(), m = rep.dimV;
  Algebra out(n + m);
  for (const char* opname : {"perm", "bracket"}) {
    bool perm = std::string(opname) == "perm";
    const auto& lfam = perm ? rep.l_perm : rep.l_br;
    const auto& rfam = perm ? rep.r_perm : rep.r_br;
    Tensor3 t(n + m, n + m, n + m);
    for (const auto& e : a.op(opname).entries()) t.add(e.i, e.j, e.k, e.c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
          // e_i * (V basis u) = l(e_i) u ; (V basis u) * e_j = r(e_j) u.
          t.add(i, n + u, n + v, lfam[i].at(v, u));
          t.add(n + u, i, n + v, rfam[i].at(v, u));
        }
    out.set_op(opname, t);
  }
  if (!a.basis_names().empty() && m == n) {
    std::vector<std::string> names = a.basis_names();
    for (const auto& b : a.basis_names()) names.push_back(b + "*");
    out.set_basis_names(names);
  }
  return out;
}

Algebra semidirect(const Algebra& a, const Representation& rep) {
  VerificationReport pre = check_representation(a, rep);
  if (!pre.passed())
    throw PreconditionError("semidirect input is not a representation",
                            std::move(pre));
  return semidirect_raw(a, rep);
}

Algebra coregular_double(const Algebra& a) {
  return semidirect(a, coregular_rep(a));
}

VerificationReport check_equivalence(const Algebra& a,
                                     const Representation& rep1,
                                     const Representation& rep2,
                                     const Matrix& phi) {
  validate_rep_shape(a, rep1);
  validate_rep_shape(a, rep2);
  if (rep1.dimV != rep2.dimV || phi.rows() != rep2.dimV ||
      phi.cols() != rep1.dimV)
    throw DimensionError("check_equivalence shape mismatch");
  invert(phi);  // SingularMatrixError with the rank when not invertible
  VerificationReport report;
  const char* labels[4] = {"equiv_l_perm", "equiv_r_perm", "equiv_l_br",
                           "equiv_r_br"};
  const std::vector<Matrix>* fams1[4] = {&rep1.l_perm, &rep1.r_perm,
                                         &rep1.l_br, &rep1.r_br};
  const std::vector<Matrix>* fams2[4] = {&rep2.l_perm, &rep2.r_perm,
                                         &rep2.l_br, &rep2.r_br};
  for (int f = 0; f < 4; ++f)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Matrix residual = phi * (*fams1[f])[i] - (*fams2[f])[i] * phi;
      if (!residual.is_zero())
        report.witnesses.push_back(Witness{
            labels[f], f, 1, {i, 0, 0}, row_major_flatten(residual)});
    }
  report.sort_canonical();
  return report;
}

std::pair<Algebra, Representation> predpp_sub_adjacent(const Algebra& predpp) {
  require_structure(predpp, StructureKind::pre_dual_pre_poisson,
                    "predpp_sub_adjacent input");
  const std::size_t n = predpp.dim();
  Algebra sub(n);
  sub.set_op("perm", predpp.op("rtri") + predpp.op("ltri"));
  sub.set_op("bracket", predpp.op("succ") + predpp.op("prec"));
  sub.set_basis_names(predpp.basis_names());

  Representation rep;
  rep.dimV = n;
  for (std::size_t i = 0; i < n; ++i) {
    rep.l_perm.push_back(predpp.left_op("rtri", i));
    rep.r_perm.push_back(predpp.right_op("ltri", i));
    rep.l_br.push_back(predpp.left_op("succ", i));
    rep.r_br.push_back(predpp.right_op("prec", i));
  }
  if (!check_structure(sub, StructureKind::dual_pre_poisson).passed() ||
      !check_representation(sub, rep).passed())
    throw std::logic_error("sub-adjacent construction violated its theorem");
  return {sub, rep};
}

std::pair<Algebra, Algebra> predpp_associated_pre_poisson(
    const Algebra& predpp) {
  const std::size_t n = predpp.dim();
  const Tensor3& rt = predpp.op("rtri");
  const Tensor3& lt = predpp.op("ltri");
  const Tensor3& sc = predpp.op("succ");
  const Tensor3& pc = predpp.op("prec");
  VerificationReport hyp;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec d1(n, Rational(0)), d2(n, Rational(0));
      for (std::size_t k = 0; k < n; ++k) {
        d1[k] = lt.get(i, j, k) - rt.get(j, i, k);        // x<|y - y|>x
        d2[k] = pc.get(i, j, k) + sc.get(j, i, k);        // x<y + y>x
      }
      if (!is_zero(d1))
        hyp.witnesses.push_back(Witness{"hyp_ltri_rtri", 0, 2, {i, j, 0}, d1});
      if (!is_zero(d2))
        hyp.witnesses.push_back(Witness{"hyp_prec_succ", 1, 2, {i, j, 0}, d2});
    }
  hyp.sort_canonical();
  if (!hyp.passed())
    throw PreconditionError(
        "symmetry hypotheses x<|y = y|>x, x<y = -y>x fail", std::move(hyp));
  require_structure(predpp, StructureKind::pre_dual_pre_poisson,
                    "predpp_associated_pre_poisson input");

  Algebra prepois(n);
  prepois.set_op("prelie", sc);
  prepois.set_op("zinbiel", rt);
  prepois.set_basis_names(predpp.basis_names());

  Algebra pois(n);
  Tensor3 assoc(n, n, n), lie(n, n, n);
  for (const auto& e : rt.entries()) {
    assoc.add(e.i, e.j, e.k, e.c);
    assoc.add(e.j, e.i, e.k, e.c);
  }
  for (const auto& e : sc.entries()) {
    lie.add(e.i, e.j, e.k, e.c);
    lie.add(e.j, e.i, e.k, -e.c);
  }
  pois.set_op("assoc", assoc);
  pois.set_op("lie", lie);
  pois.set_basis_names(predpp.basis_names());

  if (!check_structure(prepois, StructureKind::pre_poisson).passed() ||
      !check_structure(pois, StructureKind::poisson).passed())
    throw std::logic_error(
        "associated pre-Poisson construction violated its theorem");
  return {prepois, pois};
}

}  // namespace permlei
