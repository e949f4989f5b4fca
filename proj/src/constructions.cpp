#include "permlei/constructions.hpp"

#include "permlei/representation.hpp"

namespace permlei {

namespace {

void check_operator_shape(const Algebra& a, const Matrix& p,
                          const char* what) {
  if (p.rows() != a.dim() || p.cols() != a.dim())
    throw DimensionError(std::string(what) +
                         " must be square of the algebra dimension");
}

Witness pair_witness(const std::string& label, int decl, std::size_t i,
                     std::size_t j, Vec residual) {
  return Witness{label, decl, 2, {i, j, 0}, std::move(residual)};
}

void push_matrix_witness(VerificationReport& report, const std::string& label,
                         int decl, std::size_t i, std::size_t j,
                         const Matrix& residual) {
  if (residual.is_zero()) return;
  report.witnesses.push_back(
      Witness{label, decl, 2, {i, j, 0}, row_major_flatten(residual)});
}

// Constructions re-verify their outputs; a failure here means the
// implementation broke the theorem backing the construction.
void ensure_output(const Algebra& alg, StructureKind kind, const char* what) {
  if (!check_structure(alg, kind).passed())
    throw std::logic_error(std::string(what) + " violated its theorem");
}

}  // namespace

Algebra tensor_dpp(const Algebra& a, const Algebra& b) {
  require_structure(a, StructureKind::dual_pre_poisson, "tensor_dpp left factor");
  require_structure(b, StructureKind::dual_pre_poisson, "tensor_dpp right factor");
  const std::size_t na = a.dim(), nb = b.dim();
  auto id = [nb](std::size_t i, std::size_t p) { return i * nb + p; };
  Tensor3 perm(na * nb, na * nb, na * nb), br(na * nb, na * nb, na * nb);
  for (const auto& ea : a.op("perm").entries())
    for (const auto& eb : b.op("perm").entries())
      perm.add(id(ea.i, eb.i), id(ea.j, eb.j), id(ea.k, eb.k), ea.c * eb.c);
  // [x(x)a, y(x)b] = [x,y](x)(a o b) + (x o y)(x)[a,b]
  for (const auto& ea : a.op("bracket").entries())
    for (const auto& eb : b.op("perm").entries())
      br.add(id(ea.i, eb.i), id(ea.j, eb.j), id(ea.k, eb.k), ea.c * eb.c);
  for (const auto& ea : a.op("perm").entries())
    for (const auto& eb : b.op("bracket").entries())
      br.add(id(ea.i, eb.i), id(ea.j, eb.j), id(ea.k, eb.k), ea.c * eb.c);
  Algebra out(na * nb);
  out.set_op("perm", perm);
  out.set_op("bracket", br);
  ensure_output(out, StructureKind::dual_pre_poisson, "tensor_dpp");
  return out;
}

Algebra tensor_perm_poisson(const Algebra& a, const Algebra& b) {
  require_structure(a, StructureKind::permutative,
                    "tensor_perm_poisson permutative factor");
  require_structure(b, StructureKind::poisson,
                    "tensor_perm_poisson Poisson factor");
  const std::size_t na = a.dim(), nb = b.dim();
  auto id = [nb](std::size_t i, std::size_t p) { return i * nb + p; };
  Tensor3 perm(na * nb, na * nb, na * nb), br(na * nb, na * nb, na * nb);
  for (const auto& ea : a.op("perm").entries()) {
    for (const auto& eb : b.op("assoc").entries())
      perm.add(id(ea.i, eb.i), id(ea.j, eb.j), id(ea.k, eb.k), ea.c * eb.c);
    for (const auto& eb : b.op("lie").entries())
      br.add(id(ea.i, eb.i), id(ea.j, eb.j), id(ea.k, eb.k), ea.c * eb.c);
  }
  Algebra out(na * nb);
  out.set_op("perm", perm);
  out.set_op("bracket", br);
  ensure_output(out, StructureKind::dual_pre_poisson, "tensor_perm_poisson");
  return out;
}

VerificationReport check_averaging(const Algebra& poisson,
                                   const LinearOperator& p) {
  require_structure(poisson, StructureKind::poisson, "check_averaging algebra");
  check_operator_shape(poisson, p, "averaging operator");
  const std::size_t n = poisson.dim();
  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    Vec px = p.col(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec py = p.col(j);
      Vec ey = basis_vec(n, j);
      // P(x)*P(y) - P(P(x)*y) for both products
      Vec r1 = poisson.apply("assoc", px, py);
      axpy(r1, Rational(-1), p * poisson.apply("assoc", px, ey));
      if (!is_zero(r1))
        report.witnesses.push_back(pair_witness("avg_assoc", 0, i, j, r1));
      Vec r2 = poisson.apply("lie", px, py);
      axpy(r2, Rational(-1), p * poisson.apply("lie", px, ey));
      if (!is_zero(r2))
        report.witnesses.push_back(pair_witness("avg_lie", 1, i, j, r2));
    }
  }
  report.sort_canonical();
  return report;
}

Algebra average_induced(const Algebra& poisson, const LinearOperator& p) {
  VerificationReport pre = check_averaging(poisson, p);
  if (!pre.passed())
    throw PreconditionError("average_induced needs an averaging operator",
                            std::move(pre));
  const std::size_t n = poisson.dim();
  Tensor3 perm(n, n, n), br(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec px = p.col(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = poisson.apply("assoc", px, basis_vec(n, j));
      Vec brk = poisson.apply("lie", px, basis_vec(n, j));
      for (std::size_t k = 0; k < n; ++k) {
        perm.add(i, j, k, prod[k]);
        br.add(i, j, k, brk[k]);
      }
    }
  }
  Algebra out(n);
  out.set_op("perm", perm);
  out.set_op("bracket", br);
  out.set_basis_names(poisson.basis_names());
  ensure_output(out, StructureKind::dual_pre_poisson, "average_induced");
  return out;
}

VerificationReport check_derivation(const Algebra& perm,
                                    const LinearOperator& d) {
  require_structure(perm, StructureKind::permutative,
                    "check_derivation algebra");
  check_operator_shape(perm, d, "derivation");
  const std::size_t n = perm.dim();
  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ex = basis_vec(n, i), ey = basis_vec(n, j);
      Vec r = d * perm.apply("perm", ex, ey);
      axpy(r, Rational(-1), perm.apply("perm", d.col(i), ey));
      axpy(r, Rational(-1), perm.apply("perm", ex, d.col(j)));
      if (!is_zero(r))
        report.witnesses.push_back(pair_witness("leibniz_rule", 0, i, j, r));
    }
  report.sort_canonical();
  return report;
}

Algebra derivation_induced(const Algebra& perm, const LinearOperator& d1,
                           const LinearOperator& d2) {
  for (const auto* d : {&d1, &d2}) {
    VerificationReport pre = check_derivation(perm, *d);
    if (!pre.passed())
      throw PreconditionError("derivation_induced operator fails Leibniz rule",
                              std::move(pre));
  }
  Matrix commutator = d1 * d2 - d2 * d1;
  if (!commutator.is_zero()) {
    VerificationReport r;
    r.witnesses.push_back(
        Witness{"commutator", 0, 1, {0, 0, 0}, row_major_flatten(commutator)});
    throw PreconditionError("derivations do not commute", std::move(r));
  }
  const std::size_t n = perm.dim();
  Tensor3 br(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = perm.apply("perm", d1.col(i), d2.col(j));
      axpy(v, Rational(-1), perm.apply("perm", d2.col(i), d1.col(j)));
      for (std::size_t k = 0; k < n; ++k) br.add(i, j, k, v[k]);
    }
  Algebra out(n);
  out.set_op("perm", perm.op("perm"));
  out.set_op("bracket", br);
  out.set_basis_names(perm.basis_names());
  ensure_output(out, StructureKind::dual_pre_poisson, "derivation_induced");
  return out;
}

VerificationReport check_poisson_representation(
    const Algebra& poisson, const PoissonRepresentation& rep) {
  require_structure(poisson, StructureKind::poisson,
                    "check_poisson_representation algebra");
  const std::size_t n = poisson.dim(), m = rep.dimV;
  if (rep.mu.size() != n || rep.rho.size() != n)
    throw DimensionError("Poisson representation family size mismatch");
  for (const auto* fam : {&rep.mu, &rep.rho})
    for (const auto& mat : *fam)
      if (mat.rows() != m || mat.cols() != m)
        throw DimensionError("Poisson representation matrices must be square");
  auto mu = [&](const Vec& v) { return Representation::at(rep.mu, v); };
  auto rho = [&](const Vec& v) { return Representation::at(rep.rho, v); };
  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec xy = poisson.basis_product("assoc", i, j);
      Vec brxy = poisson.basis_product("lie", i, j);
      const Matrix &mx = rep.mu[i], &my = rep.mu[j];
      const Matrix &rx = rep.rho[i], &ry = rep.rho[j];
      push_matrix_witness(report, "prep_assoc", 0, i, j, mu(xy) - mx * my);
      push_matrix_witness(report, "prep_lie", 1, i, j,
                          rho(brxy) - rx * ry + ry * rx);
      push_matrix_witness(report, "prep_mixed1", 2, i, j,
                          rho(xy) - my * rx - mx * ry);
      push_matrix_witness(report, "prep_mixed2", 3, i, j,
                          mu(brxy) - rx * my + my * rx);
    }
  report.sort_canonical();
  return report;
}

Algebra poisson_rep_semidirect(const Algebra& poisson,
                               const PoissonRepresentation& rep) {
  VerificationReport pre = check_poisson_representation(poisson, rep);
  if (!pre.passed())
    throw PreconditionError(
        "poisson_rep_semidirect needs a Poisson representation",
        std::move(pre));
  const std::size_t n = poisson.dim(), m = rep.dimV;
  Tensor3 perm(n + m, n + m, n + m), br(n + m, n + m, n + m);
  for (const auto& e : poisson.op("assoc").entries())
    perm.add(e.i, e.j, e.k, e.c);
  for (const auto& e : poisson.op("lie").entries()) br.add(e.i, e.j, e.k, e.c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = 0; v < m; ++v) {
        perm.add(i, n + u, n + v, rep.mu[i].at(v, u));
        br.add(i, n + u, n + v, rep.rho[i].at(v, u));
      }
  Algebra out(n + m);
  out.set_op("perm", perm);
  out.set_op("bracket", br);
  if (!poisson.basis_names().empty() && m == n) {
    std::vector<std::string> names = poisson.basis_names();
    for (const auto& b : poisson.basis_names()) names.push_back(b + "*");
    out.set_basis_names(names);
  }
  ensure_output(out, StructureKind::dual_pre_poisson,
                "poisson_rep_semidirect");
  return out;
}

CompatiblePreLie compatible_prelie_tensor(const Algebra& dpp,
                                          const Algebra& prepoisson) {
  require_structure(dpp, StructureKind::dual_pre_poisson,
                    "compatible_prelie_tensor dpp factor");
  require_structure(prepoisson, StructureKind::pre_poisson,
                    "compatible_prelie_tensor pre-Poisson factor");
  const std::size_t na = dpp.dim(), nb = prepoisson.dim();
  auto id = [nb](std::size_t i, std::size_t p) { return i * nb + p; };
  const std::size_t n = na * nb;
  Tensor3 d1(n, n, n), d2(n, n, n);
  for (const auto& ea : dpp.op("perm").entries())
    for (const auto& eb : prepoisson.op("prelie").entries())
      d1.add(id(ea.i, eb.i), id(ea.j, eb.j), id(ea.k, eb.k), ea.c * eb.c);
  for (const auto& ea : dpp.op("bracket").entries())
    for (const auto& eb : prepoisson.op("zinbiel").entries())
      d2.add(id(ea.i, eb.i), id(ea.j, eb.j), id(ea.k, eb.k), ea.c * eb.c);
  CompatiblePreLie out;
  out.prelie_pair = Algebra(n);
  out.prelie_pair.set_op("prelie", d1);
  out.prelie_pair.set_op("prelie2", d2);
  ensure_output(out.prelie_pair, StructureKind::compatible_pre_lie,
                "compatible_prelie_tensor");
  Tensor3 lie1(n, n, n), lie2(n, n, n);
  for (const auto& e : d1.entries()) {
    lie1.add(e.i, e.j, e.k, e.c);
    lie1.add(e.j, e.i, e.k, -e.c);
  }
  for (const auto& e : d2.entries()) {
    lie2.add(e.i, e.j, e.k, e.c);
    lie2.add(e.j, e.i, e.k, -e.c);
  }
  out.lie_pair = Algebra(n);
  out.lie_pair.set_op("lie", lie1);
  out.lie_pair.set_op("lie2", lie2);
  Algebra check1(n), check2(n);
  check1.set_op("lie", lie1);
  check2.set_op("lie", lie2);
  ensure_output(check1, StructureKind::lie, "compatible_prelie_tensor lie 1");
  ensure_output(check2, StructureKind::lie, "compatible_prelie_tensor lie 2");
  return out;
}

namespace {

// Layer accessor with the degree-0 convention x |>0 y = x o y = y <|0 x.
Vec layer_apply(const DeformedDialgebra& d, bool right_family,
                std::size_t degree, const Vec& x, const Vec& y) {
  if (degree == 0)
    return right_family ? d.base.apply("perm", x, y)
                        : d.base.apply("perm", y, x);
  if (degree > d.order) return zero_vec(d.base.dim());
  const Tensor3& t =
      right_family ? d.right.at(degree - 1) : d.left.at(degree - 1);
  return t.apply(x, y);
}

}  // namespace

VerificationReport check_deformation(const DeformedDialgebra& d) {
  require_structure(d.base, StructureKind::permutative, "deformation base");
  if (d.right.size() != d.order || d.left.size() != d.order)
    throw DimensionError("deformation must carry exactly `order` layers");
  const std::size_t n = d.base.dim();
  for (const auto* fam : {&d.right, &d.left})
    for (const auto& t : *fam)
      if (t.n1() != n || t.n2() != n || t.n3() != n)
        throw DimensionError("deformation layer extent mismatch");

  // The five homogeneous families, each sum_{i+j=k} of
  //   (x a_inner_i y) a_outer_j z  -  x b_outer_i (y b_inner_j z),
  // flags true = |>, false = <|, matching the dialgebra axioms.
  struct Eq {
    const char* label;
    bool a_outer, a_inner, b_outer, b_inner;
  };
  const Eq eqs[5] = {
      {"dia1", true, true, true, true},     // (x|>y)|>z = x|>(y|>z)
      {"dia2", false, false, false, true},  // (x<|y)<|z = x<|(y|>z)
      {"dia3", false, true, true, false},   // (x|>y)<|z = x|>(y<|z)
      {"dia4", true, false, true, true},    // (x<|y)|>z = x|>(y|>z)
      {"dia5", false, false, false, false}, // (x<|y)<|z = x<|(y<|z)
  };

  VerificationReport report;
  int decl = 0;
  for (const Eq& eq : eqs) {
    for (std::size_t k = 0; k <= 2 * d.order; ++k) {
      std::string label = std::string(eq.label) + ".k" + std::to_string(k);
      for (std::size_t xi = 0; xi < n; ++xi)
        for (std::size_t yi = 0; yi < n; ++yi)
          for (std::size_t zi = 0; zi < n; ++zi) {
            Vec ex = basis_vec(n, xi), ey = basis_vec(n, yi),
                ez = basis_vec(n, zi);
            Vec r = zero_vec(n);
            for (std::size_t i = 0; i <= k; ++i) {
              std::size_t j = k - i;
              if (i > d.order || j > d.order) continue;
              axpy(r, Rational(1),
                   layer_apply(d, eq.a_outer, j,
                               layer_apply(d, eq.a_inner, i, ex, ey), ez));
              axpy(r, Rational(-1),
                   layer_apply(d, eq.b_outer, i, ex,
                               layer_apply(d, eq.b_inner, j, ey, ez)));
            }
            if (!is_zero(r))
              report.witnesses.push_back(
                  Witness{label, decl, 3, {xi, yi, zi}, r});
          }
      ++decl;
    }
  }
  report.sort_canonical();
  return report;
}

Algebra semiclassical_limit(const DeformedDialgebra& d) {
  VerificationReport pre = check_deformation(d);
  if (!pre.passed())
    throw PreconditionError("semiclassical_limit needs a valid deformation",
                            std::move(pre));
  const std::size_t n = d.base.dim();
  Tensor3 br(n, n, n);
  if (d.order >= 1) {
    // [x,y] = x |>1 y - y <|1 x
    for (const auto& e : d.right[0].entries()) br.add(e.i, e.j, e.k, e.c);
    for (const auto& e : d.left[0].entries()) br.add(e.j, e.i, e.k, -e.c);
  }
  Algebra out(n);
  out.set_op("perm", d.base.op("perm"));
  out.set_op("bracket", br);
  out.set_basis_names(d.base.basis_names());
  ensure_output(out, StructureKind::dual_pre_poisson, "semiclassical_limit");
  return out;
}

}  // namespace permlei
