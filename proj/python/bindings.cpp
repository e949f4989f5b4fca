#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permlei/io.hpp"
#include "permlei/operad_series.hpp"

namespace py = pybind11;
using namespace permlei;
using io::json;

namespace {

json report_to_json(const VerificationReport& report) {
  json out;
  out["passed"] = report.passed();
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    json wj;
    wj["identity"] = w.identity;
    json idx = json::array();
    for (int a = 0; a < w.arity; ++a) idx.push_back(w.idx[a]);
    wj["indices"] = idx;
    json residual = json::array();
    for (const auto& c : w.residual) residual.push_back(rat_str(c));
    wj["residual"] = residual;
    witnesses.push_back(wj);
  }
  out["witnesses"] = witnesses;
  return out;
}

std::string verify(const std::string& text, const std::string& kind) {
  json j = io::parse_text(text);
  if (kind == "rep") {
    Algebra a = io::parse_algebra(j);
    return io::to_canonical_text(
        report_to_json(check_representation(a, io::parse_representation(j, a.dim()))));
  }
  if (kind == "form") {
    Algebra a = io::parse_algebra(j);
    if (!j.contains("form")) throw io::InputError("", "missing \"form\"");
    FormReport fr = check_invariant_form(a, io::parse_matrix(j.at("form"), "/form"));
    json out = report_to_json(fr.invariance);
    out["skew"] = fr.skew;
    out["nondegenerate"] = fr.nondegenerate;
    out["passed"] = fr.quadratic();
    return io::to_canonical_text(out);
  }
  if (kind == "coalgebra") {
    if (!j.contains("dim") || !j.at("dim").is_number_integer())
      throw io::InputError("/dim", "missing or non-integer dimension");
    auto [dp, db] = io::parse_coproducts(j, j.at("dim").get<std::size_t>());
    return io::to_canonical_text(report_to_json(check_coalgebra(dp, db)));
  }
  if (kind == "bialgebra") {
    Algebra a = io::parse_algebra(j);
    auto [dp, db] = io::parse_coproducts(j, a.dim());
    return io::to_canonical_text(
        report_to_json(check_bialgebra(BialgebraData{a, dp, db})));
  }
  if (kind == "matched-pair") {
    return io::to_canonical_text(
        report_to_json(check_matched_pair(io::parse_matched_pair(j))));
  }
  if (kind == "manin") {
    if (!j.contains("a") || !j.contains("astar"))
      throw io::InputError("", "manin documents need \"a\" and \"astar\"");
    ManinReport mr = check_manin_triple(io::parse_algebra(j.at("a"), "/a"),
                                        io::parse_algebra(j.at("astar"), "/astar"));
    json out;
    out["passed"] = mr.passed();
    out["subalgebras"] = mr.subalgebras.passed();
    out["big_dpp"] = mr.big_dpp.passed();
    out["form_quadratic"] = mr.form.quadratic();
    return io::to_canonical_text(out);
  }
  if (kind == "o-operator") {
    Algebra a = io::parse_algebra(j);
    Representation rep = io::parse_representation(j, a.dim());
    if (!j.contains("t")) throw io::InputError("", "missing \"t\"");
    Matrix t = io::parse_matrix(j.at("t"), "/t");
    return io::to_canonical_text(
        report_to_json(check_o_operator(OOperatorData{a, rep, t})));
  }
  if (kind == "rota-baxter") {
    Algebra a = io::parse_algebra(j);
    if (!j.contains("p")) throw io::InputError("", "missing \"p\"");
    return io::to_canonical_text(report_to_json(
        check_rota_baxter(a, io::parse_matrix(j.at("p"), "/p"))));
  }
  if (kind == "deformation") {
    return io::to_canonical_text(
        report_to_json(check_deformation(io::parse_deformation(j))));
  }
  Algebra a = io::parse_algebra(j);
  return io::to_canonical_text(
      report_to_json(check_structure(a, kind_from_string(kind))));
}

std::string construct(const std::string& sub,
                      const std::vector<std::string>& inputs) {
  auto algebra = [&](std::size_t i) {
    return io::parse_algebra(io::parse_text(inputs.at(i)));
  };
  auto op = [&](std::size_t i) {
    json doc = io::parse_text(inputs.at(i));
    if (!doc.contains("matrix")) throw io::InputError("", "missing \"matrix\"");
    return io::parse_matrix(doc.at("matrix"), "/matrix");
  };
  json result;
  if (sub == "tensor") {
    result = io::algebra_to_json(tensor_dpp(algebra(0), algebra(1)));
  } else if (sub == "perm-poisson") {
    result = io::algebra_to_json(tensor_perm_poisson(algebra(0), algebra(1)));
  } else if (sub == "average") {
    result = io::algebra_to_json(average_induced(algebra(0), op(1)));
  } else if (sub == "derivations") {
    result = io::algebra_to_json(derivation_induced(algebra(0), op(1), op(2)));
  } else if (sub == "poisson-semidirect") {
    Algebra a = algebra(0);
    result = io::algebra_to_json(poisson_rep_semidirect(
        a, io::parse_poisson_representation(io::parse_text(inputs.at(1)),
                                            a.dim())));
  } else if (sub == "semidirect") {
    Algebra a = algebra(0);
    result = io::algebra_to_json(semidirect(
        a, io::parse_representation(io::parse_text(inputs.at(1)), a.dim())));
  } else if (sub == "coregular-double") {
    result = io::algebra_to_json(coregular_double(algebra(0)));
  } else if (sub == "matched-glue") {
    result = io::algebra_to_json(
        matched_pair_glue(io::parse_matched_pair(io::parse_text(inputs.at(0)))));
  } else if (sub == "semiclassical") {
    result = io::algebra_to_json(
        semiclassical_limit(io::parse_deformation(io::parse_text(inputs.at(0)))));
  } else if (sub == "predpp-subadjacent") {
    auto [alg, rep] = predpp_sub_adjacent(algebra(0));
    result = io::algebra_to_json(alg);
    result["rep"] = io::representation_to_json(rep);
  } else {
    throw ConfigError("unknown construct subcommand \"" + sub + "\"");
  }
  return io::to_canonical_text(result);
}

std::string ybe_residual(const std::string& alg_text,
                         const std::string& r_text) {
  Algebra a = io::parse_algebra(io::parse_text(alg_text));
  TensorElement r = io::parse_tensor_element(io::parse_text(r_text), a.dim());
  auto res = plybe_residual(a, r);
  auto tensor_json = [](const Tensor3& t) {
    json out = json::array();
    for (const auto& e : t.entries())
      out.push_back(json::array({e.i, e.j, e.k, rat_str(e.c)}));
    return out;
  };
  json out;
  out["P"] = tensor_json(res.first);
  out["L"] = tensor_json(res.second);
  out["solution"] = res.first.is_zero() && res.second.is_zero();
  return io::to_canonical_text(out);
}

std::string ybe_canonical(const std::string& predpp_text) {
  CanonicalR canonical =
      predpp_canonical_r(io::parse_algebra(io::parse_text(predpp_text)));
  json out = io::algebra_to_json(canonical.ahat);
  out.update(io::tensor_element_to_json(canonical.r));
  return io::to_canonical_text(out);
}

std::string ybe_bialgebra(const std::string& alg_text,
                          const std::string& r_text) {
  Algebra a = io::parse_algebra(io::parse_text(alg_text));
  TensorElement r = io::parse_tensor_element(io::parse_text(r_text), a.dim());
  BialgebraData bd = bialgebra_from_r(a, r);
  json out = io::algebra_to_json(bd.alg);
  out.update(io::coproducts_to_json(bd.delta_perm, bd.delta_br));
  return io::to_canonical_text(out);
}

std::string ybe_dual_products(const std::string& alg_text,
                              const std::string& r_text) {
  Algebra a = io::parse_algebra(io::parse_text(alg_text));
  TensorElement r = io::parse_tensor_element(io::parse_text(r_text), a.dim());
  return io::to_canonical_text(io::algebra_to_json(dual_products_from_r(a, r)));
}

std::string series(std::size_t order) {
  TruncatedSeries prepois = series_prepois(order);
  TruncatedSeries dual = series_dualprepois(order);
  TruncatedSeries residual = gk_check(order);
  auto coeffs = [](const TruncatedSeries& s) {
    json out = json::array();
    for (std::size_t i = 0; i <= s.order(); ++i) out.push_back(rat_str(s.coeff(i)));
    return out;
  };
  json out;
  out["prepois"] = coeffs(prepois);
  out["dualprepois"] = coeffs(dual);
  out["gk_residual"] = coeffs(residual);
  out["gk_zero"] = residual.is_zero();
  json dims = json::object();
  for (std::size_t n = 1; n <= order; ++n)
    dims[std::to_string(n)] = operad_dim(n).get_str();
  out["dims"] = dims;
  return io::to_canonical_text(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact-arithmetic workbench for dual pre-Poisson algebras";
  py::register_exception<io::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigurationError", PyExc_ValueError);
  m.def("verify", &verify, py::arg("fixture_json"), py::arg("kind"),
        "run a checker on a fixture document; returns a JSON report");
  m.def("construct", &construct, py::arg("subcommand"), py::arg("inputs"),
        "run a construction on fixture documents; returns the new fixture");
  m.def("ybe_residual", &ybe_residual, py::arg("algebra_json"),
        py::arg("r_json"), "PLYBE residual tensors of r");
  m.def("ybe_canonical", &ybe_canonical, py::arg("predpp_json"),
        "canonical symmetric solution attached to a pre-dpp fixture");
  m.def("ybe_bialgebra", &ybe_bialgebra, py::arg("algebra_json"),
        py::arg("r_json"), "coboundary bialgebra of a symmetric solution");
  m.def("ybe_dual_products", &ybe_dual_products, py::arg("algebra_json"),
        py::arg("r_json"), "dual pre-Poisson products induced on the dual");
  m.def("series", &series, py::arg("order"),
        "operad series table and the Ginzburg-Kapranov residual");
  m.def("kinds", [] { return all_kind_names(); },
        "structure kinds known to verify()");
}
