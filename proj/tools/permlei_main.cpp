#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "permlei/io.hpp"
#include "permlei/operad_series.hpp"

using namespace permlei;
using io::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

int emit(const VerificationReport& report, bool all_witnesses,
         const std::vector<std::string>& names = {}) {
  std::cout << report.summary(all_witnesses ? report.witnesses.size() : 20,
                              names);
  return report.passed() ? kPass : kFail;
}

int run_verify(const std::string& file, const std::string& kind,
               bool all_witnesses) {
  json j = io::load_file(file);
  if (kind == "rep") {
    Algebra a = io::parse_algebra(j);
    Representation rep = io::parse_representation(j, a.dim());
    return emit(check_representation(a, rep), all_witnesses);
  }
  if (kind == "form") {
    Algebra a = io::parse_algebra(j);
    if (!j.contains("form")) throw io::InputError("", "missing \"form\"");
    Matrix b = io::parse_matrix(j.at("form"), "/form");
    FormReport fr = check_invariant_form(a, b);
    std::cout << "skew: " << (fr.skew ? "yes" : "no")
              << "\nnondegenerate: " << (fr.nondegenerate ? "yes" : "no")
              << "\ninvariant: " << (fr.invariant() ? "yes" : "no") << "\n";
    std::cout << fr.invariance.summary(
        all_witnesses ? fr.invariance.witnesses.size() : 20, a.basis_names());
    return fr.quadratic() ? kPass : kFail;
  }
  if (kind == "coalgebra") {
    if (!j.contains("dim") || !j.at("dim").is_number_integer())
      throw io::InputError("/dim", "missing or non-integer dimension");
    auto [dp, db] = io::parse_coproducts(j, j.at("dim").get<std::size_t>());
    return emit(check_coalgebra(dp, db), all_witnesses);
  }
  if (kind == "bialgebra") {
    Algebra a = io::parse_algebra(j);
    auto [dp, db] = io::parse_coproducts(j, a.dim());
    return emit(check_bialgebra(BialgebraData{a, dp, db}), all_witnesses,
                a.basis_names());
  }
  if (kind == "matched-pair") {
    MatchedPairData mp = io::parse_matched_pair(j);
    return emit(check_matched_pair(mp), all_witnesses);
  }
  if (kind == "manin") {
    if (!j.contains("a") || !j.contains("astar"))
      throw io::InputError("", "manin documents need \"a\" and \"astar\"");
    Algebra a = io::parse_algebra(j.at("a"), "/a");
    Algebra astar = io::parse_algebra(j.at("astar"), "/astar");
    ManinReport mr = check_manin_triple(a, astar);
    std::cout << "subalgebras: " << mr.subalgebras.summary()
              << "big algebra: " << mr.big_dpp.summary()
              << "form quadratic: " << (mr.form.quadratic() ? "yes" : "no")
              << "\n";
    return mr.passed() ? kPass : kFail;
  }
  if (kind == "o-operator") {
    Algebra a = io::parse_algebra(j);
    Representation rep = io::parse_representation(j, a.dim());
    if (!j.contains("t")) throw io::InputError("", "missing \"t\"");
    Matrix t = io::parse_matrix(j.at("t"), "/t");
    return emit(check_o_operator(OOperatorData{a, rep, t}), all_witnesses);
  }
  if (kind == "rota-baxter") {
    Algebra a = io::parse_algebra(j);
    if (!j.contains("p")) throw io::InputError("", "missing \"p\"");
    Matrix p = io::parse_matrix(j.at("p"), "/p");
    return emit(check_rota_baxter(a, p), all_witnesses, a.basis_names());
  }
  if (kind == "deformation") {
    DeformedDialgebra d = io::parse_deformation(j);
    return emit(check_deformation(d), all_witnesses, d.base.basis_names());
  }
  Algebra a = io::parse_algebra(j);
  return emit(check_structure(a, kind_from_string(kind)), all_witnesses,
              a.basis_names());
}

int run_construct(const std::string& sub, const std::vector<std::string>& in,
                  const std::string& out) {
  auto need = [&](std::size_t n) {
    if (in.size() != n)
      throw io::InputError("", sub + " takes " + std::to_string(n) +
                                   " input file(s)");
  };
  auto load_algebra = [](const std::string& f) {
    return io::parse_algebra(io::load_file(f));
  };
  auto load_operator = [](const std::string& f) {
    json j = io::load_file(f);
    if (!j.contains("matrix")) throw io::InputError("", "missing \"matrix\"");
    return io::parse_matrix(j.at("matrix"), "/matrix");
  };
  json result;
  if (sub == "tensor") {
    need(2);
    result = io::algebra_to_json(tensor_dpp(load_algebra(in[0]),
                                            load_algebra(in[1])));
  } else if (sub == "perm-poisson") {
    need(2);
    result = io::algebra_to_json(
        tensor_perm_poisson(load_algebra(in[0]), load_algebra(in[1])));
  } else if (sub == "average") {
    need(2);
    result = io::algebra_to_json(
        average_induced(load_algebra(in[0]), load_operator(in[1])));
  } else if (sub == "derivations") {
    need(3);
    result = io::algebra_to_json(derivation_induced(
        load_algebra(in[0]), load_operator(in[1]), load_operator(in[2])));
  } else if (sub == "poisson-semidirect") {
    need(2);
    Algebra a = load_algebra(in[0]);
    json rj = io::load_file(in[1]);
    PoissonRepresentation rep =
        io::parse_poisson_representation(rj, a.dim());
    result = io::algebra_to_json(poisson_rep_semidirect(a, rep));
  } else if (sub == "semidirect") {
    need(2);
    Algebra a = load_algebra(in[0]);
    Representation rep =
        io::parse_representation(io::load_file(in[1]), a.dim());
    result = io::algebra_to_json(semidirect(a, rep));
  } else if (sub == "coregular-double") {
    need(1);
    result = io::algebra_to_json(coregular_double(load_algebra(in[0])));
  } else if (sub == "matched-glue") {
    need(1);
    MatchedPairData mp = io::parse_matched_pair(io::load_file(in[0]));
    Algebra glued = matched_pair_glue(mp);
    VerificationReport check =
        check_structure(glued, StructureKind::dual_pre_poisson);
    if (!check.passed())
      throw PreconditionError("glued algebra fails dual_pre_poisson",
                              std::move(check));
    result = io::algebra_to_json(glued);
  } else if (sub == "semiclassical") {
    need(1);
    result = io::algebra_to_json(
        semiclassical_limit(io::parse_deformation(io::load_file(in[0]))));
  } else if (sub == "predpp-subadjacent") {
    need(1);
    auto [alg, rep] = predpp_sub_adjacent(load_algebra(in[0]));
    result = io::algebra_to_json(alg);
    result["rep"] = io::representation_to_json(rep);
  } else {
    throw io::InputError("", "unknown construct subcommand \"" + sub + "\"");
  }
  io::write_file(out, result);
  std::cout << "wrote " << out << "\n";
  return kPass;
}

void print_tensor(const char* name, const Tensor3& t) {
  std::cout << name << ":";
  if (t.is_zero()) {
    std::cout << " 0\n";
    return;
  }
  std::cout << "\n";
  for (const auto& e : t.entries())
    std::cout << "  (" << e.i << "," << e.j << "," << e.k
              << ") = " << rat_str(e.c) << "\n";
}

int run_ybe(const std::string& sub, const std::vector<std::string>& in,
            const std::string& out) {
  auto need = [&](std::size_t n) {
    if (in.size() != n)
      throw io::InputError("", sub + " takes " + std::to_string(n) +
                                   " input file(s)");
  };
  if (sub == "residual") {
    need(2);
    Algebra a = io::parse_algebra(io::load_file(in[0]));
    TensorElement r = io::parse_tensor_element(io::load_file(in[1]), a.dim());
    auto res = plybe_residual(a, r);
    print_tensor("P(r)", res.first);
    print_tensor("L(r)", res.second);
    return res.first.is_zero() && res.second.is_zero() ? kPass : kFail;
  }
  if (sub == "bialgebra") {
    need(2);
    Algebra a = io::parse_algebra(io::load_file(in[0]));
    TensorElement r = io::parse_tensor_element(io::load_file(in[1]), a.dim());
    BialgebraData bd = bialgebra_from_r(a, r);
    json result = io::algebra_to_json(bd.alg);
    result.update(io::coproducts_to_json(bd.delta_perm, bd.delta_br));
    io::write_file(out, result);
    std::cout << "wrote " << out << "\n";
    return kPass;
  }
  if (sub == "canonical") {
    need(1);
    Algebra predpp = io::parse_algebra(io::load_file(in[0]));
    CanonicalR canonical = predpp_canonical_r(predpp);
    json result = io::algebra_to_json(canonical.ahat);
    result.update(io::tensor_element_to_json(canonical.r));
    io::write_file(out, result);
    std::cout << "wrote " << out << "\n";
    return kPass;
  }
  if (sub == "dual-products") {
    need(2);
    Algebra a = io::parse_algebra(io::load_file(in[0]));
    TensorElement r = io::parse_tensor_element(io::load_file(in[1]), a.dim());
    io::write_file(out, io::algebra_to_json(dual_products_from_r(a, r)));
    std::cout << "wrote " << out << "\n";
    return kPass;
  }
  if (sub == "closed-form") {
    need(2);
    Algebra a = io::parse_algebra(io::load_file(in[0]));
    TensorElement r = io::parse_tensor_element(io::load_file(in[1]), a.dim());
    BilinearForm b = induced_form(a, r);
    VerificationReport report = check_closed_conditions(a, b);
    std::cout << report.summary(20, a.basis_names());
    if (!out.empty()) {
      json result;
      result["form"] = io::matrix_to_json(b);
      io::write_file(out, result);
      std::cout << "wrote " << out << "\n";
    }
    return report.passed() ? kPass : kFail;
  }
  throw io::InputError("", "unknown ybe subcommand \"" + sub + "\"");
}

int run_series(long order) {
  if (order < 2) throw ConfigError("--order must be >= 2");
  auto n = static_cast<std::size_t>(order);
  TruncatedSeries prepois = series_prepois(n);
  TruncatedSeries dual = series_dualprepois(n);
  TruncatedSeries residual = gk_check(n);
  std::cout << "prePois coefficients:";
  for (std::size_t i = 0; i <= n; ++i)
    std::cout << " " << rat_str(prepois.coeff(i));
  std::cout << "\nDualprePois coefficients:";
  for (std::size_t i = 0; i <= n; ++i) std::cout << " " << rat_str(dual.coeff(i));
  std::cout << "\nGK residual:";
  for (std::size_t i = 0; i <= n; ++i)
    std::cout << " " << rat_str(residual.coeff(i));
  std::cout << "\ndim DualprePois(n) = n * n!:\n";
  for (std::size_t i = 1; i <= n; ++i)
    std::cout << "  " << i << ": " << operad_dim(i).get_str() << "\n";
  return residual.is_zero() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for dual pre-Poisson algebras"};
  app.require_subcommand(1);

  std::string file, kind;
  bool all_witnesses = false;
  auto* verify = app.add_subcommand("verify", "check a fixture against a structure kind");
  verify->add_option("file", file, "fixture JSON")->required();
  verify->add_option("--kind", kind, "structure kind or checker name")->required();
  verify->add_flag("--all-witnesses", all_witnesses, "print every witness");

  std::string csub, out;
  std::vector<std::string> inputs;
  auto* construct = app.add_subcommand("construct", "build a new fixture");
  construct->add_option("subcommand", csub)->required();
  construct->add_option("inputs", inputs, "input fixture files");
  construct->add_option("-o,--output", out, "output file")->required();

  std::string ysub, yout;
  std::vector<std::string> yinputs;
  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter pipeline");
  ybe->add_option("subcommand", ysub)->required();
  ybe->add_option("inputs", yinputs, "input fixture files");
  ybe->add_option("-o,--output", yout, "output file");

  long order = 12;
  auto* series = app.add_subcommand("series", "operad series checks");
  series->add_option("--order", order, "truncation order (>= 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (verify->parsed()) return run_verify(file, kind, all_witnesses);
    if (construct->parsed()) return run_construct(csub, inputs, out);
    if (ybe->parsed()) {
      if ((ysub == "bialgebra" || ysub == "canonical" ||
           ysub == "dual-products") &&
          yout.empty())
        throw io::InputError("", ysub + " needs -o");
      return run_ybe(ysub, yinputs, yout);
    }
    if (series->parsed()) return run_series(order);
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConfigError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    std::cout << e.report.summary();
    return kFail;
  } catch (const SingularMatrixError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
