#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "permlei/io.hpp"
#include "support/fixtures.hpp"

using namespace permlei;
namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "permlei_cli_tests";
  fs::create_directories(dir);
  return dir;
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  fs::path dir = scratch();
  fs::path out = dir / "stdout.txt", err = dir / "stderr.txt";
  std::string cmd = std::string(CLI_PATH) + " " + args + " > " +
                    out.string() + " 2> " + err.string();
  int status = std::system(cmd.c_str());
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  int code = -1;
  if (status != -1) code = WEXITSTATUS(status);
  return {code, slurp(out), slurp(err)};
}

std::string write_temp(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream out(p);
  out << text;
  return p.string();
}

}  // namespace

TEST_CASE("shipped fixture files parse to the catalog values") {
  CHECK(io::parse_algebra(io::load_file(fixture("ex22.json"))) ==
        fixtures::ex22());
  CHECK(io::parse_algebra(io::load_file(fixture("ex212_poisson.json"))) ==
        fixtures::ex212());
  CHECK(io::parse_algebra(io::load_file(fixture("ex216.json"))) ==
        fixtures::ex216());
  CHECK(io::parse_algebra(io::load_file(fixture("double4.json"))) ==
        fixtures::double4());
  CHECK(io::parse_algebra(io::load_file(fixture("ex331_predpp.json"))) ==
        fixtures::ex331_predpp());
  CHECK(io::parse_algebra(io::load_file(fixture("final_ahat.json"))) ==
        fixtures::final_ahat());
  CHECK(io::parse_algebra(io::load_file(fixture("perm3_ts.json"))) ==
        fixtures::perm3_ts());
  CHECK(io::parse_tensor_element(io::load_file(fixture("final_r.json")), 4) ==
        fixtures::final_r());
  auto [dp, db] =
      io::parse_coproducts(io::load_file(fixture("final_bialgebra.json")), 4);
  CHECK(dp == fixtures::final_delta_perm());
  CHECK(db == fixtures::final_delta_br());
  DeformedDialgebra d =
      io::parse_deformation(io::load_file(fixture("deformation_order1.json")));
  CHECK(d.base == fixtures::deformation_order1().base);
  CHECK(d.right[0] == fixtures::deformation_order1().right[0]);
}

TEST_CASE("round-trip is the identity and canonical text is stable") {
  for (const char* name : {"ex22.json", "ex216.json", "final_bialgebra.json",
                           "deformation_order1.json"}) {
    io::json j = io::load_file(fixture(name));
    std::string text = io::to_canonical_text(j);
    io::json again = io::parse_text(text);
    CHECK(again == j);
    CHECK(io::to_canonical_text(again) == text);
  }
  // Algebra value round-trip through serialization.
  for (const auto& fix : fixtures::dpp_catalog())
    CHECK(io::parse_algebra(io::algebra_to_json(fix)) == fix);
  Representation rep = coregular_rep(fixtures::ex22());
  CHECK(io::parse_representation(io::representation_to_json(rep), 2) == rep);
}

TEST_CASE("validation errors carry the JSON path") {
  io::json j = io::parse_text(R"({"dim": 2, "ops": {"perm": [[1, 1, 0, "1/0"]]}})");
  try {
    io::parse_algebra(j);
    FAIL("expected InputError");
  } catch (const io::InputError& e) {
    CHECK(e.path == "/ops/perm/0/3");
  }
  io::json dup = io::parse_text(
      R"({"dim": 2, "ops": {"perm": [[1, 1, 0, "1"], [1, 1, 0, "2"]]}})");
  CHECK_THROWS_AS(io::parse_algebra(dup), io::InputError);
  io::json range = io::parse_text(R"({"dim": 2, "ops": {"perm": [[2, 0, 0, "1"]]}})");
  CHECK_THROWS_AS(io::parse_algebra(range), io::InputError);
}

TEST_CASE("cli verify") {
  CHECK(run_cli("verify " + fixture("ex22.json") +
                " --kind dual_pre_poisson").code == 0);
  CHECK(run_cli("verify " + fixture("ex212_poisson.json") + " --kind poisson")
            .code == 0);
  CHECK(run_cli("verify " + fixture("ex331_predpp.json") +
                " --kind pre_dual_pre_poisson").code == 0);
  CHECK(run_cli("verify " + fixture("final_bialgebra.json") +
                " --kind bialgebra").code == 0);
  CHECK(run_cli("verify " + fixture("ex331_rotabaxter.json") +
                " --kind rota-baxter").code == 0);
  CHECK(run_cli("verify " + fixture("deformation_order1.json") +
                " --kind deformation").code == 0);

  std::string zero = write_temp(
      "zero.json", R"({"dim": 2, "ops": {"bracket": [], "perm": []}})");
  CHECK(run_cli("verify " + zero + " --kind dual_pre_poisson").code == 0);
  CHECK(run_cli("verify " + zero + " --kind permutative").code == 0);

  std::string invalid = write_temp(
      "invalid.json", R"({"dim": 2, "ops": {"perm": [[1, 1, 0, "1/0"]]}})");
  RunResult bad = run_cli("verify " + invalid + " --kind permutative");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("/ops/perm/0/3") != std::string::npos);

  std::string broken = write_temp(
      "broken.json",
      R"({"dim": 2, "ops": {"bracket": [[1, 1, 1, "1"]], "perm": [[1, 1, 0, "1"]]}})");
  RunResult failing = run_cli("verify " + broken + " --kind dual_pre_poisson");
  CHECK(failing.code == 1);
  CHECK(failing.out.find("dpp_c3") != std::string::npos);

  // Reruns are bit-identical.
  RunResult again = run_cli("verify " + broken + " --kind dual_pre_poisson");
  CHECK(again.out == failing.out);
  CHECK(again.code == failing.code);

  CHECK(run_cli("verify " + zero + " --kind no_such_kind").code == 2);
}

TEST_CASE("cli verify covers the composite checkers") {
  // form: the 4-dim double with the standard pairing is quadratic.
  io::json formdoc = io::algebra_to_json(fixtures::double4());
  formdoc["form"] = io::matrix_to_json(standard_form(2));
  std::string formfile =
      write_temp("form.json", io::to_canonical_text(formdoc));
  RunResult form = run_cli("verify " + formfile + " --kind form");
  CHECK(form.code == 0);
  CHECK(form.out.find("skew: yes") != std::string::npos);

  // rep: the regular representation document.
  io::json repdoc = io::algebra_to_json(fixtures::ex22());
  repdoc.update(io::representation_to_json(regular_rep(fixtures::ex22())));
  std::string repfile = write_temp("rep.json", io::to_canonical_text(repdoc));
  CHECK(run_cli("verify " + repfile + " --kind rep").code == 0);

  // o-operator: same document with the Rota-Baxter matrix as t.
  repdoc["t"] = io::matrix_to_json(fixtures::ex331_rb());
  std::string oopfile = write_temp("oop.json", io::to_canonical_text(repdoc));
  CHECK(run_cli("verify " + oopfile + " --kind o-operator").code == 0);

  // coalgebra: the closing coproduct table on its own.
  io::json codoc;
  codoc["dim"] = 4;
  codoc.update(io::coproducts_to_json(fixtures::final_delta_perm(),
                                      fixtures::final_delta_br()));
  std::string cofile = write_temp("coalg.json", io::to_canonical_text(codoc));
  CHECK(run_cli("verify " + cofile + " --kind coalgebra").code == 0);

  // matched-pair and manin over the trivial dual structure.
  MatchedPairData mp =
      coregular_matched_pair(fixtures::ex22(), fixtures::zero_dpp(2));
  std::string mpfile =
      write_temp("mp.json", io::to_canonical_text(io::matched_pair_to_json(mp)));
  CHECK(run_cli("verify " + mpfile + " --kind matched-pair").code == 0);

  io::json manin;
  manin["a"] = io::algebra_to_json(fixtures::ex22());
  manin["astar"] = io::algebra_to_json(fixtures::zero_dpp(2));
  std::string maninfile =
      write_temp("manin.json", io::to_canonical_text(manin));
  CHECK(run_cli("verify " + maninfile + " --kind manin").code == 0);
}

TEST_CASE("cli witness limiting") {
  // A thoroughly broken 3-dim candidate (e_i o e_j = e_{2i+j mod 3})
  // with more than 20 witnesses across both permutative identities.
  io::json j;
  j["dim"] = 3;
  io::json entries = io::json::array();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      entries.push_back(io::json::array({i, k, (2 * i + k) % 3, "1"}));
  j["ops"]["perm"] = entries;
  std::string file = write_temp("messy.json", io::to_canonical_text(j));
  RunResult capped = run_cli("verify " + file + " --kind permutative");
  CHECK(capped.code == 1);
  CHECK(capped.out.find("suppressed") != std::string::npos);
  RunResult full =
      run_cli("verify " + file + " --kind permutative --all-witnesses");
  CHECK(full.code == 1);
  CHECK(full.out.find("suppressed") == std::string::npos);
  CHECK(full.out.size() > capped.out.size());
}

TEST_CASE("cli construct") {
  fs::path dir = scratch();
  std::string out1 = (dir / "double.json").string();
  CHECK(run_cli("construct coregular-double " + fixture("ex22.json") + " -o " +
                out1).code == 0);
  Algebra built = io::parse_algebra(io::load_file(out1));
  CHECK(built.op("perm") == fixtures::double4().op("perm"));
  CHECK(built.op("bracket") == fixtures::double4().op("bracket"));

  std::string induced = (dir / "induced.json").string();
  CHECK(run_cli("construct average " + fixture("ex212_poisson.json") + " " +
                fixture("ex212_averaging.json") + " -o " + induced).code == 0);
  CHECK(io::parse_algebra(io::load_file(induced)).op("perm") ==
        fixtures::ex212_induced().op("perm"));

  std::string tensor_out = (dir / "tensor.json").string();
  CHECK(run_cli("construct tensor " + fixture("ex22.json") + " " + induced +
                " -o " + tensor_out).code == 0);
  CHECK(io::parse_algebra(io::load_file(tensor_out)).dim() == 6);

  std::string sc = (dir / "semiclassical.json").string();
  CHECK(run_cli("construct semiclassical " +
                fixture("deformation_order1.json") + " -o " + sc).code == 0);
  Algebra limit = io::parse_algebra(io::load_file(sc));
  CHECK(limit.op("perm") == fixtures::ex22().op("perm"));
  CHECK(limit.op("bracket") == fixtures::ex22().op("bracket"));

  std::string derived = (dir / "derived.json").string();
  CHECK(run_cli("construct derivations " + fixture("perm3_ts.json") + " " +
                fixture("perm3_d1.json") + " " + fixture("perm3_d2.json") +
                " -o " + derived).code == 0);
  CHECK_FALSE(io::parse_algebra(io::load_file(derived)).op("bracket").is_zero());

  std::string subadj = (dir / "subadjacent.json").string();
  CHECK(run_cli("construct predpp-subadjacent " +
                fixture("ex331_predpp.json") + " -o " + subadj).code == 0);
  CHECK(io::parse_algebra(io::load_file(subadj)).op("perm").get(1, 1, 0) ==
        rat(2));

  // Failing preconditions never write the output.
  std::string refused = (dir / "refused.json").string();
  std::string bad_op = write_temp(
      "bad_op.json",
      R"({"matrix": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "0"]]})");
  RunResult failed = run_cli("construct average " +
                             fixture("ex212_poisson.json") + " " + bad_op +
                             " -o " + refused);
  CHECK(failed.code == 1);
  CHECK_FALSE(fs::exists(refused));
}

TEST_CASE("cli ybe") {
  fs::path dir = scratch();
  CHECK(run_cli("ybe residual " + fixture("final_ahat.json") + " " +
                fixture("final_r.json")).code == 0);

  std::string zero_r = write_temp("zero_r.json", R"({"r": []})");
  CHECK(run_cli("ybe residual " + fixture("final_ahat.json") + " " + zero_r)
            .code == 0);

  std::string canonical = (dir / "canonical.json").string();
  CHECK(run_cli("ybe canonical " + fixture("ex331_predpp.json") + " -o " +
                canonical).code == 0);
  io::json cj = io::load_file(canonical);
  Algebra ahat = io::parse_algebra(cj);
  CHECK(ahat.op("perm") == fixtures::final_ahat().op("perm"));
  CHECK(ahat.op("bracket") == fixtures::final_ahat().op("bracket"));
  CHECK(io::parse_tensor_element(cj, 4) == fixtures::final_r());

  std::string bial = (dir / "bialgebra.json").string();
  CHECK(run_cli("ybe bialgebra " + fixture("final_ahat.json") + " " +
                fixture("final_r.json") + " -o " + bial).code == 0);
  io::json bj = io::load_file(bial);
  auto [dp, db] = io::parse_coproducts(bj, 4);
  CHECK(dp == fixtures::final_delta_perm());
  CHECK(db == fixtures::final_delta_br());

  std::string asym = write_temp("asym.json", R"({"r": [[0, 1, "1"]]})");
  RunResult refused = run_cli("ybe bialgebra " + fixture("final_ahat.json") +
                              " " + asym + " -o " + (dir / "nope.json").string());
  CHECK(refused.code == 2);
  CHECK(refused.err.find("not symmetric") != std::string::npos);

  CHECK(run_cli("ybe closed-form " + fixture("final_ahat.json") + " " +
                fixture("final_r.json")).code == 0);

  std::string duals = (dir / "duals.json").string();
  CHECK(run_cli("ybe dual-products " + fixture("final_ahat.json") + " " +
                fixture("final_r.json") + " -o " + duals).code == 0);
  CHECK(io::parse_algebra(io::load_file(duals)).op("perm") ==
        dualize(fixtures::final_delta_perm()));
}

TEST_CASE("cli series") {
  RunResult ok = run_cli("series --order 12");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("GK residual: 0 0 0") != std::string::npos);
  RunResult small = run_cli("series --order 3");
  CHECK(small.code == 0);
  CHECK(small.out.find("3: 18") != std::string::npos);
  CHECK(run_cli("series --order 1").code == 2);
}
