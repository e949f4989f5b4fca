#pragma once

#include <string>

#include "json.hpp"
#include "permlei/bialgebra.hpp"
#include "permlei/constructions.hpp"
#include "permlei/yang_baxter.hpp"

namespace permlei::io {

using nlohmann::json;

// Malformed fixture data; path points at the offending JSON node
// ("/ops/perm/3" style).
struct InputError : Error {
  std::string path;
  InputError(const std::string& path_, const std::string& msg)
      : Error(msg + " at " + (path_.empty() ? "/" : path_)), path(path_) {}
};

json parse_text(const std::string& text);  // InputError on bad JSON
json load_file(const std::string& filename);
void write_file(const std::string& filename, const json& j);

// Fixture schema, indices 0-based, rationals "p" or "p/q":
//   algebra        {"dim": n, "ops": {name: [[i,j,k,"p/q"],...]},
//                   "basis": [names]?}
//   representation {"dimV": m, "maps": {"l_perm": [n matrices], ...}}
//   tensor element {"r": [[i,j,"p/q"],...]}
//   coproducts     {"delta_perm": [[i,j,k,"p/q"],...], "delta_br": [...]}
//   deformation    algebra keys + {"order": m, "right": [layers],
//                   "left": [layers]}
//   form           {"form": [rows of rationals]}
//   matrix         {"matrix": [rows of rationals]}
// Composite documents embed these side by side (e.g. an o-operator file
// is an algebra + representation + {"t": [rows]}).
Algebra parse_algebra(const json& j, const std::string& base = "");
json algebra_to_json(const Algebra& a);

Representation parse_representation(const json& j, std::size_t dimA,
                                    const std::string& base = "");
json representation_to_json(const Representation& rep);

Matrix parse_matrix(const json& j, const std::string& path);
json matrix_to_json(const Matrix& m);

TensorElement parse_tensor_element(const json& j, std::size_t dim,
                                   const std::string& base = "");
json tensor_element_to_json(const TensorElement& r);

std::pair<Coproduct, Coproduct> parse_coproducts(const json& j,
                                                 std::size_t dim,
                                                 const std::string& base = "");
json coproducts_to_json(const Coproduct& dp, const Coproduct& db);

DeformedDialgebra parse_deformation(const json& j,
                                    const std::string& base = "");
json deformation_to_json(const DeformedDialgebra& d);

MatchedPairData parse_matched_pair(const json& j,
                                   const std::string& base = "");
json matched_pair_to_json(const MatchedPairData& mp);

PoissonRepresentation parse_poisson_representation(const json& j,
                                                   std::size_t dimA,
                                                   const std::string& base = "");

// Canonical text: sorted keys, sorted index tuples, lowest-term
// rationals; parse -> serialize -> parse is the identity.
std::string to_canonical_text(const json& j);

}  // namespace permlei::io
