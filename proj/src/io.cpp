#include "permlei/io.hpp"

#include <fstream>
#include <set>

namespace permlei::io {

namespace {

std::string idx_path(const std::string& base, std::size_t i) {
  return base + "/" + std::to_string(i);
}

Rational parse_rational(const json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path, "rational must be a string");
  try {
    return rat_parse(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw InputError(path, "invalid rational \"" + j.get<std::string>() + "\"");
  }
}

std::size_t parse_index(const json& j, std::size_t bound,
                        const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(path, "index must be a nonnegative integer");
  auto v = static_cast<std::size_t>(j.get<long long>());
  if (v >= bound)
    throw InputError(path, "index " + std::to_string(v) + " out of range [0," +
                               std::to_string(bound) + ")");
  return v;
}

std::size_t parse_dim(const json& j, const char* key,
                      const std::string& base) {
  if (!j.contains(key))
    throw InputError(base, std::string("missing \"") + key + "\"");
  const json& d = j.at(key);
  if (!d.is_number_integer() || d.get<long long>() < 0)
    throw InputError(base + "/" + key, "must be a nonnegative integer");
  return static_cast<std::size_t>(d.get<long long>());
}

Tensor3 parse_entry_list(const json& j, std::size_t dim,
                         const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array of entries");
  Tensor3 t(dim, dim, dim);
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t idx = 0; idx < j.size(); ++idx) {
    const json& e = j.at(idx);
    const std::string p = idx_path(path, idx);
    if (!e.is_array() || e.size() != 4)
      throw InputError(p, "entry must be [i, j, k, \"p/q\"]");
    std::size_t a = parse_index(e.at(0), dim, p + "/0");
    std::size_t b = parse_index(e.at(1), dim, p + "/1");
    std::size_t c = parse_index(e.at(2), dim, p + "/2");
    if (!seen.insert({a, b, c}).second)
      throw InputError(p, "duplicate index tuple");
    t.add(a, b, c, parse_rational(e.at(3), p + "/3"));
  }
  return t;
}

json entry_list_to_json(const Tensor3& t) {
  json out = json::array();
  for (const auto& e : t.entries())
    out.push_back(json::array({e.i, e.j, e.k, rat_str(e.c)}));
  return out;
}

}  // namespace

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("", "not valid JSON");
  return j;
}

json load_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw InputError("", "cannot open " + filename);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_text(text);
}

void write_file(const std::string& filename, const json& j) {
  std::ofstream out(filename);
  if (!out) throw InputError("", "cannot write " + filename);
  out << to_canonical_text(j);
}

Algebra parse_algebra(const json& j, const std::string& base) {
  if (!j.is_object()) throw InputError(base, "algebra must be an object");
  std::size_t dim = parse_dim(j, "dim", base);
  Algebra a(dim);
  if (!j.contains("ops"))
    throw InputError(base, "missing \"ops\"");
  const json& ops = j.at("ops");
  if (!ops.is_object()) throw InputError(base + "/ops", "must be an object");
  for (const auto& [name, entries] : ops.items())
    a.set_op(name, parse_entry_list(entries, dim, base + "/ops/" + name));
  if (j.contains("basis")) {
    const json& names = j.at("basis");
    if (!names.is_array() || names.size() != dim)
      throw InputError(base + "/basis", "must be an array of dim names");
    std::vector<std::string> v;
    for (const auto& s : names) {
      if (!s.is_string()) throw InputError(base + "/basis", "names must be strings");
      v.push_back(s.get<std::string>());
    }
    a.set_basis_names(v);
  }
  return a;
}

json algebra_to_json(const Algebra& a) {
  json out;
  out["dim"] = a.dim();
  json ops = json::object();
  for (const auto& [name, t] : a.ops()) ops[name] = entry_list_to_json(t);
  out["ops"] = ops;
  if (!a.basis_names().empty()) out["basis"] = a.basis_names();
  return out;
}

Matrix parse_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty())
    throw InputError(path, "matrix must be a nonempty array of rows");
  std::size_t rows = j.size();
  if (!j.at(0).is_array() || j.at(0).empty())
    throw InputError(path + "/0", "row must be a nonempty array");
  std::size_t cols = j.at(0).size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    const std::string rp = idx_path(path, i);
    if (!row.is_array() || row.size() != cols)
      throw InputError(rp, "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = parse_rational(row.at(c), idx_path(rp, c));
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    out.push_back(row);
  }
  return out;
}

Representation parse_representation(const json& j, std::size_t dimA,
                                    const std::string& base) {
  std::size_t dimV = parse_dim(j, "dimV", base);
  if (!j.contains("maps")) throw InputError(base, "missing \"maps\"");
  const json& maps = j.at("maps");
  Representation rep;
  rep.dimV = dimV;
  for (const char* fam : {"l_perm", "r_perm", "l_br", "r_br"}) {
    if (!maps.contains(fam))
      throw InputError(base + "/maps", std::string("missing family \"") + fam + "\"");
    const json& list = maps.at(fam);
    const std::string fp = base + "/maps/" + fam;
    if (!list.is_array() || list.size() != dimA)
      throw InputError(fp, "family must carry one matrix per basis vector");
    std::vector<Matrix>& target =
        std::string(fam) == "l_perm"   ? rep.l_perm
        : std::string(fam) == "r_perm" ? rep.r_perm
        : std::string(fam) == "l_br"   ? rep.l_br
                                       : rep.r_br;
    for (std::size_t i = 0; i < dimA; ++i) {
      Matrix m = parse_matrix(list.at(i), idx_path(fp, i));
      if (m.rows() != dimV || m.cols() != dimV)
        throw InputError(idx_path(fp, i), "matrix must be dimV-square");
      target.push_back(std::move(m));
    }
  }
  return rep;
}

json representation_to_json(const Representation& rep) {
  json maps;
  auto fam = [&](const std::vector<Matrix>& f) {
    json list = json::array();
    for (const auto& m : f) list.push_back(matrix_to_json(m));
    return list;
  };
  maps["l_perm"] = fam(rep.l_perm);
  maps["r_perm"] = fam(rep.r_perm);
  maps["l_br"] = fam(rep.l_br);
  maps["r_br"] = fam(rep.r_br);
  json out;
  out["dimV"] = rep.dimV;
  out["maps"] = maps;
  return out;
}

TensorElement parse_tensor_element(const json& j, std::size_t dim,
                                   const std::string& base) {
  if (!j.contains("r")) throw InputError(base, "missing \"r\"");
  const json& list = j.at("r");
  const std::string path = base + "/r";
  if (!list.is_array()) throw InputError(path, "expected an array of entries");
  Matrix r(dim, dim);
  std::set<std::array<std::size_t, 2>> seen;
  for (std::size_t idx = 0; idx < list.size(); ++idx) {
    const json& e = list.at(idx);
    const std::string p = idx_path(path, idx);
    if (!e.is_array() || e.size() != 3)
      throw InputError(p, "entry must be [i, j, \"p/q\"]");
    std::size_t a = parse_index(e.at(0), dim, p + "/0");
    std::size_t b = parse_index(e.at(1), dim, p + "/1");
    if (!seen.insert({a, b}).second) throw InputError(p, "duplicate index tuple");
    r.at(a, b) = parse_rational(e.at(2), p + "/2");
  }
  return r;
}

json tensor_element_to_json(const TensorElement& r) {
  json list = json::array();
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0)
        list.push_back(json::array({i, j, rat_str(r.at(i, j))}));
  json out;
  out["r"] = list;
  return out;
}

std::pair<Coproduct, Coproduct> parse_coproducts(const json& j,
                                                 std::size_t dim,
                                                 const std::string& base) {
  for (const char* key : {"delta_perm", "delta_br"})
    if (!j.contains(key))
      throw InputError(base, std::string("missing \"") + key + "\"");
  Coproduct dp{parse_entry_list(j.at("delta_perm"), dim, base + "/delta_perm")};
  Coproduct db{parse_entry_list(j.at("delta_br"), dim, base + "/delta_br")};
  return {dp, db};
}

json coproducts_to_json(const Coproduct& dp, const Coproduct& db) {
  json out;
  out["delta_perm"] = entry_list_to_json(dp.t);
  out["delta_br"] = entry_list_to_json(db.t);
  return out;
}

DeformedDialgebra parse_deformation(const json& j, const std::string& base) {
  DeformedDialgebra d;
  d.base = parse_algebra(j, base);
  d.order = parse_dim(j, "order", base);
  for (const char* key : {"right", "left"}) {
    if (!j.contains(key))
      throw InputError(base, std::string("missing \"") + key + "\"");
    const json& layers = j.at(key);
    const std::string lp = base + "/" + key;
    if (!layers.is_array() || layers.size() != d.order)
      throw InputError(lp, "must carry exactly `order` layers");
    auto& target = std::string(key) == "right" ? d.right : d.left;
    for (std::size_t i = 0; i < d.order; ++i)
      target.push_back(
          parse_entry_list(layers.at(i), d.base.dim(), idx_path(lp, i)));
  }
  return d;
}

json deformation_to_json(const DeformedDialgebra& d) {
  json out = algebra_to_json(d.base);
  out["order"] = d.order;
  json right = json::array(), left = json::array();
  for (const auto& t : d.right) right.push_back(entry_list_to_json(t));
  for (const auto& t : d.left) left.push_back(entry_list_to_json(t));
  out["right"] = right;
  out["left"] = left;
  return out;
}

MatchedPairData parse_matched_pair(const json& j, const std::string& base) {
  for (const char* key : {"a1", "a2", "maps1", "maps2"})
    if (!j.contains(key))
      throw InputError(base, std::string("missing \"") + key + "\"");
  MatchedPairData mp;
  mp.a1 = parse_algebra(j.at("a1"), base + "/a1");
  mp.a2 = parse_algebra(j.at("a2"), base + "/a2");
  json wrap1, wrap2;
  wrap1["dimV"] = mp.a2.dim();
  wrap1["maps"] = j.at("maps1");
  wrap2["dimV"] = mp.a1.dim();
  wrap2["maps"] = j.at("maps2");
  mp.rep1 = parse_representation(wrap1, mp.a1.dim(), base + "/maps1");
  mp.rep2 = parse_representation(wrap2, mp.a2.dim(), base + "/maps2");
  return mp;
}

json matched_pair_to_json(const MatchedPairData& mp) {
  json out;
  out["a1"] = algebra_to_json(mp.a1);
  out["a2"] = algebra_to_json(mp.a2);
  out["maps1"] = representation_to_json(mp.rep1)["maps"];
  out["maps2"] = representation_to_json(mp.rep2)["maps"];
  return out;
}

PoissonRepresentation parse_poisson_representation(const json& j,
                                                   std::size_t dimA,
                                                   const std::string& base) {
  PoissonRepresentation rep;
  rep.dimV = parse_dim(j, "dimV", base);
  if (!j.contains("maps")) throw InputError(base, "missing \"maps\"");
  const json& maps = j.at("maps");
  for (const char* fam : {"mu", "rho"}) {
    if (!maps.contains(fam))
      throw InputError(base + "/maps", std::string("missing family \"") + fam + "\"");
    const json& list = maps.at(fam);
    const std::string fp = base + "/maps/" + fam;
    if (!list.is_array() || list.size() != dimA)
      throw InputError(fp, "family must carry one matrix per basis vector");
    auto& target = std::string(fam) == "mu" ? rep.mu : rep.rho;
    for (std::size_t i = 0; i < dimA; ++i) {
      Matrix m = parse_matrix(list.at(i), idx_path(fp, i));
      if (m.rows() != rep.dimV || m.cols() != rep.dimV)
        throw InputError(idx_path(fp, i), "matrix must be dimV-square");
      target.push_back(std::move(m));
    }
  }
  return rep;
}

std::string to_canonical_text(const json& j) {
  // nlohmann's object keys are already sorted; index tuples are emitted
  // sorted by construction.
  return j.dump(2) + "\n";
}

}  // namespace permlei::io
