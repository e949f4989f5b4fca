#include "permlei/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>

namespace permlei {

const Tensor3& Algebra::op(const std::string& name) const {
  auto it = ops_.find(name);
  if (it == ops_.end())
    throw ConfigError("algebra is missing the product \"" + name + "\"");
  return it->second;
}

Algebra& Algebra::set_op(const std::string& name, Tensor3 t) {
  if (t.n1() != dim_ || t.n2() != dim_ || t.n3() != dim_)
    throw DimensionError("structure tensor extents do not match dim");
  ops_[name] = std::move(t);
  return *this;
}

Vec Algebra::basis_product(const std::string& name, std::size_t i,
                           std::size_t j) const {
  const Tensor3& t = op(name);
  Vec z(dim_, Rational(0));
  for (const auto& e : t.entries())
    if (e.i == i && e.j == j) z[e.k] = e.c;
  return z;
}

Vec Algebra::apply(const std::string& name, const Vec& x, const Vec& y) const {
  return op(name).apply(x, y);
}

Matrix Algebra::left_op(const std::string& name, std::size_t i) const {
  return op(name).left_operator(basis_vec(dim_, i));
}

Matrix Algebra::right_op(const std::string& name, std::size_t i) const {
  return op(name).right_operator(basis_vec(dim_, i));
}

void Algebra::set_basis_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != dim_)
    throw ConfigError("basis name count does not match dim");
  basis_names_ = std::move(names);
}

// ---------------------------------------------------------------------------
// Identity tables. Each identity is a formal sum of parenthesized
// monomials in named products over the variables x, y, z; one generic
// evaluator serves all fourteen kinds. Evaluation on basis tuples decides
// each identity on all of A by multilinearity.

namespace {

struct Node;
struct Term {
  Rational coeff;
  std::shared_ptr<const Node> node;
};
using Sum = std::vector<Term>;

struct Node {
  int var = -1;      // 0,1,2 for x,y,z when a leaf
  std::string op;    // product name when an inner node
  Sum lhs, rhs;
};

class IdentityParser {
 public:
  explicit IdentityParser(const std::string& s) : s_(s) {}

  Sum parse() {
    Sum r = sum();
    skip();
    if (pos_ != s_.size())
      throw ConfigError("identity parse error (trailing input): " + s_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Sum sum() {
    Sum r;
    bool neg = false;
    skip();
    if (eat('-')) neg = true;
    else eat('+');
    term(r, neg);
    while (true) {
      skip();
      if (eat('+')) term(r, false);
      else if (eat('-')) term(r, true);
      else break;
    }
    return r;
  }
  void term(Sum& out, bool neg) {
    skip();
    Rational coeff = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '/'))
        ++pos_;
      coeff = Rational(s_.substr(start, pos_ - start));
      coeff.canonicalize();
      if (!eat('*')) throw ConfigError("expected '*' after coefficient: " + s_);
    }
    if (neg) coeff = -coeff;
    skip();
    if (eat('(')) {  // grouped sub-sum scaled by the coefficient
      Sum inner = sum();
      if (!eat(')')) throw ConfigError("expected ')': " + s_);
      for (auto& t : inner) out.push_back({coeff * t.coeff, t.node});
      return;
    }
    out.push_back({coeff, factor()});
  }
  std::shared_ptr<const Node> factor() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name.empty()) throw ConfigError("identity parse error: " + s_);
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      auto n = std::make_shared<Node>();
      n->op = name;
      n->lhs = sum();
      if (!eat(',')) throw ConfigError("expected ',': " + s_);
      n->rhs = sum();
      if (!eat(')')) throw ConfigError("expected ')': " + s_);
      return n;
    }
    auto n = std::make_shared<Node>();
    if (name == "x") n->var = 0;
    else if (name == "y") n->var = 1;
    else if (name == "z") n->var = 2;
    else throw ConfigError("unknown variable \"" + name + "\" in: " + s_);
    return n;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

struct Identity {
  std::string label;
  Sum expr;
  int arity = 0;
};

int max_var(const Sum& s) {
  int m = -1;
  for (const auto& t : s) {
    if (t.node->var >= 0) m = std::max(m, t.node->var);
    else m = std::max({m, max_var(t.node->lhs), max_var(t.node->rhs)});
  }
  return m;
}

Identity make_identity(const std::string& label, const std::string& text) {
  Identity id;
  id.label = label;
  id.expr = IdentityParser(text).parse();
  id.arity = max_var(id.expr) + 1;
  return id;
}

Vec eval_sum(const Sum& s, const Algebra& alg, const std::array<Vec, 3>& vars) {
  Vec acc(alg.dim(), Rational(0));
  for (const auto& t : s) {
    if (t.node->var >= 0) {
      axpy(acc, t.coeff, vars[t.node->var]);
    } else {
      Vec l = eval_sum(t.node->lhs, alg, vars);
      Vec r = eval_sum(t.node->rhs, alg, vars);
      axpy(acc, t.coeff, alg.apply(t.node->op, l, r));
    }
  }
  return acc;
}

struct KindSpec {
  std::vector<std::string> required_ops;
  std::vector<Identity> identities;
};

std::map<StructureKind, KindSpec> build_kind_table() {
  std::map<StructureKind, KindSpec> t;
  auto ids = [](std::initializer_list<std::pair<const char*, const char*>> l) {
    std::vector<Identity> v;
    for (const auto& [label, text] : l) v.push_back(make_identity(label, text));
    return v;
  };

  const std::pair<const char*, const char*> perm_assoc = {
      "perm_assoc", "perm(x, perm(y, z)) - perm(perm(x, y), z)"};
  const std::pair<const char*, const char*> perm_left = {
      "perm_left", "perm(perm(x, y), z) - perm(perm(y, x), z)"};
  const std::pair<const char*, const char*> leibniz = {
      "leibniz",
      "bracket(x, bracket(y, z)) - bracket(bracket(x, y), z) - "
      "bracket(y, bracket(x, z))"};
  const std::pair<const char*, const char*> lie_skew = {"lie_skew",
                                                        "lie(x, y) + lie(y, x)"};
  const std::pair<const char*, const char*> lie_jacobi = {
      "lie_jacobi",
      "lie(x, lie(y, z)) - lie(lie(x, y), z) - lie(y, lie(x, z))"};
  const std::pair<const char*, const char*> ca_comm = {"ca_comm",
                                                       "assoc(x, y) - assoc(y, x)"};
  const std::pair<const char*, const char*> ca_assoc = {
      "ca_assoc", "assoc(x, assoc(y, z)) - assoc(assoc(x, y), z)"};
  const std::pair<const char*, const char*> prelie_axiom = {
      "prelie",
      "prelie(x, prelie(y, z)) - prelie(prelie(x, y), z) - "
      "prelie(y, prelie(x, z)) + prelie(prelie(y, x), z)"};
  const std::pair<const char*, const char*> prelie2_axiom = {
      "prelie2",
      "prelie2(x, prelie2(y, z)) - prelie2(prelie2(x, y), z) - "
      "prelie2(y, prelie2(x, z)) + prelie2(prelie2(y, x), z)"};
  const std::pair<const char*, const char*> zinbiel_axiom = {
      "zinbiel",
      "zinbiel(x, zinbiel(y, z)) - zinbiel(zinbiel(x, y) + zinbiel(y, x), z)"};

  t[StructureKind::permutative] = {{"perm"}, ids({perm_assoc, perm_left})};
  t[StructureKind::leibniz] = {{"bracket"}, ids({leibniz})};
  t[StructureKind::lie] = {{"lie"}, ids({lie_skew, lie_jacobi})};
  t[StructureKind::commutative_associative] = {{"assoc"},
                                               ids({ca_comm, ca_assoc})};
  t[StructureKind::poisson] = {
      {"assoc", "lie"},
      ids({ca_comm, ca_assoc, lie_skew, lie_jacobi,
           {"poisson_leibniz",
            "lie(x, assoc(y, z)) - assoc(lie(x, y), z) - assoc(y, lie(x, z))"}})};
  t[StructureKind::pre_lie] = {{"prelie"}, ids({prelie_axiom})};
  t[StructureKind::zinbiel] = {{"zinbiel"}, ids({zinbiel_axiom})};
  t[StructureKind::pre_poisson] = {
      {"prelie", "zinbiel"},
      ids({prelie_axiom, zinbiel_axiom,
           {"prepois_c1",
            "zinbiel(prelie(x, y) - prelie(y, x), z) - prelie(x, zinbiel(y, z))"
            " + zinbiel(y, prelie(x, z))"},
           {"prepois_c2",
            "prelie(zinbiel(x, y) + zinbiel(y, x), z) - zinbiel(x, prelie(y, z))"
            " - zinbiel(y, prelie(x, z))"}})};
  t[StructureKind::dual_pre_poisson] = {
      {"perm", "bracket"},
      ids({perm_assoc, perm_left, leibniz,
           {"dpp_c1",
            "bracket(x, perm(y, z)) - perm(bracket(x, y), z) - "
            "perm(y, bracket(x, z))"},
           {"dpp_c2",
            "bracket(perm(x, y), z) - perm(x, bracket(y, z)) - "
            "perm(y, bracket(x, z))"},
           {"dpp_c3", "perm(bracket(x, y), z) + perm(bracket(y, x), z)"}})};
  t[StructureKind::dialgebra] = {
      {"rtri", "ltri"},
      ids({{"dia1", "rtri(x, rtri(y, z)) - rtri(rtri(x, y), z)"},
           {"dia2", "ltri(x, ltri(y, z)) - ltri(ltri(x, y), z)"},
           {"dia3", "ltri(ltri(x, y), z) - ltri(x, rtri(y, z))"},
           {"dia4", "ltri(rtri(x, y), z) - rtri(x, ltri(y, z))"},
           {"dia5", "rtri(ltri(x, y), z) - rtri(x, rtri(y, z))"}})};
  const std::vector<std::pair<const char*, const char*>> pperm = {
      {"pperm1a", "ltri(x, ltri(y, z) + rtri(y, z)) - ltri(ltri(x, y), z)"},
      {"pperm1b", "ltri(ltri(x, y), z) - ltri(rtri(y, x), z)"},
      {"pperm1c", "ltri(rtri(y, x), z) - rtri(y, ltri(x, z))"},
      {"pperm2a", "rtri(x, rtri(y, z)) - rtri(ltri(x, y) + rtri(x, y), z)"},
      {"pperm2b",
       "rtri(ltri(x, y) + rtri(x, y), z) - rtri(ltri(y, x) + rtri(y, x), z)"}};
  const std::vector<std::pair<const char*, const char*>> ldend = {
      {"ldend1",
       "succ(prec(x, y) + succ(x, y), z) - succ(x, succ(y, z)) + "
       "succ(y, succ(x, z))"},
      {"ldend2", "prec(succ(x, y), z) + prec(prec(y, x), z)"},
      {"ldend3",
       "prec(x, prec(y, z) + succ(y, z)) - prec(prec(x, y), z) - "
       "succ(y, prec(x, z))"}};
  {
    std::vector<Identity> v;
    for (const auto& [l, s] : pperm) v.push_back(make_identity(l, s));
    t[StructureKind::pre_permutative] = {{"rtri", "ltri"}, std::move(v)};
  }
  {
    std::vector<Identity> v;
    for (const auto& [l, s] : ldend) v.push_back(make_identity(l, s));
    t[StructureKind::leibniz_dendriform] = {{"succ", "prec"}, std::move(v)};
  }
  {
    std::vector<Identity> v;
    for (const auto& [l, s] : pperm) v.push_back(make_identity(l, s));
    for (const auto& [l, s] : ldend) v.push_back(make_identity(l, s));
    const std::vector<std::pair<const char*, const char*>> pdpp = {
        {"pdpp1",
         "prec(x, rtri(y, z) + ltri(y, z)) - ltri(prec(x, y), z) - "
         "rtri(y, prec(x, z))"},
        {"pdpp2",
         "succ(x, ltri(y, z)) - ltri(succ(x, y), z) - "
         "ltri(y, succ(x, z) + prec(x, z))"},
        {"pdpp3",
         "succ(x, rtri(y, z)) - rtri(succ(x, y) + prec(x, y), z) - "
         "rtri(y, succ(x, z))"},
        {"pdpp4",
         "prec(ltri(x, y), z) - ltri(x, succ(y, z) + prec(y, z)) - "
         "rtri(y, prec(x, z))"},
        {"pdpp5",
         "succ(rtri(x, y) + ltri(x, y), z) - rtri(x, succ(y, z)) - "
         "rtri(y, succ(x, z))"},
        {"pdpp6", "prec(rtri(x, y) - ltri(y, x), z)"},
        {"pdpp7", "ltri(succ(x, y) + prec(y, x), z)"},
        {"pdpp8",
         "rtri(succ(x, y) + prec(x, y) + succ(y, x) + prec(y, x), z)"}};
    for (const auto& [l, s] : pdpp) v.push_back(make_identity(l, s));
    t[StructureKind::pre_dual_pre_poisson] = {{"rtri", "ltri", "succ", "prec"},
                                              std::move(v)};
  }
  // Checked via the single mixed condition on the two pre-Lie products.
  t[StructureKind::compatible_pre_lie] = {
      {"prelie", "prelie2"},
      ids({prelie_axiom, prelie2_axiom,
           {"cpl_mixed",
            "prelie2(prelie(x, y), z) - prelie2(x, prelie(y, z)) + "
            "prelie(prelie2(x, y), z) - prelie(x, prelie2(y, z)) - "
            "prelie2(prelie(y, x), z) + prelie2(y, prelie(x, z)) - "
            "prelie(prelie2(y, x), z) + prelie(y, prelie2(x, z))"}})};
  return t;
}

const std::map<StructureKind, KindSpec>& kind_table() {
  static const std::map<StructureKind, KindSpec> t = build_kind_table();
  return t;
}

const std::map<std::string, StructureKind>& name_table() {
  static const std::map<std::string, StructureKind> t = {
      {"permutative", StructureKind::permutative},
      {"leibniz", StructureKind::leibniz},
      {"lie", StructureKind::lie},
      {"commutative_associative", StructureKind::commutative_associative},
      {"poisson", StructureKind::poisson},
      {"pre_lie", StructureKind::pre_lie},
      {"zinbiel", StructureKind::zinbiel},
      {"pre_poisson", StructureKind::pre_poisson},
      {"dual_pre_poisson", StructureKind::dual_pre_poisson},
      {"dialgebra", StructureKind::dialgebra},
      {"pre_permutative", StructureKind::pre_permutative},
      {"leibniz_dendriform", StructureKind::leibniz_dendriform},
      {"pre_dual_pre_poisson", StructureKind::pre_dual_pre_poisson},
      {"compatible_pre_lie", StructureKind::compatible_pre_lie},
  };
  return t;
}

}  // namespace

StructureKind kind_from_string(const std::string& s) {
  auto it = name_table().find(s);
  if (it == name_table().end())
    throw ConfigError("unknown structure kind \"" + s + "\"");
  return it->second;
}

std::string kind_to_string(StructureKind k) {
  for (const auto& [name, kind] : name_table())
    if (kind == k) return name;
  throw ConfigError("unmapped structure kind");
}

const std::vector<std::string>& kind_required_ops(StructureKind k) {
  return kind_table().at(k).required_ops;
}

const std::vector<std::string>& all_kind_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, kind] : name_table()) v.push_back(name);
    return v;
  }();
  return names;
}

VerificationReport check_structure(const Algebra& alg, StructureKind kind) {
  const KindSpec& spec = kind_table().at(kind);
  for (const auto& name : spec.required_ops)
    alg.op(name);  // throws ConfigError naming the missing product
  const std::size_t n = alg.dim();
  VerificationReport report;
  std::array<Vec, 3> vars{zero_vec(n), zero_vec(n), zero_vec(n)};
  int decl = 0;
  for (const auto& id : spec.identities) {
    std::size_t tuples = 1;
    for (int a = 0; a < id.arity; ++a) tuples *= n;
    for (std::size_t flat = 0; flat < tuples; ++flat) {
      std::array<std::size_t, 3> idx{0, 0, 0};
      std::size_t rest = flat;
      for (int a = id.arity - 1; a >= 0; --a) {
        idx[a] = rest % n;
        rest /= n;
      }
      for (int a = 0; a < id.arity; ++a) vars[a] = basis_vec(n, idx[a]);
      Vec residual = eval_sum(id.expr, alg, vars);
      if (!is_zero(residual))
        report.witnesses.push_back(
            Witness{id.label, decl, id.arity, idx, residual});
    }
    ++decl;
  }
  report.sort_canonical();
  return report;
}

void require_structure(const Algebra& alg, StructureKind kind,
                       const std::string& what) {
  VerificationReport r = check_structure(alg, kind);
  if (!r.passed())
    throw PreconditionError(what + " must be a " + kind_to_string(kind) +
                                " algebra",
                            std::move(r));
}

Algebra derived_products(const Algebra& alg) {
  if (!alg.has_op("perm") && !alg.has_op("bracket"))
    throw ConfigError(
        "derived_products needs at least one of \"perm\", \"bracket\"");
  Algebra out = alg;
  const std::size_t n = alg.dim();
  if (alg.has_op("perm")) {
    Tensor3 bs(n, n, n);
    for (const auto& e : alg.op("perm").entries()) {
      bs.add(e.i, e.j, e.k, e.c);
      bs.add(e.j, e.i, e.k, -e.c);
    }
    out.set_op("blacksquare", bs);
  }
  if (alg.has_op("bracket")) {
    Tensor3 sq(n, n, n);
    for (const auto& e : alg.op("bracket").entries()) {
      sq.add(e.i, e.j, e.k, e.c);
      sq.add(e.j, e.i, e.k, e.c);
    }
    out.set_op("square", sq);
  }
  return out;
}

Algebra dialgebra_sub_adjacent(const Algebra& alg) {
  require_structure(alg, StructureKind::dialgebra, "dialgebra_sub_adjacent input");
  const std::size_t n = alg.dim();
  Tensor3 br(n, n, n);
  for (const auto& e : alg.op("rtri").entries()) br.add(e.i, e.j, e.k, e.c);
  for (const auto& e : alg.op("ltri").entries()) br.add(e.j, e.i, e.k, -e.c);
  Algebra out(n);
  out.set_op("bracket", br);
  out.set_basis_names(alg.basis_names());
  return out;
}

Algebra poisson_as_dpp(const Algebra& poisson) {
  Algebra out(poisson.dim());
  out.set_op("perm", poisson.op("assoc"));
  out.set_op("bracket", poisson.op("lie"));
  out.set_basis_names(poisson.basis_names());
  return out;
}

}  // namespace permlei
