#pragma once

#include <map>
#include <string>
#include <vector>

#include "permlei/report.hpp"
#include "permlei/tensor3.hpp"

namespace permlei {

// The universal carrier: a dimension plus named bilinear operations as
// structure-constant tensors. Which names must be present depends on the
// structure kind being checked (e.g. "perm"+"bracket" for dual
// pre-Poisson, "rtri"+"ltri"+"succ"+"prec" for pre-dual pre-Poisson).
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }

  bool has_op(const std::string& name) const { return ops_.count(name) != 0; }
  const Tensor3& op(const std::string& name) const;  // ConfigError if absent
  Algebra& set_op(const std::string& name, Tensor3 t);
  const std::map<std::string, Tensor3>& ops() const { return ops_; }

  // e_i * e_j under the named operation.
  Vec basis_product(const std::string& name, std::size_t i,
                    std::size_t j) const;
  Vec apply(const std::string& name, const Vec& x, const Vec& y) const;
  Matrix left_op(const std::string& name, std::size_t i) const;
  Matrix right_op(const std::string& name, std::size_t i) const;

  // Optional, used only for pretty-printing witnesses.
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  void set_basis_names(std::vector<std::string> names);

  bool operator==(const Algebra& o) const {
    return dim_ == o.dim_ && ops_ == o.ops_;
  }

 private:
  std::size_t dim_ = 0;
  std::map<std::string, Tensor3> ops_;
  std::vector<std::string> basis_names_;
};

enum class StructureKind {
  permutative,
  leibniz,
  lie,
  commutative_associative,
  poisson,
  pre_lie,
  zinbiel,
  pre_poisson,
  dual_pre_poisson,
  dialgebra,
  pre_permutative,
  leibniz_dendriform,
  pre_dual_pre_poisson,
  compatible_pre_lie,
};

StructureKind kind_from_string(const std::string& s);  // ConfigError on typo
std::string kind_to_string(StructureKind k);
const std::vector<std::string>& kind_required_ops(StructureKind k);
const std::vector<std::string>& all_kind_names();

// Evaluates every defining multilinear identity of the kind on every
// basis tuple; by multilinearity this decides the identity on all of A.
VerificationReport check_structure(const Algebra& alg, StructureKind kind);

// Throwing convenience used by constructions as their precondition gate.
void require_structure(const Algebra& alg, StructureKind kind,
                       const std::string& what);

// Adds "blacksquare" (x*y - y*x from "perm") and/or "square"
// ([x,y] + [y,x] from "bracket").
Algebra derived_products(const Algebra& alg);

// [x,y] = x |> y - y <| x from a dialgebra ("rtri"/"ltri").
Algebra dialgebra_sub_adjacent(const Algebra& alg);

// View a Poisson algebra ("assoc"/"lie") as a dual pre-Poisson algebra
// ("perm"/"bracket") with the same two products.
Algebra poisson_as_dpp(const Algebra& poisson);

}  // namespace permlei
