#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "permlei/rational.hpp"

namespace permlei {

// One failed identity instance: which identity, at which basis tuple,
// and the nonzero residual coefficients.
struct Witness {
  std::string identity;
  int decl_index = 0;                  // position of the identity in its table
  int arity = 3;                       // how many of idx are meaningful
  std::array<std::size_t, 3> idx{0, 0, 0};
  std::vector<Rational> residual;
};

struct VerificationReport {
  std::vector<Witness> witnesses;

  bool passed() const { return witnesses.empty(); }
  // Declaration order of identities first, then lexicographic indices.
  void sort_canonical();
  void merge(const VerificationReport& other);
  std::string summary(std::size_t max_witnesses = 20,
                      const std::vector<std::string>& basis_names = {}) const;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

// Missing operation names, unknown kinds, malformed in-memory data.
struct ConfigError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  std::size_t rank;
  SingularMatrixError(std::size_t r, const std::string& msg)
      : Error(msg), rank(r) {}
};

// A construction was called on inputs failing its structure checks;
// carries the failing report.
struct PreconditionError : Error {
  VerificationReport report;
  PreconditionError(const std::string& msg, VerificationReport rep)
      : Error(msg), report(std::move(rep)) {}
};

}  // namespace permlei
