#pragma once

#include <optional>
#include <string>

#include "pjordan/gfp.hpp"

namespace pjordan {
namespace oracle {

inline constexpr int kDefaultDimCap = 20'000;

/// Block-diagonal Jordan matrix over GF(p) with the given block sizes;
/// a size-d block is graded d-1, d-3, ..., -(d-1).
GfpMatrix jordan_matrix(int p, const std::vector<int>& blocks);

GfpMatrix natural_matrix(const UnipotentClass& cls);

/// Induced action on degree-a monomials, lexicographic monomial order.
GfpMatrix sym_power(const GfpMatrix& m, int a, int dim_cap = kDefaultDimCap);

/// Induced action on the wedge basis of sorted k-tuples.
GfpMatrix ext_power(const GfpMatrix& m, int k, int dim_cap = kDefaultDimCap);

/// Kronecker product; gradings add.
GfpMatrix tensor(const GfpMatrix& a, const GfpMatrix& b, int dim_cap = kDefaultDimCap);

/// One factor of a module construction, optionally twisted by a power of the
/// Frobenius endomorphism (twists do not change matrices over the prime
/// field, but they shift the factor's contribution to the highest weight).
struct Factor {
  enum class Kind { Natural, Sym, Ext, Spin };
  Kind kind = Kind::Natural;
  int param = 0;  // a for Sym, k for Ext
  int twist = 0;

  bool operator==(const Factor&) const = default;
};

struct Construction {
  std::vector<Factor> factors;

  bool operator==(const Construction&) const = default;
};

std::string to_string(const Construction& c);
Construction parse_construction(const std::string& s);

/// Highest weight sum_j p^{twist_j} * omega(factor_j) in fundamental coords.
Weight construction_weight(const GroupType& g, const Construction& c, int p);

/// Exact dimension (product over factors); throws SizeLimit above dim_cap.
long long construction_dim(const GroupType& g, const Construction& c,
                           int dim_cap = kDefaultDimCap);

/// Whether every factor has a matrix realization here (Spin does not).
bool matrix_realizable(const Construction& c);

/// Policy list of constructions whose modular irreducibility is on record:
/// A_r S^a (a<p) and exterior powers, C_r S^a (a<p), B_r spin, and products
/// of such pieces under distinct Frobenius twists. Returns true only when
/// expected_dim matches the recorded dimension.
bool certify_irreducible(const GroupType& g, const Construction& c, int p, long long expected_dim);

/// Matrix of the class element acting on the construction.
GfpMatrix construction_matrix(const UnipotentClass& cls, const Construction& c,
                              int dim_cap = kDefaultDimCap);

}  // namespace oracle
}  // namespace pjordan
