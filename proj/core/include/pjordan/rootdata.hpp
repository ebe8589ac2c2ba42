#pragma once

#include <set>
#include <string>
#include <vector>

#include "pjordan/common.hpp"

namespace pjordan {

enum class GroupFamily : char { A = 'A', B = 'B', C = 'C', D = 'D' };

GroupFamily family_from_char(char c);
inline char family_char(GroupFamily f) { return static_cast<char>(f); }

/// Classical group type in Bourbaki labelling: A_r (r>=1), B_r (r>=2),
/// C_r (r>=1), D_r (r>=3).
struct GroupType {
  GroupFamily family;
  int rank;

  bool operator==(const GroupType&) const = default;
};

/// Throws InvalidRank if the rank is below the family minimum.
void validate_group(const GroupType& g);

/// Dimension of the natural (standard) module.
int natural_dim(const GroupType& g);

/// Weight in fundamental-weight coordinates (length = rank).
struct Weight {
  std::vector<int> fund;

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;
};

Weight zero_weight(int rank);
Weight fundamental_weight(int rank, int i);  // 1-based index
bool is_dominant(const Weight& w);
bool is_zero(const Weight& w);
bool is_p_restricted(const Weight& w, int p);
Weight add(const Weight& a, const Weight& b);
Weight scale(int c, const Weight& w);
std::string to_string(const Weight& w);

/// Root in simple-root coordinates (length = rank).
struct Root {
  std::vector<int> simple;

  bool operator==(const Root&) const = default;
  auto operator<=>(const Root&) const = default;
};

int height(const Root& r);

/// Root system data for one classical type and rank. Immutable after
/// construction; all operations on it are pure functions.
struct RootSystem {
  GroupType group;
  std::vector<std::vector<int>> cartan;     // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<Root> positive_roots;         // sorted by height, then lexicographic
  std::vector<Weight> epsilon_weights;      // eps_i in fundamental coordinates
  Root highest_root;

  // Derived tables.
  int eps_dim = 0;                               // r+1 for A, r otherwise
  std::vector<std::vector<BigRat>> omega_eps;    // row i: eps-coords of omega_{i+1}
  std::vector<std::vector<BigRat>> inv_cartan;   // cartan^{-1}
  std::set<std::vector<int>> root_set;           // all roots, simple-root coords

  int rank() const { return group.rank; }
};

RootSystem build_root_system(const GroupType& g);

/// Fundamental coordinates of a root (cartan * simple coords).
Weight root_to_weight(const RootSystem& rs, const Root& r);

/// Coordinates of a weight in the simple-root basis (exact rationals).
std::vector<BigRat> root_coords(const RootSystem& rs, const Weight& w);

/// eps-coordinates of a weight (for A_r the traceless representative,
/// denominator r+1; for B_r/D_r half-integers on spin weights).
std::vector<BigRat> to_eps(const RootSystem& rs, const Weight& w);

/// Standard W-invariant bilinear form, (eps_i, eps_j) = delta_ij.
BigRat eps_form(const std::vector<BigRat>& a, const std::vector<BigRat>& b);

/// <w, root^vee> = 2(w, root)/(root, root). Throws NotARoot for non-roots.
long long coroot_pairing(const RootSystem& rs, const Weight& w, const Root& root);

/// True iff <wbar, highest_root^vee> >= p.
bool is_p_large(const RootSystem& rs, const Weight& wbar, int p);

/// Unique dominant Weyl-conjugate of w.
Weight dominant_rep(const RootSystem& rs, const Weight& w);

/// Full Weyl orbit of a weight (deterministic BFS order from the dominant
/// representative). Never materializes W itself.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

/// |W.w| for dominant w. Throws NotDominant.
long long dominant_orbit_size(const RootSystem& rs, const Weight& w);

/// Dimension of the characteristic-0 irreducible with highest weight w,
/// by the product formula over positive roots (exact arithmetic).
long long weyl_dimension(const RootSystem& rs, const Weight& w);

}  // namespace pjordan
