#pragma once

#include <map>

#include "pjordan/nilorbit.hpp"

namespace pjordan {

/// Multiset of Jordan block sizes (a partition of the module dimension).
struct JordanType {
  std::vector<int> blocks;  // weakly decreasing

  long long dim() const;
  int max_block() const { return blocks.empty() ? 0 : blocks.front(); }
  long long count_of(int size) const;
  bool operator==(const JordanType&) const = default;
};

std::string to_string(const JordanType& jt);

namespace char0 {

/// Dominant weight multiplicities of the characteristic-0 irreducible M(w).
struct Character {
  Weight highest;
  std::map<Weight, long long> dominant_mults;
  long long dim = 0;
};

/// Multiplicities of integer weights of the restriction to the rank-one
/// subgroup determined by a TauMap.
struct GammaCharacter {
  std::map<int, long long> mults;

  long long total() const;
  long long mult(int t) const;
  int max_weight() const;
};

/// Freudenthal recursion, exact arithmetic. Throws SizeLimit if the number
/// of dominant weights exceeds max_dominant.
Character character(const RootSystem& rs, const Weight& w, long long max_dominant = 1'000'000);

GammaCharacter gamma_character(const Character& ch, const TauMap& t);

/// Block sizes from weight-multiplicity differences: the number of blocks of
/// size s+1 is mult(s) - mult(s+2). Throws MalformedCharacter if any derived
/// count is negative.
JordanType sl2_jordan(const GammaCharacter& gc);

/// Degree of the minimal polynomial over characteristic 0: sigma(w) + 1.
long long k_complex(const TauMap& t, const Weight& w, int p);

/// True iff for every weight of the form w - sum_{i<=f} b_i alpha_i the
/// multiplicity is the same across all ranks in rank_list (w is the pattern
/// padded with zeros at each rank).
bool smith_stability(GroupFamily family, const std::vector<int>& w_pattern, int f,
                     const std::vector<int>& rank_list);

}  // namespace char0
}  // namespace pjordan
