#pragma once

#include <vector>

#include "pjordan/rootdata.hpp"

namespace pjordan {

/// Conjugacy class of an order-p unipotent element, given by its Jordan
/// partition in the natural module. m is the smallest rank of a naturally
/// embedded same-family subgroup containing the class.
struct UnipotentClass {
  GroupType group;
  int p = 0;
  std::vector<int> partition;  // weakly decreasing
  int m = 0;
};

/// Node labels delta_i of the weighted Dynkin diagram together with the
/// e-sequence e_i = tau(eps_i) it was computed from.
struct LabelledDiagram {
  std::vector<int> deltas;  // length r, each in {0,1,2}
  std::vector<int> e_seq;   // length r+1 for A, r otherwise; weakly decreasing
};

/// The additive map tau on the weight lattice with tau(alpha_i) = delta_i.
/// Holds the precomputed functional in fundamental coordinates.
struct TauMap {
  const RootSystem* system = nullptr;
  LabelledDiagram diagram;
  std::vector<BigRat> fund_functional;  // tau(w) = sum_i fund_functional[i] * w.fund[i]
};

/// Full validation: partition sum, order-p condition, family parity,
/// non-identity, and the embedding rank m (must satisfy m < rank).
UnipotentClass validate_class(const GroupType& g, int p, std::vector<int> partition);

bool is_prime(long long n);

/// Smallest same-family rank whose natural module holds the partition with
/// its 1-parts stripped.
int embedding_rank(const GroupType& g, const std::vector<int>& partition);

/// Diagram of a partition-level class (no embedding-rank requirement):
/// sum, parity and non-identity are still enforced.
LabelledDiagram diagram_for(const RootSystem& rs, const std::vector<int>& partition);

LabelledDiagram diagram_from_partition(const RootSystem& rs, const UnipotentClass& cls);

TauMap make_tau_map(const RootSystem& rs, const LabelledDiagram& d);

/// tau(w); throws NonIntegralResult for weight/diagram pairs outside the
/// weight lattice image (never for diagrams produced above).
long long tau(const TauMap& t, const Weight& w);

/// Base-p digits (omega^0, ..., omega^s), each p-restricted, trailing zeros
/// trimmed; the zero weight yields the singleton (0).
std::vector<Weight> p_adic_digits(const Weight& w, int p);

/// Digit sum omega_bar = sum_j omega^j.
Weight digit_sum(const Weight& w, int p);

/// sigma(w) = tau(digit_sum(w)).
long long sigma(const TauMap& t, const Weight& w, int p);

/// c of the class: full label sum (half of it for type A), cross-checked
/// against the truncated sum over the first l nodes (l = floor((m+2)/2) for
/// A, l = m otherwise). Throws LemmaMismatch if the two routes disagree.
int c_of_class(const UnipotentClass& cls, const LabelledDiagram& d);

struct CBreakdown {
  int c_definition;   // full/half label sum
  int c_truncated;    // sum of the first l labels
  int l;
};
CBreakdown c_breakdown(const UnipotentClass& cls, const LabelledDiagram& d);

/// r-m for type A, 2(r-m) otherwise.
int d_bound(const GroupType& g, int r, int m);

/// Rank constraints of the size-p lower bound: r-m>1 for A, m>1 and r-m>3
/// for B and D, none for C beyond 0<m<r.
bool theorem1_applicable(const GroupType& g, int r, int m);

}  // namespace pjordan
