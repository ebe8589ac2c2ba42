#pragma once

#include <functional>

#include "pjordan/report.hpp"

namespace pjordan {
namespace cli {

/// All valid order-p classes of the group, ordered by partition.
std::vector<UnipotentClass> valid_classes(const GroupType& g, int p);

/// Certified, matrix-realizable constructions under the dimension cap:
/// single symmetric/exterior powers and products of up to max_factors pieces
/// twisted by distinct Frobenius powers 0,1,2,... Higher twist patterns give
/// the same matrices and the same sigma, so only the canonical pattern is
/// enumerated.
std::vector<oracle::Construction> certified_constructions(const GroupType& g, int p,
                                                          long long max_dim,
                                                          int max_factors = 3);

CaseKey make_case_key(const UnipotentClass& cls, const Weight& w, const std::string& construction);

/// Prediction plus, when requested and feasible, the oracle Jordan type and
/// the size-p verdict.
VerdictReport run_case(const UnipotentClass& cls, const oracle::Construction& c, long long max_dim,
                       bool allow_uncertified);

struct SweepOptions {
  std::vector<GroupFamily> families;
  int rank_lo = 0, rank_hi = 0;
  std::vector<int> primes;
  long long max_dim = 3000;
  int threads = 1;
  bool allow_uncertified = false;
};

/// Enumerates (class, construction) cases in CaseKey order, runs them (in
/// parallel when requested) and emits reports in deterministic order.
Summary theorem1_sweep(const SweepOptions& opt,
                       const std::function<void(const VerdictReport&)>& emit);

struct Prop2Options {
  GroupFamily family = GroupFamily::A;
  int m = 0;
  int a = 0;
  int p = 0;
  int rank_lo = 0, rank_hi = 0;
  long long max_dim = 3000;
};

struct Prop2Result {
  std::string regime;  // "stable", "boundary", or "inapplicable"
  int c = 0;
  std::vector<int> ranks;
  std::vector<long long> size_p_counts;
  std::vector<long long> checked_values;  // counts, or counts - d(r-m) on the boundary
  bool constant = true;
};

/// Regular class of the rank-m subgroup, S^a of the natural module across a
/// rank range; checks the rank-stability of the size-p count.
Prop2Result prop2_scan(const Prop2Options& opt);

/// Partition of the regular class of the rank-m same-family subgroup, padded
/// with 1-parts to the given rank.
std::vector<int> regular_partition(const GroupType& g, int m);

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& f);

}  // namespace cli
}  // namespace pjordan
