#pragma once

#include <map>

#include "pjordan/char0.hpp"

namespace pjordan {
namespace modp {

/// Jordan blocks of a single order-p unipotent as size -> count; all sizes
/// are at most p.
struct BlockMultiset {
  std::map<int, long long> counts;

  long long total_dim() const;
  long long count(int size) const;
  bool operator==(const BlockMultiset&) const = default;
};

BlockMultiset from_jordan(const JordanType& jt);
JordanType to_jordan(const BlockMultiset& b);

/// Base-p digits of the highest weight; the irreducible is the twisted
/// tensor product of the digit irreducibles, and twisting does not change
/// the Jordan form over the prime field.
std::vector<Weight> steinberg_digits(const Weight& w, int p);

/// Jordan type of J_a (x) J_b over GF(p), 1 <= a, b <= p. Memoized and safe
/// for concurrent use.
BlockMultiset tensor_blocks_mod_p(int a, int b, int p);

/// Bilinear extension to multisets.
BlockMultiset tensor_type_mod_p(const BlockMultiset& t1, const BlockMultiset& t2, int p);

long long size_p_count(const BlockMultiset& t, int p);

struct Prediction {
  GroupType group;
  int p = 0;
  int m = 0;
  long long sigma = 0;
  Weight omega_bar;
  int c_x = 0;
  int k_pred = 0;              // min(p, sigma + 1)
  bool p_large_for_x = false;  // sigma >= p
  bool rank_applicable = false;
  bool theorem1_hypothesis = false;  // sigma >= p-1+c_x AND rank_applicable
  int d_bound = 0;
};

/// Assembles all invariants for a class and a dominant nonzero weight.
Prediction predict(const UnipotentClass& cls, const LabelledDiagram& diagram, const Weight& w,
                   int p);

enum class Verdict { Pass, Fail, Undetermined, SkippedUncertified, SkippedSize };
const char* verdict_name(Verdict v);

struct VerdictOutcome {
  Verdict verdict;
  long long observed_size_p = 0;
};

/// PASS iff the hypothesis fails vacuously or the observed size-p count
/// strictly exceeds d_bound; the regime p-1 <= sigma < p-1+c_x is reported
/// as UNDETERMINED.
VerdictOutcome theorem1_verdict(const Prediction& pred, const BlockMultiset& observed, int p);

}  // namespace modp
}  // namespace pjordan
