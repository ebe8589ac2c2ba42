#include "pjordan/modp.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace pjordan {
namespace modp {

long long BlockMultiset::total_dim() const {
  long long s = 0;
  for (auto& [size, cnt] : counts) s += static_cast<long long>(size) * cnt;
  return s;
}

long long BlockMultiset::count(int size) const {
  auto it = counts.find(size);
  return it == counts.end() ? 0 : it->second;
}

BlockMultiset from_jordan(const JordanType& jt) {
  BlockMultiset b;
  for (int s : jt.blocks) ++b.counts[s];
  return b;
}

JordanType to_jordan(const BlockMultiset& b) {
  JordanType jt;
  for (auto it = b.counts.rbegin(); it != b.counts.rend(); ++it)
    for (long long i = 0; i < it->second; ++i) jt.blocks.push_back(it->first);
  return jt;
}

std::vector<Weight> steinberg_digits(const Weight& w, int p) { return p_adic_digits(w, p); }

BlockMultiset tensor_blocks_mod_p(int a, int b, int p) {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > p) fail(Errc::BlockTooLarge, "block sizes must lie in 1..p");

  static std::mutex memo_mutex;
  static std::map<std::tuple<int, int, int>, BlockMultiset> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({a, b, p});
    if (it != memo.end()) return it->second;
  }

  // t = max(0, a+b-p) full blocks J_p; the rest is the truncated
  // Clebsch-Gordan ladder b-a+1, b-a+3, ..., a+b-1-2t.
  BlockMultiset out;
  int t = std::max(0, a + b - p);
  if (t > 0) out.counts[p] += t;
  for (int s = b - a + 1; s <= a + b - 1 - 2 * t; s += 2) ++out.counts[s];
  if (out.total_dim() != static_cast<long long>(a) * b)
    fail(Errc::Internal, "tensor block rule dimension mismatch");

  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(std::make_tuple(a, b, p), out);
  return out;
}

BlockMultiset tensor_type_mod_p(const BlockMultiset& t1, const BlockMultiset& t2, int p) {
  BlockMultiset out;
  for (auto& [s1, c1] : t1.counts)
    for (auto& [s2, c2] : t2.counts) {
      BlockMultiset piece = tensor_blocks_mod_p(s1, s2, p);
      for (auto& [s, c] : piece.counts) out.counts[s] += c * c1 * c2;
    }
  return out;
}

long long size_p_count(const BlockMultiset& t, int p) { return t.count(p); }

Prediction predict(const UnipotentClass& cls, const LabelledDiagram& diagram, const Weight& w,
                   int p) {
  if (p != cls.p) fail(Errc::InvalidArgument, "prediction prime differs from the class prime");
  if (!is_dominant(w)) fail(Errc::NotDominant, "weight must be dominant");
  if (is_zero(w)) fail(Errc::InvalidArgument, "weight must be nonzero");

  RootSystem rs = build_root_system(cls.group);
  TauMap t = make_tau_map(rs, diagram);

  Prediction pr;
  pr.group = cls.group;
  pr.p = p;
  pr.m = cls.m;
  pr.omega_bar = digit_sum(w, p);
  pr.sigma = tau(t, pr.omega_bar);
  pr.c_x = c_of_class(cls, diagram);
  pr.k_pred = static_cast<int>(std::min<long long>(p, pr.sigma + 1));
  pr.p_large_for_x = pr.sigma >= p;
  pr.rank_applicable = theorem1_applicable(cls.group, cls.group.rank, cls.m);
  pr.theorem1_hypothesis = pr.rank_applicable && pr.sigma >= p - 1 + pr.c_x;
  pr.d_bound = d_bound(cls.group, cls.group.rank, cls.m);
  return pr;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Undetermined: return "UNDETERMINED";
    case Verdict::SkippedUncertified: return "SKIPPED_UNCERTIFIED";
    case Verdict::SkippedSize: return "SKIPPED_SIZE";
  }
  return "?";
}

VerdictOutcome theorem1_verdict(const Prediction& pred, const BlockMultiset& observed, int p) {
  VerdictOutcome out;
  out.observed_size_p = size_p_count(observed, p);
  if (pred.theorem1_hypothesis) {
    out.verdict = out.observed_size_p > pred.d_bound ? Verdict::Pass : Verdict::Fail;
  } else if (pred.sigma >= p - 1 && pred.sigma < p - 1 + pred.c_x) {
    out.verdict = Verdict::Undetermined;  // the gap regime claims nothing
  } else {
    out.verdict = Verdict::Pass;  // vacuous
  }
  return out;
}

}  // namespace modp
}  // namespace pjordan
