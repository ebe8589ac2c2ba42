#include "pjordan/nilorbit.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pjordan {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void check_parity(const GroupType& g, const std::vector<int>& parts) {
  if (g.family == GroupFamily::A) return;
  std::map<int, int> mult;
  for (int d : parts) ++mult[d];
  for (auto [d, k] : mult) {
    bool bad = (g.family == GroupFamily::C) ? (d % 2 == 1 && k % 2 == 1)
                                            : (d % 2 == 0 && k % 2 == 1);
    if (bad)
      fail(Errc::ParityViolation,
           std::string("part ") + std::to_string(d) + " has odd multiplicity " +
               std::to_string(k) + " in type " + family_char(g.family));
  }
}

void check_partition_shape(const GroupType& g, const std::vector<int>& parts) {
  for (int d : parts)
    if (d <= 0) fail(Errc::BadPartitionSum, "parts must be positive");
  long long sum = std::accumulate(parts.begin(), parts.end(), 0LL);
  if (sum != natural_dim(g))
    fail(Errc::BadPartitionSum, "parts sum to " + std::to_string(sum) + ", natural dimension is " +
                                    std::to_string(natural_dim(g)));
  if (std::all_of(parts.begin(), parts.end(), [](int d) { return d == 1; }))
    fail(Errc::IdentityClass, "all parts equal 1");
  check_parity(g, parts);
}

}  // namespace

int embedding_rank(const GroupType& g, const std::vector<int>& partition) {
  long long s = 0;
  for (int d : partition)
    if (d > 1) s += d;
  switch (g.family) {
    case GroupFamily::A: return static_cast<int>(s - 1);
    case GroupFamily::B: return static_cast<int>((s - 1 + 1) / 2);  // ceil((s-1)/2)
    case GroupFamily::C: return static_cast<int>(s / 2);
    case GroupFamily::D: return static_cast<int>((s + 1) / 2);      // ceil(s/2)
  }
  fail(Errc::Internal, "bad family");
}

UnipotentClass validate_class(const GroupType& g, int p, std::vector<int> partition) {
  validate_group(g);
  if (p <= 2 || !is_prime(p)) fail(Errc::InvalidPrime, std::to_string(p) + " is not an odd prime");
  std::sort(partition.begin(), partition.end(), std::greater<>());
  check_partition_shape(g, partition);
  for (int d : partition)
    if (d > p)
      fail(Errc::PartExceedsP, "part " + std::to_string(d) + " exceeds p = " + std::to_string(p));
  int m = embedding_rank(g, partition);
  if (m >= g.rank)
    fail(Errc::MNotLessThanR, "embedding rank m = " + std::to_string(m) +
                                  " is not below the group rank " + std::to_string(g.rank));
  return UnipotentClass{g, p, std::move(partition), m};
}

LabelledDiagram diagram_for(const RootSystem& rs, const std::vector<int>& partition) {
  const GroupType g = rs.group;
  std::vector<int> parts = partition;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  check_partition_shape(g, parts);

  // Each part d contributes the sl2 string d-1, d-3, ..., -(d-1).
  std::vector<int> positives;
  int zeros = 0;
  for (int d : parts)
    for (int v = d - 1; v >= -(d - 1); v -= 2) {
      if (v > 0) positives.push_back(v);
      if (v == 0) ++zeros;
    }
  std::sort(positives.begin(), positives.end(), std::greater<>());

  LabelledDiagram out;
  if (g.family == GroupFamily::A) {
    for (int d : parts)
      for (int v = d - 1; v >= -(d - 1); v -= 2) out.e_seq.push_back(v);
    std::sort(out.e_seq.begin(), out.e_seq.end(), std::greater<>());
  } else {
    // Nonnegative representatives: one per +/- pair; zeros pair among
    // themselves, and for B the one left unpaired is dropped.
    out.e_seq = positives;
    out.e_seq.insert(out.e_seq.end(), zeros / 2, 0);
  }
  const size_t expected = (g.family == GroupFamily::A) ? g.rank + 1 : g.rank;
  if (out.e_seq.size() != expected) fail(Errc::Internal, "e-sequence length mismatch");

  // delta_i from the eps-expansion of alpha_i.
  out.deltas.resize(g.rank);
  for (int i = 1; i <= g.rank; ++i) {
    auto eps = to_eps(rs, root_to_weight(rs, Root{[&] {
                        std::vector<int> b(g.rank, 0);
                        b[i - 1] = 1;
                        return b;
                      }()}));
    BigRat v = 0;
    for (int k = 0; k < rs.eps_dim; ++k)
      if (eps[k] != 0) v += eps[k] * out.e_seq[k];
    int d = static_cast<int>(to_ll(rat_to_int(v, Errc::Internal)));
    if (d < 0 || d > 2) fail(Errc::Internal, "diagram label outside {0,1,2}");
    out.deltas[i - 1] = d;
  }
  return out;
}

LabelledDiagram diagram_from_partition(const RootSystem& rs, const UnipotentClass& cls) {
  if (!(rs.group == cls.group)) fail(Errc::InvalidArgument, "class/system group mismatch");
  return diagram_for(rs, cls.partition);
}

TauMap make_tau_map(const RootSystem& rs, const LabelledDiagram& d) {
  if (static_cast<int>(d.deltas.size()) != rs.rank())
    fail(Errc::InvalidArgument, "diagram rank mismatch");
  TauMap t;
  t.system = &rs;
  t.diagram = d;
  // tau(w) = delta . C^{-1} a, i.e. the functional (C^{-1})^T delta.
  t.fund_functional.assign(rs.rank(), 0);
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (d.deltas[j] != 0) t.fund_functional[i] += rs.inv_cartan[j][i] * d.deltas[j];
  return t;
}

long long tau(const TauMap& t, const Weight& w) {
  if (static_cast<int>(w.fund.size()) != t.system->rank())
    fail(Errc::InvalidArgument, "weight rank mismatch");
  BigRat v = 0;
  for (size_t i = 0; i < w.fund.size(); ++i)
    if (w.fund[i] != 0) v += t.fund_functional[i] * w.fund[i];
  return to_ll(rat_to_int(v, Errc::NonIntegralResult));
}

std::vector<Weight> p_adic_digits(const Weight& w, int p) {
  if (!is_dominant(w)) fail(Errc::NotDominant, "p-adic digits of a non-dominant weight");
  std::vector<Weight> digits;
  std::vector<int> rem = w.fund;
  bool any = true;
  while (any) {
    Weight d = zero_weight(static_cast<int>(rem.size()));
    any = false;
    for (size_t i = 0; i < rem.size(); ++i) {
      d.fund[i] = rem[i] % p;
      rem[i] /= p;
      if (rem[i] != 0) any = true;
    }
    digits.push_back(std::move(d));
  }
  while (digits.size() > 1 && is_zero(digits.back())) digits.pop_back();
  return digits;
}

Weight digit_sum(const Weight& w, int p) {
  Weight s = zero_weight(static_cast<int>(w.fund.size()));
  for (const Weight& d : p_adic_digits(w, p)) s = add(s, d);
  return s;
}

long long sigma(const TauMap& t, const Weight& w, int p) {
  return tau(t, digit_sum(w, p));
}

CBreakdown c_breakdown(const UnipotentClass& cls, const LabelledDiagram& d) {
  int full = std::accumulate(d.deltas.begin(), d.deltas.end(), 0);
  int c;
  if (cls.group.family == GroupFamily::A) {
    if (full % 2 != 0) fail(Errc::Internal, "odd label sum in type A");
    c = full / 2;
  } else {
    c = full;
  }
  int l = (cls.group.family == GroupFamily::A) ? (cls.m + 2) / 2 : cls.m;
  int truncated = 0;
  for (int i = 0; i < l && i < static_cast<int>(d.deltas.size()); ++i) truncated += d.deltas[i];
  return CBreakdown{c, truncated, l};
}

int c_of_class(const UnipotentClass& cls, const LabelledDiagram& d) {
  CBreakdown b = c_breakdown(cls, d);
  if (b.c_definition != b.c_truncated)
    fail(Errc::LemmaMismatch,
         "label sum " + std::to_string(b.c_definition) + " != truncated sum " +
             std::to_string(b.c_truncated) + " (l = " + std::to_string(b.l) + ")");
  return b.c_definition;
}

int d_bound(const GroupType& g, int r, int m) {
  if (m < 0 || m >= r) fail(Errc::InvalidArgument, "d_bound wants 0 <= m < r");
  return g.family == GroupFamily::A ? r - m : 2 * (r - m);
}

bool theorem1_applicable(const GroupType& g, int r, int m) {
  if (m <= 0 || m >= r) fail(Errc::InvalidArgument, "applicability wants 0 < m < r");
  switch (g.family) {
    case GroupFamily::A: return r - m > 1;
    case GroupFamily::B:
    case GroupFamily::D: return m > 1 && r - m > 3;
    case GroupFamily::C: return true;
  }
  fail(Errc::Internal, "bad family");
}

}  // namespace pjordan
