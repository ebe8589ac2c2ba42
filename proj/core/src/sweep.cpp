#include "pjordan/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace pjordan {
namespace cli {

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int d = std::min(remaining, max_part); d >= 1; --d) {
    cur.push_back(d);
    gen_partitions(remaining - d, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<UnipotentClass> valid_classes(const GroupType& g, int p) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  gen_partitions(natural_dim(g), std::min(p, natural_dim(g)), cur, parts);
  std::sort(parts.begin(), parts.end());
  std::vector<UnipotentClass> out;
  for (auto& pt : parts) {
    try {
      out.push_back(validate_class(g, p, pt));
    } catch (const Error&) {
      // not a valid order-p class of this group
    }
  }
  return out;
}

std::vector<oracle::Construction> certified_constructions(const GroupType& g, int p,
                                                          long long max_dim, int max_factors) {
  using oracle::Construction;
  using oracle::Factor;

  std::vector<Factor> pieces;
  if (g.family == GroupFamily::A || g.family == GroupFamily::C) {
    for (int a = 1; a < p; ++a) pieces.push_back(Factor{Factor::Kind::Sym, a, 0});
    if (g.family == GroupFamily::A)
      for (int k = 2; k <= g.rank; ++k) pieces.push_back(Factor{Factor::Kind::Ext, k, 0});
  }

  auto dim_of = [&](const Construction& c) -> long long {
    try {
      return oracle::construction_dim(g, c, std::numeric_limits<int>::max());
    } catch (const Error&) {
      return -1;
    }
  };

  std::vector<Construction> out;
  auto push_if_small = [&](Construction c) {
    long long d = dim_of(c);
    if (d > 0 && d <= max_dim) out.push_back(std::move(c));
  };

  for (size_t i = 0; i < pieces.size(); ++i) push_if_small(Construction{{pieces[i]}});
  if (max_factors >= 2) {
    for (size_t i = 0; i < pieces.size(); ++i)
      for (size_t j = i; j < pieces.size(); ++j) {
        Construction c{{pieces[i], pieces[j]}};
        c.factors[1].twist = 1;
        push_if_small(std::move(c));
      }
  }
  if (max_factors >= 3) {
    for (size_t i = 0; i < pieces.size(); ++i)
      for (size_t j = i; j < pieces.size(); ++j)
        for (size_t k = j; k < pieces.size(); ++k) {
          Construction c{{pieces[i], pieces[j], pieces[k]}};
          c.factors[1].twist = 1;
          c.factors[2].twist = 2;
          push_if_small(std::move(c));
        }
  }
  return out;
}

CaseKey make_case_key(const UnipotentClass& cls, const Weight& w,
                      const std::string& construction) {
  CaseKey k;
  k.family = family_char(cls.group.family);
  k.rank = cls.group.rank;
  k.p = cls.p;
  k.partition = cls.partition;
  k.weight = w.fund;
  k.construction = construction;
  return k;
}

VerdictReport run_case(const UnipotentClass& cls, const oracle::Construction& c, long long max_dim,
                       bool allow_uncertified) {
  VerdictReport rep;
  Weight w = oracle::construction_weight(cls.group, c, cls.p);
  rep.key = make_case_key(cls, w, oracle::to_string(c));

  long long dim;
  try {
    dim = oracle::construction_dim(cls.group, c,
                                   static_cast<int>(std::min<long long>(max_dim, oracle::kDefaultDimCap)));
  } catch (const Error& e) {
    if (e.code != Errc::SizeLimit) throw;
    rep.verdict = modp::Verdict::SkippedSize;
    rep.reason = "dimension exceeds the cap";
    return rep;
  }

  if (!oracle::certify_irreducible(cls.group, c, cls.p, dim) && !allow_uncertified) {
    rep.verdict = modp::Verdict::SkippedUncertified;
    rep.reason = "construction is not on the certified list";
    return rep;
  }

  RootSystem rs = build_root_system(cls.group);
  LabelledDiagram diagram = diagram_from_partition(rs, cls);
  rep.prediction = modp::predict(cls, diagram, w, cls.p);

  oracle::GfpMatrix mat = oracle::construction_matrix(cls, c, static_cast<int>(std::min<long long>(
                                                                  max_dim, oracle::kDefaultDimCap)));
  rep.observed = oracle::jordan_type(mat);

  auto outcome = modp::theorem1_verdict(*rep.prediction, modp::from_jordan(*rep.observed), cls.p);
  rep.verdict = outcome.verdict;
  if (rep.observed->max_block() != rep.prediction->k_pred)
    rep.reason = "max block " + std::to_string(rep.observed->max_block()) + " != k_pred " +
                 std::to_string(rep.prediction->k_pred);
  if (rep.verdict == modp::Verdict::Fail)
    rep.reason = "size-p count " + std::to_string(outcome.observed_size_p) +
                 " does not exceed d = " + std::to_string(rep.prediction->d_bound);
  return rep;
}

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& f) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  int nthreads = std::min<size_t>(threads, count);
  std::exception_ptr first_error;
  std::mutex err_mutex;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

Summary theorem1_sweep(const SweepOptions& opt,
                       const std::function<void(const VerdictReport&)>& emit) {
  if (opt.rank_lo > opt.rank_hi || opt.families.empty() || opt.primes.empty())
    fail(Errc::InvalidArgument, "empty sweep range");

  struct Case {
    UnipotentClass cls;
    oracle::Construction c;
    CaseKey key;
  };
  std::vector<Case> cases;

  std::vector<GroupFamily> families = opt.families;
  std::sort(families.begin(), families.end(),
            [](GroupFamily a, GroupFamily b) { return family_char(a) < family_char(b); });
  std::vector<int> primes = opt.primes;
  std::sort(primes.begin(), primes.end());

  for (GroupFamily fam : families)
    for (int r = opt.rank_lo; r <= opt.rank_hi; ++r) {
      GroupType g{fam, r};
      try {
        validate_group(g);
      } catch (const Error&) {
        continue;  // rank below the family minimum
      }
      for (int p : primes) {
        if (p <= 2 || !is_prime(p)) fail(Errc::InvalidPrime, "sweep prime must be an odd prime");
        auto constructions = certified_constructions(g, p, opt.max_dim);
        for (const auto& cls : valid_classes(g, p))
          for (const auto& c : constructions) {
            Weight w = oracle::construction_weight(g, c, p);
            cases.push_back(Case{cls, c, make_case_key(cls, w, oracle::to_string(c))});
          }
      }
    }

  std::sort(cases.begin(), cases.end(), [](const Case& a, const Case& b) { return a.key < b.key; });

  std::vector<VerdictReport> reports(cases.size());
  parallel_for(cases.size(), opt.threads, [&](size_t i) {
    reports[i] = run_case(cases[i].cls, cases[i].c, opt.max_dim, opt.allow_uncertified);
  });

  Summary summary;
  for (const auto& rep : reports) {
    summary.add(rep.verdict);
    emit(rep);
  }
  return summary;
}

std::vector<int> regular_partition(const GroupType& g, int m) {
  std::vector<int> parts;
  switch (g.family) {
    case GroupFamily::A: parts = {m + 1}; break;
    case GroupFamily::B: parts = {2 * m + 1}; break;
    case GroupFamily::C: parts = {2 * m}; break;
    case GroupFamily::D: parts = {2 * m - 1, 1}; break;
  }
  int total = 0;
  for (int d : parts) total += d;
  parts.insert(parts.end(), natural_dim(g) - total, 1);
  return parts;
}

Prop2Result prop2_scan(const Prop2Options& opt) {
  int c;
  switch (opt.family) {
    case GroupFamily::A: c = opt.m; break;
    case GroupFamily::B: c = 2 * opt.m; break;
    case GroupFamily::C: c = 2 * opt.m - 1; break;
    case GroupFamily::D: c = 2 * opt.m - 2; break;
    default: fail(Errc::Internal, "bad family");
  }
  if (opt.m < 1) fail(Errc::InvalidArgument, "m must be positive");
  if (opt.a >= opt.p) fail(Errc::InvalidArgument, "the scan wants a < p");
  if (opt.p <= c) fail(Errc::InvalidArgument, "the scan wants p > c");
  if (opt.rank_lo > opt.rank_hi || opt.rank_lo <= opt.m)
    fail(Errc::InvalidArgument, "rank range must be nonempty and above m");
  if (opt.family == GroupFamily::B || opt.family == GroupFamily::D)
    fail(Errc::InvalidArgument,
         "symmetric powers realize the scanned module only for families A and C");

  Prop2Result res;
  res.c = c;
  long long ac = static_cast<long long>(opt.a) * c;
  if (opt.p < ac && ac < opt.p + c - 1)
    res.regime = "stable";
  else if (ac == opt.p + c - 1)
    res.regime = "boundary";
  else
    res.regime = "inapplicable";

  for (int r = opt.rank_lo; r <= opt.rank_hi; ++r) {
    GroupType g{opt.family, r};
    validate_group(g);
    UnipotentClass cls = validate_class(g, opt.p, regular_partition(g, opt.m));
    if (cls.m != opt.m) fail(Errc::Internal, "regular partition has unexpected embedding rank");
    oracle::GfpMatrix mat =
        oracle::sym_power(oracle::natural_matrix(cls), opt.a,
                          static_cast<int>(std::min<long long>(opt.max_dim, oracle::kDefaultDimCap)));
    JordanType jt = oracle::jordan_type(mat);
    res.ranks.push_back(r);
    res.size_p_counts.push_back(jt.count_of(opt.p));
  }

  for (size_t i = 0; i < res.ranks.size(); ++i) {
    long long v = res.size_p_counts[i];
    if (res.regime == "boundary") v -= d_bound(GroupType{opt.family, res.ranks[i]}, res.ranks[i], opt.m);
    res.checked_values.push_back(v);
  }
  if (res.regime != "inapplicable")
    res.constant = std::all_of(res.checked_values.begin(), res.checked_values.end(),
                               [&](long long v) { return v == res.checked_values.front(); });
  return res;
}

}  // namespace cli
}  // namespace pjordan
