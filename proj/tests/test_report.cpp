#include <doctest.h>

#include "pjordan/report.hpp"
#include "pjordan/sweep.hpp"
#include "test_util.hpp"

#include <atomic>

using namespace pjordan;
using namespace pjordan::cli;

TEST_CASE("case keys order lexicographically") {
  CaseKey a{'A', 4, 3, {3, 1, 1}, {1, 0, 0, 0}, "S1"};
  CaseKey b{'A', 4, 3, {3, 1, 1}, {1, 0, 0, 0}, "S2"};
  CaseKey c{'A', 4, 3, {3, 1, 1}, {2, 0, 0, 0}, "S1"};
  CaseKey d{'A', 5, 3, {3, 1, 1, 1}, {1, 0, 0, 0, 0}, "S1"};
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < d);
  CHECK_FALSE(d < a);
}

TEST_CASE("json line is stable and carries the schema") {
  auto cls = validate_class({GroupFamily::A, 5}, 5, {3, 1, 1, 1});
  auto rs = build_root_system(cls.group);
  auto dg = diagram_from_partition(rs, cls);
  VerdictReport rep;
  Weight w{{3, 0, 0, 0, 0}};
  rep.key = make_case_key(cls, w, "");
  rep.prediction = modp::predict(cls, dg, w, 5);
  rep.verdict = modp::Verdict::Undetermined;

  std::string line = to_json_line(rep);
  CHECK(line == to_json_line(rep));  // byte-stable
  CHECK(line.find("\"schema\":\"pjordan/1\"") != std::string::npos);
  CHECK(line.find("\"sigma\":6") != std::string::npos);
  CHECK(line.find("\"k_pred\":5") != std::string::npos);
  CHECK(line.find("\"d_bound\":3") != std::string::npos);
  CHECK(line.find("\"verdict\":\"UNDETERMINED\"") != std::string::npos);
}

TEST_CASE("summary counts follow the verdicts") {
  Summary s;
  s.add(modp::Verdict::Pass);
  s.add(modp::Verdict::Pass);
  s.add(modp::Verdict::Fail);
  s.add(modp::Verdict::SkippedUncertified);
  CHECK(s.total == 4);
  CHECK(s.pass == 2);
  CHECK(s.fail == 1);
  CHECK(s.skipped_uncertified == 1);
  std::string line = to_json_line(s);
  CHECK(line.find("\"summary\"") != std::string::npos);
  CHECK(line.find("\"total\":4") != std::string::npos);
}

TEST_CASE("class enumeration yields only valid classes in order") {
  auto classes = valid_classes({GroupFamily::A, 4}, 3);
  // [3,1,1], [2,2,1], [2,1,1,1]: parts <= 3 and at least one trivial part
  CHECK(classes.size() == 3);
  for (size_t i = 1; i < classes.size(); ++i)
    CHECK(classes[i - 1].partition < classes[i].partition);
  for (const auto& cls : classes) CHECK(cls.m < 4);
}

TEST_CASE("certified construction enumeration respects the cap") {
  auto cs = certified_constructions({GroupFamily::A, 3}, 3, 100);
  CHECK(!cs.empty());
  for (const auto& c : cs) {
    CHECK(oracle::construction_dim({GroupFamily::A, 3}, c) <= 100);
    CHECK(oracle::matrix_realizable(c));
  }
  // no certified matrix constructions for D
  CHECK(certified_constructions({GroupFamily::D, 4}, 3, 1000).empty());
}

TEST_CASE("single case run produces a full report") {
  auto cls = validate_class({GroupFamily::A, 5}, 5, {3, 1, 1, 1});
  auto rep = run_case(cls, oracle::parse_construction("S3"), 3000, false);
  REQUIRE(rep.prediction.has_value());
  REQUIRE(rep.observed.has_value());
  CHECK(rep.observed->max_block() == 5);
  CHECK(rep.prediction->k_pred == 5);
  CHECK(rep.verdict == modp::Verdict::Pass);
  CHECK(rep.observed->count_of(5) > rep.prediction->d_bound);

  auto skipped = run_case(cls, oracle::parse_construction("S3"), 10, false);
  CHECK(skipped.verdict == modp::Verdict::SkippedSize);

  auto c3 = validate_class({GroupFamily::C, 3}, 3, {2, 2, 1, 1});
  auto uncert = run_case(c3, oracle::parse_construction("E2"), 3000, false);
  CHECK(uncert.verdict == modp::Verdict::SkippedUncertified);
}

TEST_CASE("sweep emits deterministic reports and a consistent summary") {
  SweepOptions opt;
  opt.families = {GroupFamily::A};
  opt.rank_lo = 3;
  opt.rank_hi = 3;
  opt.primes = {3};
  opt.max_dim = 200;
  opt.threads = 2;

  std::vector<std::string> lines1, lines2;
  auto s1 = theorem1_sweep(opt, [&](const VerdictReport& r) { lines1.push_back(to_json_line(r)); });
  auto s2 = theorem1_sweep(opt, [&](const VerdictReport& r) { lines2.push_back(to_json_line(r)); });
  CHECK(lines1 == lines2);
  CHECK(s1.total == static_cast<long long>(lines1.size()));
  CHECK(s1.fail == 0);

  SweepOptions bad = opt;
  bad.rank_lo = 5;
  bad.rank_hi = 4;
  CHECK(pjtest::thrown_code([&] { theorem1_sweep(bad, [](const VerdictReport&) {}); }) ==
        Errc::InvalidArgument);
}

TEST_CASE("regular partitions pad with trivial parts") {
  CHECK(regular_partition({GroupFamily::A, 5}, 2) == std::vector<int>{3, 1, 1, 1});
  CHECK(regular_partition({GroupFamily::B, 4}, 2) == std::vector<int>{5, 1, 1, 1, 1});
  CHECK(regular_partition({GroupFamily::C, 4}, 2) == std::vector<int>{4, 1, 1, 1, 1});
  CHECK(regular_partition({GroupFamily::D, 4}, 2) == std::vector<int>{3, 1, 1, 1, 1, 1});
}

TEST_CASE("rank scan in the stable regime") {
  Prop2Options opt;
  opt.family = GroupFamily::A;
  opt.m = 3;
  opt.a = 2;
  opt.p = 5;
  opt.rank_lo = 5;
  opt.rank_hi = 6;
  auto res = prop2_scan(opt);
  CHECK(res.regime == "stable");
  CHECK(res.constant);
  CHECK(res.size_p_counts == std::vector<long long>{2, 2});
}

TEST_CASE("rank scan in the boundary regime") {
  Prop2Options opt;
  opt.family = GroupFamily::A;
  opt.m = 2;
  opt.a = 2;
  opt.p = 3;
  opt.rank_lo = 4;
  opt.rank_hi = 5;
  auto res = prop2_scan(opt);
  CHECK(res.regime == "boundary");
  CHECK(res.constant);
  CHECK(res.size_p_counts == std::vector<long long>{4, 5});
  CHECK(res.checked_values == std::vector<long long>{2, 2});
}

TEST_CASE("rank scan input validation") {
  Prop2Options opt;
  opt.family = GroupFamily::A;
  opt.m = 2;
  opt.a = 3;
  opt.p = 3;
  opt.rank_lo = 4;
  opt.rank_hi = 5;
  CHECK(pjtest::thrown_code([&] { prop2_scan(opt); }) == Errc::InvalidArgument);  // a >= p
  opt.a = 2;
  opt.p = 2;
  CHECK(pjtest::thrown_code([&] { prop2_scan(opt); }) == Errc::InvalidArgument);  // p <= c
  opt.p = 3;
  opt.family = GroupFamily::B;
  CHECK(pjtest::thrown_code([&] { prop2_scan(opt); }) == Errc::InvalidArgument);
}
