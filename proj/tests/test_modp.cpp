#include <doctest.h>

#include "pjordan/modp.hpp"
#include "pjordan/oracle.hpp"
#include "test_util.hpp"

#include <random>
#include <thread>

using namespace pjordan;
using namespace pjordan::modp;

TEST_CASE("digit factorization re-exports the p-adic expansion") {
  CHECK(steinberg_digits(Weight{{4}}, 3) == p_adic_digits(Weight{{4}}, 3));
  CHECK(steinberg_digits(Weight{{0, 3}}, 5) == std::vector<Weight>{Weight{{0, 3}}});
  CHECK(steinberg_digits(Weight{{5}}, 3) ==
        std::vector<Weight>{Weight{{2}}, Weight{{1}}});
}

TEST_CASE("tensor block rule on single pairs") {
  CHECK(tensor_blocks_mod_p(1, 3, 5).counts == std::map<int, long long>{{3, 1}});
  CHECK(tensor_blocks_mod_p(2, 2, 3).counts == std::map<int, long long>{{3, 1}, {1, 1}});
  CHECK(tensor_blocks_mod_p(2, 3, 3).counts == std::map<int, long long>{{3, 2}});
  CHECK(tensor_blocks_mod_p(3, 3, 3).counts == std::map<int, long long>{{3, 3}});
  CHECK(tensor_blocks_mod_p(2, 3, 7).counts == std::map<int, long long>{{4, 1}, {2, 1}});
  CHECK(pjtest::thrown_code([] { tensor_blocks_mod_p(4, 2, 3); }) == Errc::BlockTooLarge);
}

TEST_CASE("tensor block rule dimension identity and symmetry") {
  for (int p : {3, 5, 7, 11})
    for (int a = 1; a <= p; ++a)
      for (int b = a; b <= p; ++b) {
        auto t = tensor_blocks_mod_p(a, b, p);
        CHECK(t.total_dim() == static_cast<long long>(a) * b);
        CHECK(t == tensor_blocks_mod_p(b, a, p));
        for (auto& [s, c] : t.counts) CHECK(s <= p);
      }
}

TEST_CASE("clebsch-gordan degeneration below the modulus") {
  for (int p : {7, 11})
    for (int a = 1; a <= p; ++a)
      for (int b = a; b <= p; ++b) {
        if (a + b - 1 > p) continue;
        auto t = tensor_blocks_mod_p(a, b, p);
        std::map<int, long long> expect;
        for (int s = b - a + 1; s <= a + b - 1; s += 2) ++expect[s];
        CHECK(t.counts == expect);
      }
}

TEST_CASE("tensor rule equals the matrix route") {
  for (int p : {3, 5})
    for (int a = 1; a <= p; ++a)
      for (int b = a; b <= p; ++b) {
        auto mat = oracle::tensor(oracle::jordan_matrix(p, {a}), oracle::jordan_matrix(p, {b}));
        CHECK(from_jordan(oracle::jordan_type(mat)) == tensor_blocks_mod_p(a, b, p));
      }
}

TEST_CASE("multiset extension is bilinear, commutative and associative") {
  const int p = 3;
  std::vector<BlockMultiset> pool;
  for (int a = 1; a <= p; ++a)
    for (int b = a; b <= p; ++b) pool.push_back(tensor_blocks_mod_p(a, b, p));
  pool.push_back(BlockMultiset{{{1, 2}, {3, 1}}});
  pool.push_back(BlockMultiset{{{2, 3}}});

  for (const auto& x : pool)
    for (const auto& y : pool) {
      CHECK(tensor_type_mod_p(x, y, p) == tensor_type_mod_p(y, x, p));
      for (const auto& z : pool)
        CHECK(tensor_type_mod_p(tensor_type_mod_p(x, y, p), z, p) ==
              tensor_type_mod_p(x, tensor_type_mod_p(y, z, p), p));
    }

  // scaling by n copies of the trivial block
  BlockMultiset ones{{{1, 4}}};
  auto t = tensor_blocks_mod_p(2, 3, 3);
  auto scaled = tensor_type_mod_p(ones, t, 3);
  for (auto& [s, c] : t.counts) CHECK(scaled.count(s) == 4 * c);
}

TEST_CASE("prediction assembles every invariant") {
  auto cls = validate_class({GroupFamily::A, 5}, 5, {3, 1, 1, 1});
  auto rs = build_root_system(cls.group);
  auto dg = diagram_from_partition(rs, cls);

  auto pr = predict(cls, dg, Weight{{3, 0, 0, 0, 0}}, 5);
  CHECK(pr.sigma == 6);
  CHECK(pr.c_x == 2);
  CHECK(pr.k_pred == 5);
  CHECK(pr.d_bound == 3);
  CHECK(pr.p_large_for_x);
  CHECK(pr.rank_applicable);
  CHECK(pr.theorem1_hypothesis);  // 6 >= 4 + 2

  auto pr2 = predict(cls, dg, Weight{{1, 0, 0, 0, 0}}, 5);
  CHECK(pr2.sigma == 2);
  CHECK(pr2.k_pred == 3);
  CHECK_FALSE(pr2.p_large_for_x);
  CHECK_FALSE(pr2.theorem1_hypothesis);

  CHECK(pjtest::thrown_code([&] { predict(cls, dg, zero_weight(5), 5); }) ==
        Errc::InvalidArgument);
  CHECK(pjtest::thrown_code([&] { predict(cls, dg, Weight{{-1, 0, 0, 0, 0}}, 5); }) ==
        Errc::NotDominant);
}

TEST_CASE("prediction is a Frobenius invariant") {
  auto cls = validate_class({GroupFamily::A, 4}, 3, {3, 1, 1});
  auto rs = build_root_system(cls.group);
  auto dg = diagram_from_partition(rs, cls);
  for (const auto& w : {Weight{{1, 0, 0, 0}}, Weight{{2, 1, 0, 0}}, Weight{{0, 0, 2, 2}}}) {
    auto a = predict(cls, dg, w, 3);
    auto b = predict(cls, dg, scale(3, w), 3);
    CHECK(a.sigma == b.sigma);
    CHECK(a.k_pred == b.k_pred);
  }
}

TEST_CASE("verdict semantics") {
  Prediction pred;
  pred.p = 5;
  pred.c_x = 2;
  pred.d_bound = 3;

  // hypothesis true: strict comparison against d
  pred.sigma = 6;
  pred.rank_applicable = true;
  pred.theorem1_hypothesis = true;
  BlockMultiset at_bound{{{5, 3}}};
  CHECK(theorem1_verdict(pred, at_bound, 5).verdict == Verdict::Fail);
  BlockMultiset above{{{5, 4}}};
  CHECK(theorem1_verdict(pred, above, 5).verdict == Verdict::Pass);

  // vacuous: sigma below p-1
  pred.sigma = 2;
  pred.theorem1_hypothesis = false;
  CHECK(theorem1_verdict(pred, BlockMultiset{}, 5).verdict == Verdict::Pass);

  // gap regime p-1 <= sigma < p-1+c: no claim either way
  pred.sigma = 4;
  CHECK(theorem1_verdict(pred, BlockMultiset{}, 5).verdict == Verdict::Undetermined);
  pred.sigma = 5;
  CHECK(theorem1_verdict(pred, BlockMultiset{}, 5).verdict == Verdict::Undetermined);
}

TEST_CASE("size-p counting") {
  CHECK(size_p_count(BlockMultiset{{{3, 2}}}, 3) == 2);
  CHECK(size_p_count(BlockMultiset{{{1, 7}}}, 3) == 0);
}

TEST_CASE("memo table tolerates concurrent lookups") {
  std::vector<std::thread> pool;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&] {
      for (int rep = 0; rep < 50; ++rep)
        for (int a = 1; a <= 7; ++a)
          for (int b = a; b <= 7; ++b)
            if (tensor_blocks_mod_p(a, b, 7).total_dim() != static_cast<long long>(a) * b)
              ok = false;
    });
  for (auto& th : pool) th.join();
  CHECK(ok);
}
