#include <doctest.h>

#include "pjordan/rootdata.hpp"
#include "test_util.hpp"

#include <limits>
#include <random>

using namespace pjordan;

namespace {

Weight w_of(std::vector<int> a) { return Weight{std::move(a)}; }

}  // namespace

TEST_CASE("positive root counts match the closed forms") {
  for (int r = 1; r <= 6; ++r) {
    auto rs = build_root_system({GroupFamily::A, r});
    CHECK(rs.positive_roots.size() == static_cast<size_t>(r * (r + 1) / 2));
  }
  for (int r = 2; r <= 6; ++r)
    CHECK(build_root_system({GroupFamily::B, r}).positive_roots.size() ==
          static_cast<size_t>(r * r));
  for (int r = 1; r <= 6; ++r)
    CHECK(build_root_system({GroupFamily::C, r}).positive_roots.size() ==
          static_cast<size_t>(r * r));
  for (int r = 3; r <= 6; ++r)
    CHECK(build_root_system({GroupFamily::D, r}).positive_roots.size() ==
          static_cast<size_t>(r * (r - 1)));
}

TEST_CASE("degenerate low ranks are rejected") {
  CHECK(pjtest::thrown_code([] { build_root_system({GroupFamily::B, 1}); }) == Errc::InvalidRank);
  CHECK(pjtest::thrown_code([] { build_root_system({GroupFamily::D, 2}); }) == Errc::InvalidRank);
  CHECK(pjtest::thrown_code([] { build_root_system({GroupFamily::A, 0}); }) == Errc::InvalidRank);
}

TEST_CASE("Cartan matrices carry the family's tail") {
  auto b2 = build_root_system({GroupFamily::B, 2});
  CHECK(b2.cartan == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
  auto c2 = build_root_system({GroupFamily::C, 2});
  CHECK(c2.cartan == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  auto d4 = build_root_system({GroupFamily::D, 4});
  CHECK(d4.cartan[1][3] == -1);  // fork at node 2
  CHECK(d4.cartan[2][3] == 0);
  for (int i = 0; i < 4; ++i) CHECK(d4.cartan[i][i] == 2);
}

TEST_CASE("positive root order is height then lexicographic") {
  auto b2 = build_root_system({GroupFamily::B, 2});
  std::vector<Root> expected{Root{{0, 1}}, Root{{1, 0}}, Root{{1, 1}}, Root{{1, 2}}};
  CHECK(b2.positive_roots == expected);
  CHECK(b2.highest_root == Root{{1, 2}});
  auto a2 = build_root_system({GroupFamily::A, 2});
  CHECK(a2.highest_root == Root{{1, 1}});
}

TEST_CASE("epsilon weights invert the eps-coordinate map") {
  for (GroupType g : {GroupType{GroupFamily::A, 3}, GroupType{GroupFamily::B, 3},
                      GroupType{GroupFamily::C, 4}, GroupType{GroupFamily::D, 4}}) {
    auto rs = build_root_system(g);
    CHECK(rs.epsilon_weights.size() == static_cast<size_t>(rs.eps_dim));
    for (int i = 0; i < rs.eps_dim; ++i) {
      auto t = to_eps(rs, rs.epsilon_weights[i]);
      for (int k = 0; k < rs.eps_dim; ++k) {
        if (g.family == GroupFamily::A) {
          // traceless representative: eps_i maps to e_i - (1/(r+1)) * ones
          CHECK(t[k] - (k == i ? 1 : 0) == t[(k + 1) % rs.eps_dim] - ((k + 1) % rs.eps_dim == i ? 1 : 0));
        } else {
          CHECK(t[k] == (k == i ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("coroot pairing is dual to the fundamental basis") {
  for (GroupType g : {GroupType{GroupFamily::A, 3}, GroupType{GroupFamily::B, 3},
                      GroupType{GroupFamily::C, 3}, GroupType{GroupFamily::D, 4}}) {
    auto rs = build_root_system(g);
    for (int i = 1; i <= g.rank; ++i)
      for (int j = 0; j < g.rank; ++j) {
        std::vector<int> simple(g.rank, 0);
        simple[j] = 1;
        CHECK(coroot_pairing(rs, fundamental_weight(g.rank, i), Root{simple}) ==
              (i - 1 == j ? 1 : 0));
      }
  }
}

TEST_CASE("pairing against the highest root") {
  auto a2 = build_root_system({GroupFamily::A, 2});
  CHECK(coroot_pairing(a2, w_of({1, 1}), a2.highest_root) == 2);
  CHECK(coroot_pairing(a2, w_of({0, 0}), a2.highest_root) == 0);
  CHECK(pjtest::thrown_code([&] { coroot_pairing(a2, w_of({1, 1}), Root{{2, 1}}); }) ==
        Errc::NotARoot);
}

TEST_CASE("p-largeness thresholds") {
  auto a2 = build_root_system({GroupFamily::A, 2});
  CHECK_FALSE(is_p_large(a2, w_of({1, 1}), 3));
  CHECK(is_p_large(a2, w_of({2, 2}), 3));
  CHECK_FALSE(is_p_large(a2, w_of({0, 0}), 3));
  CHECK(pjtest::thrown_code([&] { is_p_large(a2, w_of({-1, 0}), 3); }) == Errc::NotDominant);
}

TEST_CASE("p-largeness reproduces the per-family linear inequalities") {
  // For p-restricted dominant weights, <w, highest^vee> >= p is exactly the
  // negation of: sum a_i < p (A, C); a_1+2a_2+...+2a_{r-1}+a_r < p (B);
  // a_1+2a_2+...+2a_{r-2}+a_{r-1}+a_r < p (D).
  auto run = [](GroupType g, int p) {
    auto rs = build_root_system(g);
    std::vector<int> a(g.rank, 0);
    while (true) {
      long long bound = 0;
      switch (g.family) {
        case GroupFamily::A:
        case GroupFamily::C:
          for (int v : a) bound += v;
          break;
        case GroupFamily::B:
          bound = a[0] + a[g.rank - 1];
          for (int i = 1; i + 1 < g.rank; ++i) bound += 2 * a[i];
          break;
        case GroupFamily::D:
          bound = a[0] + a[g.rank - 2] + a[g.rank - 1];
          for (int i = 1; i + 2 < g.rank; ++i) bound += 2 * a[i];
          break;
      }
      CHECK(is_p_large(rs, Weight{a}, p) == (bound >= p));
      int i = 0;
      while (i < g.rank && a[i] == p - 1) a[i++] = 0;
      if (i == g.rank) break;
      ++a[i];
    }
  };
  for (int p : {3, 5}) {
    run({GroupFamily::A, 3}, p);
    run({GroupFamily::B, 3}, p);
    run({GroupFamily::C, 3}, p);
    run({GroupFamily::D, 4}, p);
  }
}

TEST_CASE("dominant orbit sizes") {
  auto a2 = build_root_system({GroupFamily::A, 2});
  CHECK(dominant_orbit_size(a2, w_of({0, 0})) == 1);
  CHECK(dominant_orbit_size(a2, w_of({1, 0})) == 3);
  auto b3 = build_root_system({GroupFamily::B, 3});
  CHECK(dominant_orbit_size(b3, w_of({0, 0, 1})) == 8);
  auto a3 = build_root_system({GroupFamily::A, 3});
  CHECK(dominant_orbit_size(a3, w_of({0, 1, 0})) == 6);
  auto d4 = build_root_system({GroupFamily::D, 4});
  CHECK(dominant_orbit_size(d4, w_of({1, 0, 0, 0})) == 8);
  CHECK(pjtest::thrown_code([&] { dominant_orbit_size(d4, w_of({-1, 0, 0, 0})); }) ==
        Errc::NotDominant);
}

TEST_CASE("Weyl dimension formula") {
  auto a2 = build_root_system({GroupFamily::A, 2});
  CHECK(weyl_dimension(a2, w_of({0, 0})) == 1);
  CHECK(weyl_dimension(a2, w_of({1, 1})) == 8);
  auto c3 = build_root_system({GroupFamily::C, 3});
  CHECK(weyl_dimension(c3, w_of({1, 0, 0})) == 6);
  auto b3 = build_root_system({GroupFamily::B, 3});
  CHECK(weyl_dimension(b3, w_of({0, 0, 1})) == 8);
  auto a1 = build_root_system({GroupFamily::A, 1});
  for (int a = 0; a <= 6; ++a) CHECK(weyl_dimension(a1, w_of({a})) == a + 1);
  auto d4 = build_root_system({GroupFamily::D, 4});
  CHECK(weyl_dimension(d4, w_of({0, 0, 0, 1})) == 8);
  CHECK(weyl_dimension(d4, w_of({0, 1, 0, 0})) == 28);
}

TEST_CASE("orbit enumeration is conjugation-stable under random reflections") {
  auto b3 = build_root_system({GroupFamily::B, 3});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Weight w{std::vector<int>{coord(rng), coord(rng), coord(rng)}};
    auto orbit = weyl_orbit(b3, w);
    // every orbit element has the same dominant representative
    for (const auto& v : orbit) CHECK(dominant_rep(b3, v) == dominant_rep(b3, w));
    CHECK(static_cast<long long>(orbit.size()) == dominant_orbit_size(b3, dominant_rep(b3, w)));
  }
}

TEST_CASE("smallest fundamental dimensions dominate the block bound target") {
  // dim of the smallest nontrivial module of A_{k-1}, C_k, D_k versus the
  // bound k resp. 2k, for the ranks the sweeps rely on.
  for (int k : {4, 5, 6}) {
    auto a = build_root_system({GroupFamily::A, k - 1});
    long long amin = std::numeric_limits<long long>::max();
    for (int i = 1; i <= k - 1; ++i)
      amin = std::min(amin, weyl_dimension(a, fundamental_weight(k - 1, i)));
    CHECK(amin >= k);
    auto c = build_root_system({GroupFamily::C, k});
    auto d = build_root_system({GroupFamily::D, k});
    long long cmin = std::numeric_limits<long long>::max(), dmin = cmin;
    for (int i = 1; i <= k; ++i) {
      cmin = std::min(cmin, weyl_dimension(c, fundamental_weight(k, i)));
      dmin = std::min(dmin, weyl_dimension(d, fundamental_weight(k, i)));
    }
    CHECK(cmin >= 2 * k);
    CHECK(dmin >= 2 * k);
  }
}
