#include "pjordan/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace pjordan {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidRank: return "InvalidRank";
    case Errc::InvalidPrime: return "InvalidPrime";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotARoot: return "NotARoot";
    case Errc::NotDominant: return "NotDominant";
    case Errc::BadPartitionSum: return "BadPartitionSum";
    case Errc::PartExceedsP: return "PartExceedsP";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::IdentityClass: return "IdentityClass";
    case Errc::MNotLessThanR: return "MNotLessThanR";
    case Errc::NonIntegralResult: return "NonIntegralResult";
    case Errc::LemmaMismatch: return "LemmaMismatch";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::MalformedCharacter: return "MalformedCharacter";
    case Errc::NotUnipotent: return "NotUnipotent";
    case Errc::NoGrading: return "NoGrading";
    case Errc::BlockTooLarge: return "BlockTooLarge";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

GroupFamily family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return GroupFamily::A;
    case 'B': case 'b': return GroupFamily::B;
    case 'C': case 'c': return GroupFamily::C;
    case 'D': case 'd': return GroupFamily::D;
  }
  fail(Errc::InvalidArgument, std::string("unknown family '") + c + "'");
}

void validate_group(const GroupType& g) {
  int min_rank = 1;
  if (g.family == GroupFamily::B) min_rank = 2;
  if (g.family == GroupFamily::D) min_rank = 3;
  if (g.rank < min_rank)
    fail(Errc::InvalidRank, std::string(1, family_char(g.family)) + "_" +
                                std::to_string(g.rank) + " is below the family minimum");
}

int natural_dim(const GroupType& g) {
  switch (g.family) {
    case GroupFamily::A: return g.rank + 1;
    case GroupFamily::B: return 2 * g.rank + 1;
    case GroupFamily::C: return 2 * g.rank;
    case GroupFamily::D: return 2 * g.rank;
  }
  fail(Errc::Internal, "bad family");
}

Weight zero_weight(int rank) { return Weight{std::vector<int>(rank, 0)}; }

Weight fundamental_weight(int rank, int i) {
  Weight w = zero_weight(rank);
  w.fund.at(i - 1) = 1;
  return w;
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.fund.begin(), w.fund.end(), [](int a) { return a >= 0; });
}

bool is_zero(const Weight& w) {
  return std::all_of(w.fund.begin(), w.fund.end(), [](int a) { return a == 0; });
}

bool is_p_restricted(const Weight& w, int p) {
  return is_dominant(w) &&
         std::all_of(w.fund.begin(), w.fund.end(), [p](int a) { return a < p; });
}

Weight add(const Weight& a, const Weight& b) {
  if (a.fund.size() != b.fund.size()) fail(Errc::InvalidArgument, "weight rank mismatch");
  Weight r = a;
  for (size_t i = 0; i < r.fund.size(); ++i) r.fund[i] += b.fund[i];
  return r;
}

Weight scale(int c, const Weight& w) {
  Weight r = w;
  for (int& a : r.fund) a *= c;
  return r;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < w.fund.size(); ++i) os << (i ? "," : "") << w.fund[i];
  os << ')';
  return os.str();
}

int height(const Root& r) { return std::accumulate(r.simple.begin(), r.simple.end(), 0); }

namespace {

std::vector<std::vector<int>> make_cartan(const GroupType& g) {
  const int r = g.rank;
  std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (g.family) {
    case GroupFamily::A:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case GroupFamily::B:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      c[r - 1][r - 2] = -2;  // alpha_r short
      break;
    case GroupFamily::C:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      if (r >= 2) c[r - 2][r - 1] = -2;  // alpha_r long; C_1 = A_1
      break;
    case GroupFamily::D:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
  }
  return c;
}

// eps-coordinates of the fundamental weights, row i (0-based) = omega_{i+1}.
std::vector<std::vector<BigRat>> make_omega_eps(const GroupType& g) {
  const int r = g.rank;
  const int n = (g.family == GroupFamily::A) ? r + 1 : r;
  std::vector<std::vector<BigRat>> t(r, std::vector<BigRat>(n, 0));
  switch (g.family) {
    case GroupFamily::A:
      for (int i = 1; i <= r; ++i)
        for (int k = 1; k <= n; ++k)
          t[i - 1][k - 1] = (k <= i) ? BigRat(r + 1 - i, r + 1) : BigRat(-i, r + 1);
      break;
    case GroupFamily::B:
      for (int i = 1; i < r; ++i)
        for (int k = 1; k <= i; ++k) t[i - 1][k - 1] = 1;
      for (int k = 0; k < r; ++k) t[r - 1][k] = BigRat(1, 2);
      break;
    case GroupFamily::C:
      for (int i = 1; i <= r; ++i)
        for (int k = 1; k <= i; ++k) t[i - 1][k - 1] = 1;
      break;
    case GroupFamily::D:
      for (int i = 1; i <= r - 2; ++i)
        for (int k = 1; k <= i; ++k) t[i - 1][k - 1] = 1;
      for (int k = 0; k < r; ++k) {
        t[r - 2][k] = BigRat(1, 2);
        t[r - 1][k] = BigRat(1, 2);
      }
      t[r - 2][r - 1] = BigRat(-1, 2);
      break;
  }
  return t;
}

std::vector<Weight> make_epsilon_weights(const GroupType& g) {
  const int r = g.rank;
  auto omega = [&](int i) {  // 1-based, omega_0 = 0
    return i == 0 ? zero_weight(r) : fundamental_weight(r, i);
  };
  auto minus = [](const Weight& w) { return scale(-1, w); };
  std::vector<Weight> eps;
  switch (g.family) {
    case GroupFamily::A:
      for (int i = 1; i <= r; ++i) eps.push_back(add(omega(i), minus(omega(i - 1))));
      eps.push_back(minus(omega(r)));
      break;
    case GroupFamily::B:
      for (int i = 1; i <= r - 1; ++i) eps.push_back(add(omega(i), minus(omega(i - 1))));
      eps.push_back(add(scale(2, omega(r)), minus(omega(r - 1))));
      break;
    case GroupFamily::C:
      for (int i = 1; i <= r; ++i) eps.push_back(add(omega(i), minus(omega(i - 1))));
      break;
    case GroupFamily::D:
      for (int i = 1; i <= r - 2; ++i) eps.push_back(add(omega(i), minus(omega(i - 1))));
      eps.push_back(add(add(omega(r - 1), omega(r)), minus(omega(r - 2))));
      eps.push_back(add(omega(r), minus(omega(r - 1))));
      break;
  }
  return eps;
}

std::vector<std::vector<BigRat>> invert_matrix(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<BigRat>> a(n, std::vector<BigRat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (a[row][col] != 0) { piv = row; break; }
    if (piv < 0) fail(Errc::Internal, "singular Cartan matrix");
    std::swap(a[col], a[piv]);
    BigRat d = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= d;
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      BigRat f = a[row][col];
      for (int j = 0; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<BigRat>> inv(n, std::vector<BigRat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

long long expected_positive_count(const GroupType& g) {
  const long long r = g.rank;
  switch (g.family) {
    case GroupFamily::A: return r * (r + 1) / 2;
    case GroupFamily::B:
    case GroupFamily::C: return r * r;
    case GroupFamily::D: return r * (r - 1);
  }
  fail(Errc::Internal, "bad family");
}

}  // namespace

RootSystem build_root_system(const GroupType& g) {
  validate_group(g);
  RootSystem rs;
  rs.group = g;
  rs.cartan = make_cartan(g);
  rs.omega_eps = make_omega_eps(g);
  rs.inv_cartan = invert_matrix(rs.cartan);
  rs.epsilon_weights = make_epsilon_weights(g);
  rs.eps_dim = (g.family == GroupFamily::A) ? g.rank + 1 : g.rank;

  const int r = g.rank;
  // All roots by reflection closure from the simple roots.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> b = queue.front();
    queue.pop_front();
    // Fundamental coordinates of the root: cartan * b.
    for (int i = 0; i < r; ++i) {
      long long ai = 0;
      for (int j = 0; j < r; ++j) ai += static_cast<long long>(rs.cartan[i][j]) * b[j];
      if (ai == 0) continue;
      std::vector<int> nb = b;
      nb[i] -= static_cast<int>(ai);
      if (seen.insert(nb).second) queue.push_back(nb);
    }
  }
  for (const auto& b : seen) {
    if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; }))
      rs.positive_roots.push_back(Root{b});
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const Root& x, const Root& y) {
              int hx = height(x), hy = height(y);
              if (hx != hy) return hx < hy;
              return x.simple < y.simple;
            });
  if (static_cast<long long>(rs.positive_roots.size()) != expected_positive_count(g))
    fail(Errc::Internal, "positive root count mismatch");
  rs.root_set = std::move(seen);
  rs.highest_root = rs.positive_roots.back();
  return rs;
}

Weight root_to_weight(const RootSystem& rs, const Root& r) {
  const int n = rs.rank();
  Weight w = zero_weight(n);
  for (int i = 0; i < n; ++i) {
    long long v = 0;
    for (int j = 0; j < n; ++j) v += static_cast<long long>(rs.cartan[i][j]) * r.simple[j];
    w.fund[i] = static_cast<int>(v);
  }
  return w;
}

std::vector<BigRat> root_coords(const RootSystem& rs, const Weight& w) {
  const int n = rs.rank();
  if (static_cast<int>(w.fund.size()) != n) fail(Errc::InvalidArgument, "weight rank mismatch");
  std::vector<BigRat> c(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (w.fund[j] != 0) c[i] += rs.inv_cartan[i][j] * w.fund[j];
  return c;
}

std::vector<BigRat> to_eps(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.fund.size()) != rs.rank())
    fail(Errc::InvalidArgument, "weight rank mismatch");
  std::vector<BigRat> t(rs.eps_dim, 0);
  for (int i = 0; i < rs.rank(); ++i) {
    if (w.fund[i] == 0) continue;
    for (int k = 0; k < rs.eps_dim; ++k) t[k] += rs.omega_eps[i][k] * w.fund[i];
  }
  return t;
}

BigRat eps_form(const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
  if (a.size() != b.size()) fail(Errc::InvalidArgument, "eps dimension mismatch");
  BigRat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long long coroot_pairing(const RootSystem& rs, const Weight& w, const Root& root) {
  if (static_cast<int>(root.simple.size()) != rs.rank())
    fail(Errc::InvalidArgument, "root rank mismatch");
  if (!rs.root_set.count(root.simple)) fail(Errc::NotARoot, "not an element of the root system");
  auto beta = to_eps(rs, root_to_weight(rs, root));
  BigRat val = 2 * eps_form(to_eps(rs, w), beta) / eps_form(beta, beta);
  return to_ll(rat_to_int(val, Errc::Internal));
}

bool is_p_large(const RootSystem& rs, const Weight& wbar, int p) {
  if (!is_dominant(wbar)) fail(Errc::NotDominant, "p-largeness is defined for dominant weights");
  return coroot_pairing(rs, wbar, rs.highest_root) >= p;
}

Weight dominant_rep(const RootSystem& rs, const Weight& w) {
  Weight v = w;
  const int n = rs.rank();
  for (long long guard = 0;; ++guard) {
    int i = 0;
    for (; i < n; ++i)
      if (v.fund[i] < 0) break;
    if (i == n) return v;
    int ai = v.fund[i];
    for (int k = 0; k < n; ++k) v.fund[k] -= ai * rs.cartan[k][i];
    if (guard > 1'000'000) fail(Errc::Internal, "dominant_rep did not terminate");
  }
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  const int n = rs.rank();
  Weight start = dominant_rep(rs, w);
  std::set<std::vector<int>> seen{start.fund};
  std::deque<std::vector<int>> queue{start.fund};
  std::vector<Weight> orbit;
  while (!queue.empty()) {
    std::vector<int> v = queue.front();
    queue.pop_front();
    orbit.push_back(Weight{v});
    for (int i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      std::vector<int> nv = v;
      for (int k = 0; k < n; ++k) nv[k] -= v[i] * rs.cartan[k][i];
      if (seen.insert(nv).second) queue.push_back(nv);
    }
  }
  return orbit;
}

long long dominant_orbit_size(const RootSystem& rs, const Weight& w) {
  if (!is_dominant(w)) fail(Errc::NotDominant, "orbit size wants the dominant representative");
  return static_cast<long long>(weyl_orbit(rs, w).size());
}

long long weyl_dimension(const RootSystem& rs, const Weight& w) {
  if (!is_dominant(w)) fail(Errc::NotDominant, "dimension formula wants a dominant weight");
  Weight rho{std::vector<int>(rs.rank(), 1)};
  auto t_wr = to_eps(rs, add(w, rho));
  auto t_r = to_eps(rs, rho);
  BigRat prod = 1;
  for (const Root& beta : rs.positive_roots) {
    auto tb = to_eps(rs, root_to_weight(rs, beta));
    prod *= eps_form(t_wr, tb) / eps_form(t_r, tb);
  }
  return to_ll(rat_to_int(prod, Errc::Internal));
}

}  // namespace pjordan
