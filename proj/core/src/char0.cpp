#include "pjordan/char0.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace pjordan {

long long JordanType::dim() const {
  return std::accumulate(blocks.begin(), blocks.end(), 0LL);
}

long long JordanType::count_of(int size) const {
  return std::count(blocks.begin(), blocks.end(), size);
}

std::string to_string(const JordanType& jt) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < jt.blocks.size(); ++i) os << (i ? "," : "") << jt.blocks[i];
  os << ']';
  return os.str();
}

namespace char0 {

long long GammaCharacter::total() const {
  long long s = 0;
  for (auto& [t, m] : mults) s += m;
  return s;
}

long long GammaCharacter::mult(int t) const {
  auto it = mults.find(t);
  return it == mults.end() ? 0 : it->second;
}

int GammaCharacter::max_weight() const {
  int best = 0;
  for (auto& [t, m] : mults)
    if (m > 0) best = std::max(best, t);
  return best;
}

namespace {

// Closure of {w} under the simple-root strings nu, nu - alpha_i, ...,
// s_i(nu); this is exactly the saturated weight set of M(w).
std::set<std::vector<int>> weight_set(const RootSystem& rs, const Weight& w) {
  const int n = rs.rank();
  std::set<std::vector<int>> seen{w.fund};
  std::deque<std::vector<int>> queue{w.fund};
  while (!queue.empty()) {
    std::vector<int> v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      if (v[i] <= 0) continue;
      std::vector<int> nv = v;
      for (int t = 1; t <= v[i]; ++t) {
        for (int k = 0; k < n; ++k) nv[k] -= rs.cartan[k][i];
        if (seen.insert(nv).second) queue.push_back(nv);
      }
    }
  }
  return seen;
}

long long depth_below(const RootSystem& rs, const Weight& top, const Weight& mu) {
  Weight diff = add(top, scale(-1, mu));
  auto c = root_coords(rs, diff);
  BigRat h = 0;
  for (auto& x : c) h += x;
  return to_ll(rat_to_int(h, Errc::Internal));
}

}  // namespace

Character character(const RootSystem& rs, const Weight& w, long long max_dominant) {
  if (!is_dominant(w)) fail(Errc::NotDominant, "character of a non-dominant weight");

  auto weights = weight_set(rs, w);
  std::vector<Weight> dominants;
  for (const auto& v : weights)
    if (is_dominant(Weight{v})) dominants.push_back(Weight{v});
  if (static_cast<long long>(dominants.size()) > max_dominant)
    fail(Errc::SizeLimit, "dominant weight count " + std::to_string(dominants.size()) +
                              " exceeds cap " + std::to_string(max_dominant));

  std::sort(dominants.begin(), dominants.end(), [&](const Weight& x, const Weight& y) {
    long long dx = depth_below(rs, w, x), dy = depth_below(rs, w, y);
    if (dx != dy) return dx < dy;
    return x.fund < y.fund;
  });

  // Memoized dominant-chamber canonicalization.
  std::map<std::vector<int>, std::vector<int>> dom_cache;
  auto dominant_of = [&](const Weight& v) -> const std::vector<int>& {
    auto it = dom_cache.find(v.fund);
    if (it == dom_cache.end())
      it = dom_cache.emplace(v.fund, dominant_rep(rs, v).fund).first;
    return it->second;
  };

  // eps-coordinates and fundamental coordinates of the positive roots.
  std::vector<std::vector<BigRat>> beta_eps;
  std::vector<Weight> beta_fund;
  for (const Root& beta : rs.positive_roots) {
    beta_fund.push_back(root_to_weight(rs, beta));
    beta_eps.push_back(to_eps(rs, beta_fund.back()));
  }

  Weight rho{std::vector<int>(rs.rank(), 1)};
  auto norm2 = [&](const Weight& v) {
    auto t = to_eps(rs, v);
    return eps_form(t, t);
  };
  BigRat top_norm = norm2(add(w, rho));

  std::map<Weight, BigInt> mults;
  mults[w] = 1;
  for (const Weight& mu : dominants) {
    if (mu == w) continue;
    BigRat num = 0;
    for (size_t b = 0; b < beta_fund.size(); ++b) {
      Weight nu = mu;
      for (int k = 1;; ++k) {
        nu = add(nu, beta_fund[b]);
        if (!weights.count(nu.fund)) break;
        const BigInt& m_nu = mults.at(Weight{dominant_of(nu)});
        num += BigRat(m_nu) * eps_form(to_eps(rs, nu), beta_eps[b]);
      }
    }
    BigRat den = top_norm - norm2(add(mu, rho));
    if (den == 0) fail(Errc::Internal, "vanishing Freudenthal denominator");
    BigInt m = rat_to_int(2 * num / den, Errc::Internal);
    if (m <= 0) fail(Errc::Internal, "nonpositive multiplicity");
    mults[mu] = m;
  }

  Character ch;
  ch.highest = w;
  for (auto& [mu, m] : mults) {
    long long mm = to_ll(m);
    ch.dominant_mults[mu] = mm;
    ch.dim += mm * dominant_orbit_size(rs, mu);
  }
  return ch;
}

GammaCharacter gamma_character(const Character& ch, const TauMap& t) {
  GammaCharacter gc;
  for (auto& [mu, m] : ch.dominant_mults)
    for (const Weight& nu : weyl_orbit(*t.system, mu))
      gc.mults[static_cast<int>(tau(t, nu))] += m;
  return gc;
}

JordanType sl2_jordan(const GammaCharacter& gc) {
  for (auto& [t, m] : gc.mults)
    if (gc.mult(-t) != m)
      fail(Errc::MalformedCharacter, "weight multiplicities are not symmetric");
  JordanType jt;
  int top = gc.max_weight();
  for (int s = top; s >= 0; --s) {
    long long count = gc.mult(s) - gc.mult(s + 2);
    if (count < 0) fail(Errc::MalformedCharacter, "negative block count at weight " + std::to_string(s));
    for (long long i = 0; i < count; ++i) jt.blocks.push_back(s + 1);
  }
  if (jt.dim() != gc.total()) fail(Errc::MalformedCharacter, "block sizes do not fill the module");
  return jt;
}

long long k_complex(const TauMap& t, const Weight& w, int p) {
  if (!is_dominant(w)) fail(Errc::NotDominant, "k wants a dominant weight");
  return sigma(t, w, p) + 1;
}

bool smith_stability(GroupFamily family, const std::vector<int>& w_pattern, int f,
                     const std::vector<int>& rank_list) {
  if (rank_list.empty()) fail(Errc::InvalidArgument, "empty rank list");
  if (static_cast<int>(w_pattern.size()) > f)
    fail(Errc::InvalidArgument, "pattern wider than its support bound f");
  for (int r : rank_list)
    if (f > r - 1) fail(Errc::InvalidArgument, "f must be at most min rank - 1");

  std::map<std::vector<int>, long long> reference;
  bool first = true;
  for (int r : rank_list) {
    RootSystem rs = build_root_system(GroupType{family, r});
    Weight w = zero_weight(r);
    for (size_t i = 0; i < w_pattern.size(); ++i) w.fund[i] = w_pattern[i];
    Character ch = character(rs, w);

    std::map<std::vector<int>, long long> found;
    for (auto& [mu, m] : ch.dominant_mults) {
      for (const Weight& nu : weyl_orbit(rs, mu)) {
        auto c = root_coords(rs, add(w, scale(-1, nu)));
        std::vector<int> key;
        bool supported = true;
        for (int i = 0; i < r; ++i) {
          BigInt ci = rat_to_int(c[i], Errc::Internal);
          if (i < f) {
            key.push_back(static_cast<int>(to_ll(ci)));
          } else if (ci != 0) {
            supported = false;
            break;
          }
        }
        if (supported) found[key] = m;
      }
    }
    if (first) {
      reference = std::move(found);
      first = false;
    } else if (found != reference) {
      return false;
    }
  }
  return true;
}

}  // namespace char0
}  // namespace pjordan
