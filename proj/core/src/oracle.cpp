#include "pjordan/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pjordan {
namespace oracle {

namespace {

long long binomial_capped(long long n, long long k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt v = 1;
  for (long long i = 1; i <= k; ++i) {
    v = v * (n - k + i) / i;
    if (v > cap) fail(Errc::SizeLimit, "construction dimension exceeds the cap");
  }
  return to_ll(v);
}

void check_dim_cap(long long d, int cap) {
  if (d > cap)
    fail(Errc::SizeLimit, "dimension " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
}

// Sparse column view: the nonzero (row, value) pairs of column j.
std::vector<std::pair<int, int>> column_terms(const GfpMatrix& m, int j) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m.n; ++i)
    if (m(i, j)) out.emplace_back(i, m(i, j));
  return out;
}

}  // namespace

GfpMatrix jordan_matrix(int p, const std::vector<int>& blocks) {
  check_prime_modulus(p);
  int n = 0;
  for (int d : blocks) {
    if (d <= 0) fail(Errc::InvalidArgument, "block sizes must be positive");
    n += d;
  }
  GfpMatrix m = GfpMatrix::identity(p, n);
  m.grading.reserve(n);
  int off = 0;
  for (int d : blocks) {
    for (int i = 0; i + 1 < d; ++i) m.at(off + i, off + i + 1) = 1;
    for (int v = d - 1; v >= -(d - 1); v -= 2) m.grading.push_back(v);
    off += d;
  }
  return m;
}

GfpMatrix natural_matrix(const UnipotentClass& cls) {
  return jordan_matrix(cls.p, cls.partition);
}

GfpMatrix sym_power(const GfpMatrix& m, int a, int dim_cap) {
  if (a < 1) fail(Errc::InvalidArgument, "symmetric power wants a >= 1");
  const int n = m.n, p = m.p;
  long long dim = binomial_capped(n + a - 1, a, dim_cap);
  check_dim_cap(dim, dim_cap);

  // Nondecreasing index tuples in lexicographic order.
  std::vector<std::vector<int>> basis;
  basis.reserve(dim);
  std::vector<int> tup(a, 0);
  while (true) {
    basis.push_back(tup);
    int i = a - 1;
    while (i >= 0 && tup[i] == n - 1) --i;
    if (i < 0) break;
    int v = tup[i] + 1;
    for (int j = i; j < a; ++j) tup[j] = v;
  }
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

  GfpMatrix out = GfpMatrix::zero(p, static_cast<int>(dim));
  if (m.graded()) {
    out.grading.reserve(dim);
    for (const auto& b : basis) {
      int gsum = 0;
      for (int i : b) gsum += m.grading[i];
      out.grading.push_back(gsum);
    }
  }

  std::vector<std::vector<std::pair<int, int>>> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = column_terms(m, j);

  // Column c is the product of the images of the tuple's factors, expanded
  // in the commutative monomial basis.
  std::map<std::vector<int>, long long> poly, next;
  for (size_t c = 0; c < basis.size(); ++c) {
    poly.clear();
    poly[{}] = 1;
    for (int idx : basis[c]) {
      next.clear();
      for (const auto& [mono, coef] : poly) {
        for (const auto& [row, val] : cols[idx]) {
          std::vector<int> m2 = mono;
          m2.insert(std::upper_bound(m2.begin(), m2.end(), row), row);
          next[m2] = (next[m2] + coef * val) % p;
        }
      }
      poly.swap(next);
    }
    for (const auto& [mono, coef] : poly)
      if (coef) out.at(index.at(mono), static_cast<int>(c)) = static_cast<std::uint8_t>(coef);
  }
  return out;
}

GfpMatrix ext_power(const GfpMatrix& m, int k, int dim_cap) {
  const int n = m.n, p = m.p;
  if (k < 1 || k > n) fail(Errc::InvalidArgument, "exterior power wants 1 <= k <= n");
  long long dim = binomial_capped(n, k, dim_cap);
  check_dim_cap(dim, dim_cap);

  std::vector<std::vector<int>> basis;
  basis.reserve(dim);
  std::vector<int> tup(k);
  for (int i = 0; i < k; ++i) tup[i] = i;
  while (true) {
    basis.push_back(tup);
    int i = k - 1;
    while (i >= 0 && tup[i] == n - k + i) --i;
    if (i < 0) break;
    ++tup[i];
    for (int j = i + 1; j < k; ++j) tup[j] = tup[j - 1] + 1;
  }
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

  GfpMatrix out = GfpMatrix::zero(p, static_cast<int>(dim));
  if (m.graded()) {
    out.grading.reserve(dim);
    for (const auto& b : basis) {
      int gsum = 0;
      for (int i : b) gsum += m.grading[i];
      out.grading.push_back(gsum);
    }
  }

  std::vector<std::vector<std::pair<int, int>>> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = column_terms(m, j);

  // Wedge of the factor images; duplicate rows vanish, sorting fixes signs.
  struct Term { std::vector<int> rows; long long coef; };
  std::vector<Term> terms, next;
  for (size_t c = 0; c < basis.size(); ++c) {
    terms.assign(1, Term{{}, 1});
    for (int idx : basis[c]) {
      next.clear();
      for (const auto& t : terms)
        for (const auto& [row, val] : cols[idx]) {
          if (std::find(t.rows.begin(), t.rows.end(), row) != t.rows.end()) continue;
          Term nt = t;
          nt.rows.push_back(row);
          nt.coef = nt.coef * val % p;
          next.push_back(std::move(nt));
        }
      terms.swap(next);
    }
    std::map<std::vector<int>, long long> accum;
    for (auto& t : terms) {
      // Sign of the permutation sorting the row tuple.
      int sign = 1;
      std::vector<int> rows = t.rows;
      for (size_t i = 0; i + 1 < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j)
          if (rows[i] > rows[j]) {
            std::swap(rows[i], rows[j]);
            sign = -sign;
          }
      long long v = (sign > 0 ? t.coef : (p - t.coef) % p);
      accum[rows] = (accum[rows] + v) % p;
    }
    for (const auto& [rows, coef] : accum)
      if (coef) out.at(index.at(rows), static_cast<int>(c)) = static_cast<std::uint8_t>(coef);
  }
  return out;
}

GfpMatrix tensor(const GfpMatrix& a, const GfpMatrix& b, int dim_cap) {
  if (a.p != b.p) fail(Errc::InvalidArgument, "modulus mismatch");
  long long dim = static_cast<long long>(a.n) * b.n;
  check_dim_cap(dim, dim_cap);
  const int p = a.p;
  GfpMatrix out = GfpMatrix::zero(p, static_cast<int>(dim));
  for (int i1 = 0; i1 < a.n; ++i1)
    for (int j1 = 0; j1 < a.n; ++j1) {
      int av = a(i1, j1);
      if (!av) continue;
      for (int i2 = 0; i2 < b.n; ++i2)
        for (int j2 = 0; j2 < b.n; ++j2) {
          int bv = b(i2, j2);
          if (!bv)
            continue;
          out.at(i1 * b.n + i2, j1 * b.n + j2) = static_cast<std::uint8_t>(av * bv % p);
        }
    }
  if (a.graded() && b.graded()) {
    out.grading.reserve(dim);
    for (int i1 = 0; i1 < a.n; ++i1)
      for (int i2 = 0; i2 < b.n; ++i2) out.grading.push_back(a.grading[i1] + b.grading[i2]);
  }
  return out;
}

std::string to_string(const Construction& c) {
  std::ostringstream os;
  for (size_t i = 0; i < c.factors.size(); ++i) {
    const Factor& f = c.factors[i];
    if (i) os << 'x';
    switch (f.kind) {
      case Factor::Kind::Natural: os << 'N'; break;
      case Factor::Kind::Sym: os << 'S' << f.param; break;
      case Factor::Kind::Ext: os << 'E' << f.param; break;
      case Factor::Kind::Spin: os << "SPIN"; break;
    }
    if (f.twist != 0) os << '@' << f.twist;
  }
  return os.str();
}

Construction parse_construction(const std::string& s) {
  Construction c;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find('x', pos);
    if (end == std::string::npos) end = s.size();
    std::string tok = s.substr(pos, end - pos);
    pos = end + 1;
    Factor f;
    size_t at = tok.find('@');
    if (at != std::string::npos) {
      f.twist = std::stoi(tok.substr(at + 1));
      tok = tok.substr(0, at);
    }
    if (tok == "N") {
      f.kind = Factor::Kind::Natural;
    } else if (tok == "SPIN") {
      f.kind = Factor::Kind::Spin;
    } else if (!tok.empty() && (tok[0] == 'S' || tok[0] == 'E')) {
      f.kind = tok[0] == 'S' ? Factor::Kind::Sym : Factor::Kind::Ext;
      f.param = std::stoi(tok.substr(1));
      if (f.param < 1) fail(Errc::InvalidArgument, "construction parameter must be positive");
    } else {
      fail(Errc::InvalidArgument, "cannot parse construction factor '" + tok + "'");
    }
    if (f.twist < 0) fail(Errc::InvalidArgument, "negative twist");
    c.factors.push_back(f);
  }
  if (c.factors.empty()) fail(Errc::InvalidArgument, "empty construction");
  return c;
}

namespace {

Weight factor_weight(const GroupType& g, const Factor& f) {
  switch (f.kind) {
    case Factor::Kind::Natural: return fundamental_weight(g.rank, 1);
    case Factor::Kind::Sym: return scale(f.param, fundamental_weight(g.rank, 1));
    case Factor::Kind::Ext:
      if (f.param > g.rank) fail(Errc::InvalidArgument, "exterior power index exceeds the rank");
      return fundamental_weight(g.rank, f.param);
    case Factor::Kind::Spin: return fundamental_weight(g.rank, g.rank);
  }
  fail(Errc::Internal, "bad factor kind");
}

long long factor_dim(const GroupType& g, const Factor& f, long long cap) {
  const long long n = natural_dim(g);
  switch (f.kind) {
    case Factor::Kind::Natural: return n;
    case Factor::Kind::Sym: return binomial_capped(n + f.param - 1, f.param, cap);
    case Factor::Kind::Ext: return binomial_capped(n, f.param, cap);
    case Factor::Kind::Spin: {
      if (g.rank > 62) fail(Errc::SizeLimit, "spin dimension overflow");
      return 1LL << g.rank;
    }
  }
  fail(Errc::Internal, "bad factor kind");
}

}  // namespace

Weight construction_weight(const GroupType& g, const Construction& c, int p) {
  Weight w = zero_weight(g.rank);
  for (const Factor& f : c.factors) {
    long long mult = 1;
    for (int t = 0; t < f.twist; ++t) mult *= p;
    if (mult > 1'000'000'000) fail(Errc::SizeLimit, "twist too large");
    w = add(w, scale(static_cast<int>(mult), factor_weight(g, f)));
  }
  return w;
}

long long construction_dim(const GroupType& g, const Construction& c, int dim_cap) {
  long long d = 1;
  for (const Factor& f : c.factors) {
    d *= factor_dim(g, f, dim_cap);
    check_dim_cap(d, dim_cap);
  }
  return d;
}

bool matrix_realizable(const Construction& c) {
  return std::all_of(c.factors.begin(), c.factors.end(),
                     [](const Factor& f) { return f.kind != Factor::Kind::Spin; });
}

bool certify_irreducible(const GroupType& g, const Construction& c, int p,
                         long long expected_dim) {
  // Distinct twists: the product is then the irreducible with the digit sum
  // highest weight as long as each untwisted piece is irreducible and
  // p-restricted.
  std::vector<int> twists;
  for (const Factor& f : c.factors) twists.push_back(f.twist);
  std::sort(twists.begin(), twists.end());
  if (std::adjacent_find(twists.begin(), twists.end()) != twists.end()) return false;

  RootSystem rs = build_root_system(g);
  BigInt recorded = 1;
  for (const Factor& f : c.factors) {
    bool listed = false;
    switch (f.kind) {
      case Factor::Kind::Natural:
        listed = g.family == GroupFamily::A || g.family == GroupFamily::C;
        break;
      case Factor::Kind::Sym:
        listed = (g.family == GroupFamily::A || g.family == GroupFamily::C) && f.param < p;
        break;
      case Factor::Kind::Ext:
        listed = g.family == GroupFamily::A && f.param >= 1 && f.param <= g.rank;
        break;
      case Factor::Kind::Spin:
        listed = g.family == GroupFamily::B;
        break;
    }
    if (!listed) return false;
    Weight fw = factor_weight(g, f);
    if (!is_p_restricted(fw, p)) return false;
    recorded *= weyl_dimension(rs, fw);
  }
  return recorded == expected_dim;
}

GfpMatrix construction_matrix(const UnipotentClass& cls, const Construction& c, int dim_cap) {
  if (!matrix_realizable(c))
    fail(Errc::InvalidArgument, "construction has no matrix realization here: " + to_string(c));
  construction_dim(cls.group, c, dim_cap);  // cap check before any work
  GfpMatrix base = natural_matrix(cls);
  GfpMatrix out;
  bool first = true;
  for (const Factor& f : c.factors) {
    // Frobenius twists fix matrices over the prime field entrywise.
    GfpMatrix piece;
    switch (f.kind) {
      case Factor::Kind::Natural: piece = base; break;
      case Factor::Kind::Sym: piece = sym_power(base, f.param, dim_cap); break;
      case Factor::Kind::Ext: piece = ext_power(base, f.param, dim_cap); break;
      case Factor::Kind::Spin: fail(Errc::Internal, "unreachable");
    }
    out = first ? std::move(piece) : tensor(out, piece, dim_cap);
    first = false;
  }
  return out;
}

}  // namespace oracle
}  // namespace pjordan
