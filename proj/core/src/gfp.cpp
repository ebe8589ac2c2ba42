#include "pjordan/gfp.hpp"

#include <algorithm>
#include <array>

namespace pjordan {
namespace oracle {

void check_prime_modulus(int p) {
  if (p <= 2 || p > 251 || !is_prime(p))
    fail(Errc::InvalidPrime, std::to_string(p) + " is not an odd prime <= 251");
}

GfpMatrix GfpMatrix::zero(int p, int n) {
  check_prime_modulus(p);
  if (n < 0) fail(Errc::InvalidArgument, "negative dimension");
  GfpMatrix m;
  m.p = p;
  m.n = n;
  m.e.assign(static_cast<size_t>(n) * n, 0);
  return m;
}

GfpMatrix GfpMatrix::identity(int p, int n) {
  GfpMatrix m = zero(p, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

std::array<int, 252> inverse_table(int p) {
  std::array<int, 252> inv{};
  inv[1] = 1;
  for (int a = 2; a < p; ++a) {
    // Fermat: a^{p-2} mod p.
    long long base = a, acc = 1;
    int e = p - 2;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    inv[a] = static_cast<int>(acc);
  }
  return inv;
}

struct Echelon {
  int rank = 0;
  std::vector<int> pivot_cols;
};

// Row echelon over GF(p) on an int32 workspace with lazy reduction: entries
// stay bounded by rows * (p-1)^2, which fits int32 for n <= 20000, p <= 251.
Echelon echelonize(std::vector<std::int32_t>& w, int rows, int cols, int p) {
  auto inv = inverse_table(p);
  auto canon = [p](std::int32_t v) {
    int r = static_cast<int>(v % p);
    return r < 0 ? r + p : r;
  };
  Echelon out;
  for (int col = 0; col < cols && out.rank < rows; ++col) {
    int piv = -1;
    for (int row = out.rank; row < rows; ++row) {
      if (canon(w[static_cast<size_t>(row) * cols + col]) != 0) { piv = row; break; }
    }
    if (piv < 0) continue;
    if (piv != out.rank)
      std::swap_ranges(w.begin() + static_cast<size_t>(piv) * cols,
                       w.begin() + static_cast<size_t>(piv + 1) * cols,
                       w.begin() + static_cast<size_t>(out.rank) * cols);
    std::int32_t* prow = w.data() + static_cast<size_t>(out.rank) * cols;
    for (int j = col; j < cols; ++j) prow[j] = canon(prow[j]);
    int pinv = inv[prow[col]];
    for (int row = out.rank + 1; row < rows; ++row) {
      std::int32_t* rp = w.data() + static_cast<size_t>(row) * cols;
      int v = canon(rp[col]);
      if (v == 0) { rp[col] = 0; continue; }
      std::int32_t f = static_cast<std::int32_t>(static_cast<long long>(v) * pinv % p);
      for (int j = col; j < cols; ++j) rp[j] -= f * prow[j];
    }
    out.pivot_cols.push_back(col);
    ++out.rank;
  }
  return out;
}

std::vector<std::int32_t> widen(const std::vector<std::uint8_t>& e) {
  return std::vector<std::int32_t>(e.begin(), e.end());
}

// C = A * B mod p, A is n x k, B is k x m, byte entries.
std::vector<std::uint8_t> mul_bytes(const std::vector<std::uint8_t>& a,
                                    const std::vector<std::uint8_t>& b, int n, int k, int m,
                                    int p) {
  std::vector<std::uint8_t> c(static_cast<size_t>(n) * m);
  std::vector<std::int32_t> acc(m);
  for (int i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const std::uint8_t* arow = a.data() + static_cast<size_t>(i) * k;
    for (int t = 0; t < k; ++t) {
      std::int32_t av = arow[t];
      if (!av) continue;
      const std::uint8_t* brow = b.data() + static_cast<size_t>(t) * m;
      for (int j = 0; j < m; ++j) acc[j] += av * brow[j];
    }
    std::uint8_t* crow = c.data() + static_cast<size_t>(i) * m;
    for (int j = 0; j < m; ++j) crow[j] = static_cast<std::uint8_t>(acc[j] % p);
  }
  return c;
}

// Basis of the column space: the original columns at the echelon pivots.
std::vector<std::uint8_t> select_columns(const std::vector<std::uint8_t>& y, int rows, int cols,
                                         const std::vector<int>& keep) {
  std::vector<std::uint8_t> c(static_cast<size_t>(rows) * keep.size());
  for (int i = 0; i < rows; ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      c[static_cast<size_t>(i) * keep.size() + j] = y[static_cast<size_t>(i) * cols + keep[j]];
  return c;
}

}  // namespace

GfpMatrix mul(const GfpMatrix& a, const GfpMatrix& b) {
  if (a.p != b.p) fail(Errc::InvalidArgument, "modulus mismatch");
  if (a.n != b.n) fail(Errc::InvalidArgument, "dimension mismatch");
  GfpMatrix c = GfpMatrix::zero(a.p, a.n);
  c.e = mul_bytes(a.e, b.e, a.n, a.n, a.n, a.p);
  return c;
}

GfpMatrix inverse(const GfpMatrix& a) {
  const int n = a.n, p = a.p;
  auto inv_tab = inverse_table(p);
  std::vector<std::int64_t> w(static_cast<size_t>(n) * 2 * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[static_cast<size_t>(i) * 2 * n + j] = a(i, j);
    w[static_cast<size_t>(i) * 2 * n + n + i] = 1;
  }
  auto canon = [p](std::int64_t v) {
    int r = static_cast<int>(v % p);
    return r < 0 ? r + p : r;
  };
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (canon(w[static_cast<size_t>(row) * 2 * n + col]) != 0) { piv = row; break; }
    if (piv < 0) fail(Errc::InvalidArgument, "matrix is singular");
    if (piv != col)
      std::swap_ranges(w.begin() + static_cast<size_t>(piv) * 2 * n,
                       w.begin() + static_cast<size_t>(piv + 1) * 2 * n,
                       w.begin() + static_cast<size_t>(col) * 2 * n);
    std::int64_t* prow = w.data() + static_cast<size_t>(col) * 2 * n;
    int pinv = inv_tab[canon(prow[col])];
    for (int j = 0; j < 2 * n; ++j) prow[j] = canon(prow[j]) * static_cast<std::int64_t>(pinv) % p;
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      std::int64_t* rp = w.data() + static_cast<size_t>(row) * 2 * n;
      std::int64_t f = canon(rp[col]);
      if (!f) continue;
      for (int j = 0; j < 2 * n; ++j) rp[j] = canon(rp[j] - f * prow[j]);
    }
  }
  GfpMatrix out = GfpMatrix::zero(p, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.at(i, j) = static_cast<std::uint8_t>(canon(w[static_cast<size_t>(i) * 2 * n + n + j]));
  return out;
}

int rank(const GfpMatrix& a) {
  auto w = widen(a.e);
  return echelonize(w, a.n, a.n, a.p).rank;
}

JordanType jordan_type(const GfpMatrix& m) {
  const int n = m.n, p = m.p;
  // N = M - I.
  std::vector<std::uint8_t> nmat = m.e;
  for (int i = 0; i < n; ++i) {
    int v = nmat[static_cast<size_t>(i) * n + i] - 1;
    nmat[static_cast<size_t>(i) * n + i] = static_cast<std::uint8_t>(v < 0 ? v + p : v);
  }

  std::vector<long long> blocks_ge;  // blocks_ge[j] = #blocks of size >= j+1
  std::vector<std::uint8_t> img = nmat;
  int cols = n;
  int prev_rank = n;
  for (int step = 1; step <= n + 1; ++step) {
    std::vector<std::int32_t> w(img.begin(), img.end());
    Echelon ech = echelonize(w, n, cols, p);
    if (ech.rank >= prev_rank && ech.rank > 0)
      fail(Errc::NotUnipotent, "rank profile stabilized above zero");
    blocks_ge.push_back(prev_rank - ech.rank);
    if (ech.rank == 0) break;
    auto basis = select_columns(img, n, cols, ech.pivot_cols);
    img = mul_bytes(nmat, basis, n, n, ech.rank, p);
    cols = ech.rank;
    prev_rank = ech.rank;
  }

  JordanType jt;
  for (size_t j = 0; j < blocks_ge.size(); ++j) {
    long long next = (j + 1 < blocks_ge.size()) ? blocks_ge[j + 1] : 0;
    long long count = blocks_ge[j] - next;
    if (count < 0) fail(Errc::Internal, "negative block count");
    for (long long i = 0; i < count; ++i) jt.blocks.push_back(static_cast<int>(j) + 1);
  }
  std::sort(jt.blocks.begin(), jt.blocks.end(), std::greater<>());
  if (jt.dim() != n) fail(Errc::Internal, "block sizes do not sum to the dimension");
  return jt;
}

bool grading_containment_check(const GfpMatrix& m) {
  if (!m.graded()) fail(Errc::NoGrading, "matrix carries no grading");
  const int n = m.n, p = m.p;
  std::vector<std::uint8_t> nmat = m.e;
  for (int i = 0; i < n; ++i) {
    int v = nmat[static_cast<size_t>(i) * n + i] - 1;
    nmat[static_cast<size_t>(i) * n + i] = static_cast<std::uint8_t>(v < 0 ? v + p : v);
  }
  std::vector<std::uint8_t> pw = nmat;
  for (int step = 2; step <= p - 1; ++step) pw = mul_bytes(nmat, pw, n, n, n, p);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (pw[static_cast<size_t>(i) * n + j] != 0 && m.grading[i] < m.grading[j] + 2 * p - 2)
        return false;
  return true;
}

}  // namespace oracle
}  // namespace pjordan
