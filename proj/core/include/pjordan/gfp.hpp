#pragma once

#include <cstdint>
#include <vector>

#include "pjordan/char0.hpp"

namespace pjordan {
namespace oracle {

/// Dense matrix over GF(p), p an odd prime <= 251, entries stored as
/// one-byte residues. The optional grading assigns an integer weight to each
/// basis vector; constructions keep it additive.
struct GfpMatrix {
  int p = 0;
  int n = 0;
  std::vector<std::uint8_t> e;  // row-major, n*n
  std::vector<int> grading;     // empty = ungraded

  static GfpMatrix zero(int p, int n);
  static GfpMatrix identity(int p, int n);

  std::uint8_t operator()(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
  std::uint8_t& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
  bool graded() const { return !grading.empty(); }
};

void check_prime_modulus(int p);

GfpMatrix mul(const GfpMatrix& a, const GfpMatrix& b);

/// Inverse by Gauss-Jordan; throws InvalidArgument on a singular input.
GfpMatrix inverse(const GfpMatrix& a);

int rank(const GfpMatrix& a);

/// Jordan type from the rank profile r_j = rank((M-I)^j): the number of
/// blocks of size >= j is r_{j-1} - r_j. Throws NotUnipotent if the profile
/// stabilizes above zero.
JordanType jordan_type(const GfpMatrix& m);

/// True iff the image of every grade-t basis vector under (M-I)^{p-1} lies
/// in the span of grades >= t + 2p - 2. Throws NoGrading if ungraded.
bool grading_containment_check(const GfpMatrix& m);

}  // namespace oracle
}  // namespace pjordan
