#pragma once

#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pjordan {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class Errc {
  InvalidRank,
  InvalidPrime,
  InvalidArgument,
  NotARoot,
  NotDominant,
  BadPartitionSum,
  PartExceedsP,
  ParityViolation,
  IdentityClass,
  MNotLessThanR,
  NonIntegralResult,
  LemmaMismatch,
  SizeLimit,
  MalformedCharacter,
  NotUnipotent,
  NoGrading,
  BlockTooLarge,
  Internal,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline long long to_ll(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    fail(Errc::SizeLimit, "value does not fit in 64 bits");
  return v.convert_to<long long>();
}

// Exact rational -> integer, throwing if not integral.
inline BigInt rat_to_int(const BigRat& v, Errc on_fail = Errc::NonIntegralResult) {
  if (boost::multiprecision::denominator(v) != 1)
    fail(on_fail, "expected an integral value");
  return boost::multiprecision::numerator(v);
}

}  // namespace pjordan
