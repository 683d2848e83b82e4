#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "partineq/errors.hpp"

namespace partineq {

/// Part sizes, frequencies and weights.
using Int = std::int64_t;

/// Exact integers for counts, series coefficients and threshold constants.
using BigInt = mpz_class;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
  return r;
}

/// Converts a BigInt that is known to fit; throws Overflow otherwise.
inline Int to_int(const BigInt& v) {
  if (!v.fits_slong_p()) throw Overflow("value exceeds 64-bit range: " + v.get_str());
  return static_cast<Int>(v.get_si());
}

inline BigInt to_big(Int v) { return BigInt(static_cast<long>(v)); }

}  // namespace partineq
