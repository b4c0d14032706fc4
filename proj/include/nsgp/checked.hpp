#pragma once

#include <cstdint>
#include <numeric>

#include "nsgp/errors.hpp"

namespace nsgp {

using Int = std::int64_t;

// Overflow-checked arithmetic.  User-supplied magnitudes pass through these
// at API boundaries and in formula evaluation; interior loops work on values
// already validated to be far below the 64-bit range.

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

/// Floor division, b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Ceiling division, b > 0.
inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

/// Remainder in [0, b), b > 0.
inline Int mod_floor(Int a, Int b) {
  Int r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace nsgp
