#pragma once

#include <cstdint>

#include "mirk/errors.hpp"

namespace mirk {

// Distances and budgets are kept in signed 64-bit arithmetic; anything that
// would wrap is reported as an OverflowError instead.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* context = "addition") {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(context);
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b, const char* context = "subtraction") {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError(context);
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* context = "multiplication") {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(context);
  return r;
}

}  // namespace mirk
