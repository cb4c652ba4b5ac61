#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hirzebruch {

// Exact 64-bit arithmetic. Every operation either returns the true value or
// throws std::overflow_error; nothing wraps silently.
namespace checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in " + std::to_string(x) + " + " + std::to_string(y));
  return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in " + std::to_string(x) + " - " + std::to_string(y));
  return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in " + std::to_string(x) + " * " + std::to_string(y));
  return r;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

/// Floor of x/y for y > 0.
inline std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

/// Ceiling of x/y for y > 0.
inline std::int64_t ceil_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) == (y < 0))) ++q;
  return q;
}

}  // namespace checked
}  // namespace hirzebruch
