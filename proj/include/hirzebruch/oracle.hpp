#pragma once

// Brute-force reference values. Nothing here may call into cohomology.hpp:
// the point of this header is to be an independent computation.

#include <cstdint>

#include "picard.hpp"

namespace hirzebruch {

/// Counts the monomial basis {(i,j) : 0 <= i <= a, 0 <= j <= b - i e} of
/// H^0(O(ah+bf)) one lattice point at a time.
inline std::int64_t oracle_h0(const Surface& S, Divisor c) {
  std::int64_t count = 0;
  for (std::int64_t i = 0; i <= c.a; ++i) {
    const std::int64_t top = c.b - i * S.e();
    for (std::int64_t j = 0; j <= top; ++j) ++count;
  }
  return count;
}

/// h^2 through Serre duality, with K written out by hand.
inline std::int64_t oracle_h2(const Surface& S, Divisor c) {
  return oracle_h0(S, Divisor{-2 - c.a, -(S.e() + 2) - c.b});
}

/// Euler characteristic as 1 + c.(c-K)/2 with the intersection form expanded
/// directly (no shared code with chi()).
inline std::int64_t oracle_chi(const Surface& S, Divisor c) {
  const std::int64_t e = S.e();
  const std::int64_t ka = c.a + 2, kb = c.b + e + 2;  // c - K
  const std::int64_t self = -e * c.a * ka + c.a * kb + ka * c.b;
  return 1 + self / 2;
}

}  // namespace hirzebruch
