#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "picard.hpp"

namespace hirzebruch {

struct CohomologyTriple {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;

  friend bool operator==(const CohomologyTriple&, const CohomologyTriple&) = default;

  std::int64_t euler() const { return checked::add(checked::sub(h0, h1), h2); }
};

/// h^0(F_e, O(ah+bf)) = sum_{i=0..a} max(0, b - i e + 1), evaluated in closed
/// form: only the first min(a, floor(b/e)) + 1 terms are positive.
inline std::int64_t h0(const Surface& S, Divisor c) {
  using namespace checked;
  if (c.a < 0 || c.b < 0) return 0;
  const std::int64_t k = std::min(c.a, c.b / S.e());
  const std::int64_t k1 = add(k, 1);
  // k(k+1) is even, so the halving is exact.
  const std::int64_t tri = (k % 2 == 0) ? mul(k / 2, k1) : mul(k, k1 / 2);
  return sub(mul(k1, add(c.b, 1)), mul(S.e(), tri));
}

/// Serre duality: h^2(L) = h^0(K - L).
inline std::int64_t h2(const Surface& S, Divisor c) { return h0(S, canonical_class(S) - c); }

/// Riemann-Roch: 1 + ab + a + b - e a(a+1)/2.
inline std::int64_t chi(const Surface& S, Divisor c) {
  using namespace checked;
  const std::int64_t pairs = mul(c.a, add(c.a, 1));
  if (pairs % 2 != 0) throw std::logic_error("chi: a(a+1) must be even");
  return sub(add(add(1, mul(c.a, c.b)), add(c.a, c.b)), mul(S.e(), pairs / 2));
}

inline std::int64_t h1(const Surface& S, Divisor c) {
  const std::int64_t v = checked::sub(checked::add(h0(S, c), h2(S, c)), chi(S, c));
  if (v < 0) throw std::logic_error("h1 negative for class " + to_string(c) + ": cohomology formulas are inconsistent");
  return v;
}

inline CohomologyTriple cohomology(const Surface& S, Divisor c) { return {h0(S, c), h1(S, c), h2(S, c)}; }

/// The three-way criterion for h^1 = 0 read off the Leray spectral sequence;
/// kept separate from h1() so the two can be checked against each other.
inline bool h1_vanishes(const Surface& S, Divisor c) {
  using namespace checked;
  const std::int64_t e = S.e();
  if (c.a >= 0) return c.b >= sub(mul(e, c.a), 1);
  if (c.a == -1) return true;
  return c.b <= sub(add(mul(e, c.a), e), 1);
}

struct ProfileRow {
  std::int64_t t;
  Divisor twisted;
  CohomologyTriple triple;
};

inline std::vector<ProfileRow> cohomology_profile(const Surface& S, Divisor c, Divisor by, std::int64_t t_from,
                                                  std::int64_t t_to) {
  if (t_from > t_to)
    throw std::invalid_argument("empty twist range " + std::to_string(t_from) + ".." + std::to_string(t_to));
  std::vector<ProfileRow> rows;
  rows.reserve(static_cast<std::size_t>(checked::sub(t_to, t_from)) + 1);
  for (std::int64_t t = t_from;; ++t) {
    const Divisor d = twist(c, t, by);
    rows.push_back({t, d, cohomology(S, d)});
    if (t == t_to) break;
  }
  return rows;
}

}  // namespace hirzebruch
