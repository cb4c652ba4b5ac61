#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hirzebruch/sheaves.hpp"

using namespace hirzebruch;

namespace {

// Independent oracle: sections of O(ah+bf) in the affine chart are the
// polynomials sum c_ij s^i t^j with 0 <= i <= a, 0 <= j <= b - ie (s along the
// fiber, t on the base; h sits at s = infinity). Imposing vanishing at random
// points over F_p and taking the rank gives h0 of the ideal sheaf.
constexpr std::uint64_t kPrime = 2147483647ULL;

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) { return (x * y) % kPrime; }

std::uint64_t powmod(std::uint64_t x, std::uint64_t n) {
  std::uint64_t r = 1;
  for (x %= kPrime; n; n >>= 1, x = mulmod(x, x))
    if (n & 1) r = mulmod(r, x);
  return r;
}

std::int64_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::int64_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<std::int64_t>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t inv = powmod(rows[rank][c], kPrime - 2);
    for (auto& x : rows[rank]) x = mulmod(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + kPrime - mulmod(f, rows[rank][k])) % kPrime;
    }
    ++rank;
  }
  return rank;
}

std::int64_t linear_algebra_h0_ideal(const Surface& S, Locus locus, std::int64_t z, Divisor c, std::mt19937_64& rng) {
  std::vector<std::pair<std::int64_t, std::int64_t>> monomials;
  for (std::int64_t i = 0; i <= c.a; ++i)
    for (std::int64_t j = 0; j <= c.b - i * S.e(); ++j) monomials.emplace_back(i, j);
  if (monomials.empty()) return 0;
  std::uniform_int_distribution<std::uint64_t> coord(1, kPrime - 1);
  const std::uint64_t fiber_t = coord(rng);
  std::vector<std::vector<std::uint64_t>> conditions;
  for (std::int64_t k = 0; k < z; ++k) {
    const std::uint64_t s = coord(rng), t = coord(rng);
    std::vector<std::uint64_t> row;
    for (auto [i, j] : monomials) {
      switch (locus) {
        case Locus::GeneralPosition: row.push_back(mulmod(powmod(s, i), powmod(t, j))); break;
        case Locus::OnFiber: row.push_back(mulmod(powmod(s, i), powmod(fiber_t, j))); break;
        // at s = infinity only the top s-degree survives
        case Locus::OnSectionH: row.push_back(i == c.a ? powmod(t, j) : 0); break;
      }
    }
    conditions.push_back(std::move(row));
  }
  return static_cast<std::int64_t>(monomials.size()) - rank_mod_p(std::move(conditions));
}

}  // namespace

TEST(Sheaves, RestrictionDegree) {
  for (int e = 1; e <= 5; ++e) {
    const Surface S = make_surface(e);
    EXPECT_EQ(restriction_degree(S, m_class(S), Curve::SectionH), 0);
    EXPECT_EQ(restriction_degree(S, {7, -3}, Curve::Fiber), 7);
  }
  EXPECT_EQ(restriction_degree(make_surface(2), {1, 1}, Curve::SectionH), -1);
}

TEST(Sheaves, H0Ideal) {
  const Surface F1 = make_surface(1), F2 = make_surface(2);
  EXPECT_EQ(h0_ideal(F1, make_ideal(Locus::GeneralPosition, 2, {1, 1})), 1);
  EXPECT_EQ(h0_ideal(F2, make_ideal(Locus::OnSectionH, 1, {1, 1})), 2);
  for (Locus l : {Locus::GeneralPosition, Locus::OnSectionH, Locus::OnFiber})
    EXPECT_EQ(h0_ideal(F2, make_ideal(l, 0, {2, 5})), h0(F2, {2, 5}));
  EXPECT_THROW(make_ideal(Locus::OnFiber, -1, {0, 0}), DomainError);
}

TEST(Sheaves, H1H2Ideal) {
  const Surface F1 = make_surface(1), F2 = make_surface(2);
  EXPECT_EQ(h1_ideal(F2, make_ideal(Locus::OnSectionH, 1, {1, 1})), 1);
  EXPECT_EQ(h1_ideal(F1, make_ideal(Locus::GeneralPosition, 2, {1, 1})), 0);
  for (Locus l : {Locus::GeneralPosition, Locus::OnSectionH, Locus::OnFiber}) {
    EXPECT_EQ(h1_ideal(F2, make_ideal(l, 0, {1, 0})), h1(F2, {1, 0}));
    EXPECT_EQ(h2_ideal(F2, make_ideal(l, 4, {-3, -7})), h2(F2, {-3, -7}));
  }
}

TEST(Sheaves, ParseLocus) {
  EXPECT_EQ(parse_locus("general"), Locus::GeneralPosition);
  EXPECT_EQ(parse_locus("section"), Locus::OnSectionH);
  EXPECT_EQ(parse_locus("fiber"), Locus::OnFiber);
  EXPECT_THROW(parse_locus("plane"), std::invalid_argument);
}

TEST(SheavesProperty, AgreesWithLinearAlgebraOracle) {
  std::mt19937_64 rng(7);
  for (int e = 1; e <= 3; ++e) {
    const Surface S = make_surface(e);
    for (int a = -1; a <= 4; ++a)
      for (int b = -1; b <= 9; ++b)
        for (int z = 0; z <= 6; ++z)
          for (Locus l : {Locus::GeneralPosition, Locus::OnSectionH, Locus::OnFiber}) {
            const Divisor c{a, b};
            ASSERT_EQ(h0_ideal(S, make_ideal(l, z, c)), linear_algebra_h0_ideal(S, l, z, c, rng))
                << "e=" << e << " " << c << " z=" << z << " locus=" << to_string(l);
          }
  }
}

TEST(SheavesProperty, Invariants) {
  for (int e = 1; e <= 4; ++e) {
    const Surface S = make_surface(e);
    for (int a = -4; a <= 5; ++a)
      for (int b = -8; b <= 12; ++b)
        for (Locus l : {Locus::GeneralPosition, Locus::OnSectionH, Locus::OnFiber}) {
          const Divisor c{a, b};
          std::int64_t prev = h0(S, c);
          for (int z = 0; z <= 7; ++z) {
            const IdealSheafModel m = make_ideal(l, z, c);
            ASSERT_GE(h1_ideal(S, m), h1(S, c));
            const std::int64_t cur = h0_ideal(S, m);
            ASSERT_LE(cur, prev);
            ASSERT_GE(cur, prev - (z == 0 ? 0 : 1));
            prev = cur;
            if (l == Locus::GeneralPosition) {
              ASSERT_EQ(h1_ideal(S, m) == 0, h1_vanishes(S, c) && h0(S, c) >= z);
            }
            if (z == 0) { ASSERT_EQ(cohomology_ideal(S, m), cohomology(S, c)); }
          }
        }
  }
}
