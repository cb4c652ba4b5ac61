#pragma once

// Deciding the two twist-cohomology properties of a sheaf E with respect to a
// spanned twisting class L:
//
//   £  (Property::Natural)   h0(E + tL) > 0  implies  h1(E + tL) = 0, all t
//   ££ (Property::Vanishing) h1(E + tL) = 0 for every t
//
// Closed-form deciders are provided for line bundles, direct sums and ideal
// sheaf models; scan_verdict() is the brute-force referee they are tested
// against.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "checked.hpp"
#include "cohomology.hpp"
#include "picard.hpp"
#include "sheaves.hpp"

namespace hirzebruch {

enum class Property { Natural, Vanishing };

enum class Outcome { Holds, Fails, Indeterminate };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "HOLDS";
    case Outcome::Fails: return "FAILS";
    case Outcome::Indeterminate: return "INDET";
  }
  return "?";
}

inline Outcome parse_outcome(std::string_view s) {
  if (s == "HOLDS") return Outcome::Holds;
  if (s == "FAILS") return Outcome::Fails;
  if (s == "INDET") return Outcome::Indeterminate;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

/// Holds / Fails / Indeterminate plus the twist that decided it.
struct Verdict {
  Outcome outcome = Outcome::Indeterminate;
  std::optional<std::int64_t> witness_t;
  std::int64_t witness_h0 = 0;
  std::int64_t witness_h1 = 0;

  bool holds() const { return outcome == Outcome::Holds; }
  bool fails() const { return outcome == Outcome::Fails; }
};

struct Line {
  Divisor c;
};

struct DirectSum {
  std::vector<Divisor> summands;
};

using SheafModel = std::variant<Line, DirectSum, IdealSheafModel>;

struct ScanRow {
  std::int64_t t;
  std::int64_t h0;
  std::int64_t h1;
};

struct ScanEvidence {
  std::vector<ScanRow> rows;
  Verdict verdict;
  std::int64_t stabilization_bound = 0;
};

namespace detail {

/// The h-coefficient of the twisting class must be positive: otherwise
/// (multiples of f) a component with negative h-coefficient never acquires
/// sections and there is no first twist to start from.
inline void require_twisting_class(const Surface& S, Divisor by) {
  if (by == Divisor{0, 0}) throw DomainError("twisting class must be nonzero");
  if (!is_spanned(S, by)) throw DomainError("twisting class " + to_string(by) + " is not spanned");
  if (by.a < 1) throw DomainError("twisting class " + to_string(by) + " has no h-component; twists never acquire sections");
}

inline void require_nonempty(const SheafModel& model) {
  if (auto* ds = std::get_if<DirectSum>(&model); ds && ds->summands.empty())
    throw std::invalid_argument("direct sum needs at least one summand");
}

inline std::vector<Divisor> component_classes(const SheafModel& model) {
  return std::visit(
      [](const auto& m) -> std::vector<Divisor> {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Line>) return {m.c};
        else if constexpr (std::is_same_v<T, DirectSum>) return m.summands;
        else return {m.twist_class};
      },
      model);
}

/// First t with c + t*by effective.
inline std::int64_t first_effective_twist(Divisor c, Divisor by) {
  return std::max(checked::ceil_div(checked::neg(c.a), by.a), checked::ceil_div(checked::neg(c.b), by.b));
}

/// First t at which every component has h-coefficient >= 0. From there on the
/// zero/nonzero status of h1 of each component can only change once.
inline std::int64_t nonnegative_h_bound(const SheafModel& model, Divisor by) {
  std::int64_t bound = INT64_MIN;
  for (Divisor c : component_classes(model)) bound = std::max(bound, checked::ceil_div(checked::neg(c.a), by.a));
  return bound;
}

/// Last t at which every component has h-coefficient <= -2.
inline std::int64_t very_negative_h_bound(const SheafModel& model, Divisor by) {
  std::int64_t bound = INT64_MAX;
  for (Divisor c : component_classes(model)) bound = std::min(bound, checked::floor_div(checked::sub(-2, c.a), by.a));
  return bound;
}

}  // namespace detail

inline CohomologyTriple model_cohomology(const Surface& S, const SheafModel& model, std::int64_t t, Divisor by) {
  return std::visit(
      [&](const auto& m) -> CohomologyTriple {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Line>) {
          return cohomology(S, twist(m.c, t, by));
        } else if constexpr (std::is_same_v<T, DirectSum>) {
          CohomologyTriple sum;
          for (Divisor c : m.summands) {
            const CohomologyTriple x = cohomology(S, twist(c, t, by));
            sum = {checked::add(sum.h0, x.h0), checked::add(sum.h1, x.h1), checked::add(sum.h2, x.h2)};
          }
          return sum;
        } else {
          return cohomology_ideal(S, twist(m, t, by));
        }
      },
      model);
}

/// The first twist t with h0(model + t*by) > 0.
inline std::int64_t m0(const Surface& S, const SheafModel& model, Divisor by) {
  detail::require_twisting_class(S, by);
  detail::require_nonempty(model);
  if (const auto* ideal = std::get_if<IdealSheafModel>(&model)) {
    // h0 of I_Z(c + t by) is nondecreasing in t and grows by at least one per
    // step once c + t by is effective, so this terminates within z + 1 steps.
    std::int64_t t = detail::first_effective_twist(ideal->twist_class, by);
    while (h0_ideal(S, twist(*ideal, t, by)) == 0) ++t;
    return t;
  }
  std::int64_t best = INT64_MAX;
  for (Divisor c : detail::component_classes(model)) best = std::min(best, detail::first_effective_twist(c, by));
  return best;
}

/// Exhaustive scan over the finite window outside of which the verdict is
/// determined by monotonicity. For £ the window is [m0, T*] with
/// T* = max(m0, T_h + 1) + 1, T_h the first twist where every component has
/// nonnegative h-coefficient; for ££ it is [T_neg, T*] with T_neg the last
/// twist where every component has h-coefficient <= -2.
inline ScanEvidence scan_verdict(const Surface& S, const SheafModel& model, Divisor by, std::int64_t extra_window,
                                 Property property = Property::Natural) {
  if (extra_window < 0) throw std::invalid_argument("extra_window must be >= 0");
  const std::int64_t first = m0(S, model, by);
  const std::int64_t t_h = detail::nonnegative_h_bound(model, by);
  ScanEvidence ev;
  ev.stabilization_bound = std::max(first, checked::add(t_h, 1)) + 1;
  const std::int64_t hi = checked::add(ev.stabilization_bound, extra_window);
  const std::int64_t lo = property == Property::Natural
                              ? first
                              : checked::sub(std::min(detail::very_negative_h_bound(model, by), first), extra_window);
  ev.verdict.outcome = Outcome::Holds;
  for (std::int64_t t = lo; t <= hi; ++t) {
    const CohomologyTriple x = model_cohomology(S, model, t, by);
    ev.rows.push_back({t, x.h0, x.h1});
    const bool bad = x.h1 > 0 && (property == Property::Vanishing || x.h0 > 0);
    if (bad && !ev.verdict.fails()) ev.verdict = {Outcome::Fails, t, x.h0, x.h1};
  }
  return ev;
}

// ---------------------------------------------------------------------------
// Line bundles

/// £ w.r.t. M for O(uh+vf): v >= eu - 1.
inline bool natural_line_m(const Surface& S, Divisor L) { return L.b >= checked::sub(checked::mul(S.e(), L.a), 1); }

/// ££ w.r.t. M for O(uh+vf): eu - 1 <= v <= eu + e - 1.
inline bool vanishing_line_m(const Surface& S, Divisor L) {
  const std::int64_t eu = checked::mul(S.e(), L.a);
  return L.b >= eu - 1 && L.b <= checked::add(eu, S.e()) - 1;
}

/// £ w.r.t. R = h + (e+1)f: either v >= (e+1)u, or with y = ceil(-v/(e+1))
/// (the first twist carrying sections) the twist L + yR has h1 = 0, which
/// reads v + y >= eu - 1.
inline bool natural_line_r(const Surface& S, Divisor L) {
  using namespace checked;
  const std::int64_t e = S.e();
  if (L.b >= mul(add(e, 1), L.a)) return true;
  const std::int64_t y = ceil_div(neg(L.b), add(e, 1));
  return add(L.b, y) >= sub(mul(e, L.a), 1);
}

/// £ for a line bundle w.r.t. any admissible twisting class. Sections first
/// appear at m0 with h-coefficient >= 0; from there the slack b - ea + 1
/// changes by (d - ec) >= 0 per step, so h1 = 0 at m0 settles every later twist.
inline bool natural_line(const Surface& S, Divisor L, Divisor by) {
  const std::int64_t first = m0(S, Line{L}, by);
  return h1_vanishes(S, twist(L, first, by));
}

/// ££ for a line bundle w.r.t. any admissible twisting class. Above the first
/// twist with h-coefficient >= 0 the vanishing condition is monotone upward;
/// below the last twist with h-coefficient <= -2 the condition b - ea <= e - 1
/// is monotone downward. Everything in between is checked one by one.
inline bool vanishing_line(const Surface& S, Divisor L, Divisor by) {
  detail::require_twisting_class(S, by);
  const std::int64_t up = checked::ceil_div(checked::neg(L.a), by.a);
  const std::int64_t down = checked::floor_div(checked::sub(-2, L.a), by.a);
  for (std::int64_t t = down; t <= up; ++t)
    if (!h1_vanishes(S, twist(L, t, by))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Direct sums

/// £ w.r.t. M for L_1 + ... + L_r. Summands are ordered by u descending, ties
/// by v descending; m is the first twist with sections (-u_1, or -u_1 + 1 when
/// v_1 = e u_1 - 1). Every summand must itself satisfy v_i >= e u_i - 1, and a
/// summand whose h-coefficient can still be <= -2 at t = m (u_i + m <= -2)
/// additionally needs -1 <= v_i - e u_i <= e - 1.
inline bool natural_sum(const Surface& S, std::vector<Divisor> classes) {
  if (classes.empty()) throw std::invalid_argument("direct sum needs at least one summand");
  const std::int64_t e = S.e();
  for (Divisor c : classes)
    if (!natural_line_m(S, c)) return false;
  std::sort(classes.begin(), classes.end(), [](Divisor x, Divisor y) { return x.a != y.a ? x.a > y.a : x.b > y.b; });
  const Divisor first = classes.front();
  const std::int64_t m = first.b >= checked::mul(e, first.a) ? -first.a : checked::add(-first.a, 1);
  if (m != m0(S, DirectSum{classes}, m_class(S)))
    throw std::logic_error("direct sum: first twist with sections disagrees with the sorted-summand rule");
  for (std::size_t i = 1; i < classes.size(); ++i) {
    const Divisor c = classes[i];
    if (checked::add(c.a, m) >= -1) continue;
    const std::int64_t slack = checked::sub(c.b, checked::mul(e, c.a));
    if (slack < -1 || slack > e - 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ideal sheaf models

/// h1(I_Z(c)) - h1(O(c)): the number of points that fail to impose
/// independent conditions, max(0, z - X) with X = h0(c) for general points and
/// X = h0(c) - h0(c - C) for points on the curve C.
inline std::int64_t ideal_deficiency(const Surface& S, const IdealSheafModel& m) {
  const Divisor c = m.twist_class;
  std::int64_t room = h0(S, c);
  if (m.config.locus == Locus::OnSectionH) room = checked::sub(room, h0(S, c - kSectionClass));
  if (m.config.locus == Locus::OnFiber) room = checked::sub(room, h0(S, c - kFiberClass));
  return detail::pos(checked::sub(m.config.z, room));
}

/// £ w.r.t. M for I_Z(uh+vf). Twisting by M fixes v - eu, so h1 of the line
/// bundle is either zero for every twist with sections or for none; the point
/// deficiency is nonincreasing in t. Both are therefore decided at m0.
inline bool natural_ideal(const Surface& S, const IdealSheafModel& m) {
  const Divisor M = m_class(S);
  const std::int64_t first = m0(S, SheafModel{m}, M);
  const IdealSheafModel at = twist(m, first, M);
  return h1_vanishes(S, at.twist_class) && ideal_deficiency(S, at) == 0;
}

// ---------------------------------------------------------------------------

/// Dispatches to the closed-form decider for the model; falls back to the scan
/// where no closed form applies.
inline bool decide(const Surface& S, const SheafModel& model, Divisor by, Property property) {
  const bool by_m = by == m_class(S);
  if (const auto* line = std::get_if<Line>(&model)) {
    if (property == Property::Natural) {
      if (by_m) return natural_line_m(S, line->c);
      if (by == r_class(S)) return natural_line_r(S, line->c);
      return natural_line(S, line->c, by);
    }
    return by_m ? vanishing_line_m(S, line->c) : vanishing_line(S, line->c, by);
  }
  if (const auto* sum = std::get_if<DirectSum>(&model)) {
    if (property == Property::Natural && by_m) return natural_sum(S, sum->summands);
    if (property == Property::Vanishing) {
      detail::require_nonempty(model);
      return std::all_of(sum->summands.begin(), sum->summands.end(),
                         [&](Divisor c) { return vanishing_line(S, c, by); });
    }
  }
  if (const auto* ideal = std::get_if<IdealSheafModel>(&model); ideal && property == Property::Natural && by_m)
    return natural_ideal(S, *ideal);
  return scan_verdict(S, model, by, 0, property).verdict.holds();
}

}  // namespace hirzebruch
