#pragma once

// Rank-2 bundles given as extensions
//
//   0 -> O(D) -> E(mM) -> I_Z(c1 + 2mM - D) -> 0                (minimal section)
//   0 -> O((1-m)h - emf) -> E -> I_S((u+m-1)h + (v+em)f) -> 0   (construction)
//
// Bundles are never materialized: only their numerical data, certificates,
// and cohomology intervals from the long exact sequence.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "cohomology.hpp"
#include "natural.hpp"
#include "picard.hpp"
#include "sheaves.hpp"

namespace hirzebruch {

struct ChernData {
  std::int64_t rank = 1;
  Divisor c1;
  std::int64_t c2 = 0;

  friend bool operator==(const ChernData&, const ChernData&) = default;
};

/// Divisor types (x,y) that the zero locus of a section of E(m0 M) can have:
/// (0,0), (1,0), (0,1)..(0,e), and (1,1)..(1,e-1) when e >= 2.
inline std::vector<Divisor> allowed_min_section_divisors(const Surface& S) {
  std::vector<Divisor> out{{0, 0}, {1, 0}};
  for (std::int64_t y = 1; y <= S.e(); ++y) out.push_back({0, y});
  for (std::int64_t y = 1; y <= S.e() - 1; ++y) out.push_back({1, y});
  return out;
}

/// c2(E(mM)) = s + D.c1 + 2m M.D - D^2 for the minimal-section sequence.
inline std::int64_t c2_twisted_min_section(const Surface& S, Divisor D, std::int64_t m, Divisor c1, std::int64_t s) {
  using namespace checked;
  if (s < 0) throw DomainError("point count s must be >= 0, got " + std::to_string(s));
  const std::int64_t mD = intersect(S, m_class(S), D);
  return sub(add(add(s, intersect(S, D, c1)), mul(mul(2, m), mD)), intersect(S, D, D));
}

/// Chern data of the untwisted E: c2(E) = c2(E(mM)) - m c1.M - m^2 M^2.
inline ChernData chern_min_section(const Surface& S, Divisor D, std::int64_t m, Divisor c1, std::int64_t s) {
  using namespace checked;
  const Divisor M = m_class(S);
  const std::int64_t twisted = c2_twisted_min_section(S, D, m, c1, s);
  const std::int64_t c2 = sub(sub(twisted, mul(m, intersect(S, c1, M))), mul(mul(m, m), intersect(S, M, M)));
  return {2, c1, c2};
}

struct AbTilde {
  std::int64_t a_tilde = 0;
  std::int64_t b_tilde = 0;
};

/// The admissible range [a~, b~] of the number of points s:
/// a~ = h0((u+2m-2)h + (v+2me-e)f), b~ = h0((u+2m-1)h + (v+2me)f).
inline AbTilde ab_tilde(const Surface& S, std::int64_t u, std::int64_t v, std::int64_t m) {
  using namespace checked;
  if (m < 0) throw DomainError("m must be >= 0, got " + std::to_string(m));
  const std::int64_t e = S.e();
  const Divisor lower{sub(add(u, mul(2, m)), 2), sub(add(v, mul(mul(2, m), e)), e)};
  return {h0(S, lower), h0(S, lower + m_class(S))};
}

/// c2 = s - e(u+m-1) + (1-m)(v+em)
inline std::int64_t c2_points_quotient(const Surface& S, std::int64_t u, std::int64_t v, std::int64_t m,
                                       std::int64_t s) {
  using namespace checked;
  const std::int64_t e = S.e();
  return add(sub(s, mul(e, sub(add(u, m), 1))), mul(sub(1, m), add(v, mul(e, m))));
}

/// Sufficient condition for nonexistence of a rank r bundle with property £
/// w.r.t. M and c1 = (u,v): v <= e(u - r + 1) - 2. False means "not decided".
inline bool rank_r_nonexistent(const Surface& S, std::int64_t r, std::int64_t u, std::int64_t v) {
  using namespace checked;
  if (r <= 0) throw DomainError("rank must be >= 1, got " + std::to_string(r));
  return v <= sub(mul(S.e(), add(sub(u, r), 1)), 2);
}

/// Hypothesis on c1 under which the construction applies: v >= e(u-1) - 1.
inline bool construction_applies(const Surface& S, std::int64_t u, std::int64_t v) {
  using namespace checked;
  return v >= sub(mul(S.e(), sub(u, 1)), 1);
}

struct ExtensionDatum {
  Surface surface;
  std::int64_t u, v, m, s;
  Divisor sub;
  IdealSheafModel quotient;
  AbTilde range;
  std::int64_t c2;
  /// h0 of the a~ class <= s: no sections of E((m-1)M).
  bool section_min;
  /// h0((u+2m-5)h + (v+2em-2e-2)f) <= s - 1 (vacuous when s = 0). Assumes the
  /// points avoid h and no component is tangent to a fiber.
  bool cayley_bacharach;
  /// s = 0 and h1(sub - quotient) = 0: every extension splits.
  bool ext_forced_split;

  Divisor c1() const { return sub + quotient.twist_class; }
};

enum class ConstructionFailure { HypothesisV, HypothesisM, SOutOfRange };

inline std::string_view to_string(ConstructionFailure f) {
  switch (f) {
    case ConstructionFailure::HypothesisV: return "hypothesis_v";
    case ConstructionFailure::HypothesisM: return "hypothesis_m";
    case ConstructionFailure::SOutOfRange: return "s_out_of_range";
  }
  return "?";
}

class ConstructionError : public DomainError {
 public:
  ConstructionError(ConstructionFailure reason, const std::string& detail)
      : DomainError(std::string(to_string(reason)) + ": " + detail), reason_(reason) {}
  ConstructionFailure reason() const noexcept { return reason_; }

 private:
  ConstructionFailure reason_;
};

/// Builds the datum of the construction for c1 = (u,v), twist m and s general
/// points, with its certificates evaluated.
inline ExtensionDatum construct_extension(const Surface& S, std::int64_t u, std::int64_t v, std::int64_t m,
                                          std::int64_t s) {
  using namespace checked;
  const std::int64_t e = S.e();
  if (!construction_applies(S, u, v))
    throw ConstructionError(ConstructionFailure::HypothesisV,
                            "need v >= e(u-1)-1 = " + std::to_string(sub(mul(e, sub(u, 1)), 1)));
  if (m < 0) throw ConstructionError(ConstructionFailure::HypothesisM, "need m >= 0");
  const AbTilde range = ab_tilde(S, u, v, m);
  if (s < range.a_tilde || s > range.b_tilde)
    throw ConstructionError(ConstructionFailure::SOutOfRange, "need " + std::to_string(range.a_tilde) +
                                                                  " <= s <= " + std::to_string(range.b_tilde));

  const Divisor sub_class{sub(1, m), neg(mul(e, m))};
  const Divisor quot_class{sub(add(u, m), 1), add(v, mul(e, m))};
  const Divisor two_m{sub(add(u, mul(2, m)), 2), sub(add(v, mul(mul(2, m), e)), e)};
  const Divisor cb_class{sub(add(u, mul(2, m)), 5), sub(sub(add(v, mul(mul(2, m), e)), mul(2, e)), 2)};

  return ExtensionDatum{
      .surface = S,
      .u = u,
      .v = v,
      .m = m,
      .s = s,
      .sub = sub_class,
      .quotient = {{s, Locus::GeneralPosition}, quot_class},
      .range = range,
      .c2 = c2_points_quotient(S, u, v, m, s),
      .section_min = h0(S, two_m) <= s,
      .cayley_bacharach = s == 0 || h0(S, cb_class) <= s - 1,
      .ext_forced_split = s == 0 && h1(S, sub_class - quot_class) == 0,
  };
}

// ---------------------------------------------------------------------------
// Cohomology of E(tM) from the long exact sequence

struct CohomologyInterval {
  std::int64_t h0_min, h0_max;
  std::int64_t h1_min, h1_max;
  std::int64_t h2_min, h2_max;
  std::int64_t chi;
  /// Point estimate assuming both connecting maps have maximal rank.
  CohomologyTriple expected;

  bool contains(const CohomologyTriple& x) const {
    return h0_min <= x.h0 && x.h0 <= h0_max && h1_min <= x.h1 && x.h1 <= h1_max && h2_min <= x.h2 &&
           x.h2 <= h2_max;
  }
};

struct ExtensionEnds {
  CohomologyTriple sub;
  CohomologyTriple quotient;
};

inline ExtensionEnds extension_ends(const ExtensionDatum& d, std::int64_t t) {
  const Surface& S = d.surface;
  const Divisor M = m_class(S);
  return {cohomology(S, twist(d.sub, t, M)), cohomology_ideal(S, twist(d.quotient, t, M))};
}

/// With A the sub and Q the quotient twisted by tM, the sequence
///   0 -> H0(A) -> H0(E) -> H0(Q) -d0-> H1(A) -> H1(E) -> H1(Q) -d1-> H2(A) -> H2(E) -> H2(Q) -> 0
/// bounds h^i(E) by the possible ranks of d0 and d1.
inline CohomologyInterval les_interval(const ExtensionDatum& d, std::int64_t t) {
  using namespace checked;
  const auto [A, Q] = extension_ends(d, t);
  const std::int64_t chi_e = add(A.euler(), Q.euler());
  const CohomologyTriple split{add(A.h0, Q.h0), add(A.h1, Q.h1), add(A.h2, Q.h2)};
  if (d.ext_forced_split) {
    return {split.h0, split.h0, split.h1, split.h1, split.h2, split.h2, chi_e, split};
  }
  const std::int64_t r0 = std::min(Q.h0, A.h1);
  const std::int64_t r1 = std::min(Q.h1, A.h2);
  const CohomologyTriple low{sub(split.h0, r0), sub(sub(split.h1, r0), r1), sub(split.h2, r1)};
  return {low.h0, split.h0, low.h1, split.h1, low.h2, split.h2, chi_e, low};
}

struct IntervalRow {
  std::int64_t t;
  CohomologyInterval interval;
  Outcome outcome;
};

struct ExtensionAudit {
  Verdict verdict;
  std::vector<IntervalRow> rows;
  std::int64_t t_from = 0;
  std::int64_t t_to = 0;
};

namespace detail {

inline Outcome interval_outcome(const CohomologyInterval& x) {
  if (x.h0_min > 0 && x.h1_min > 0) return Outcome::Fails;
  if (x.h1_max == 0 || x.h0_max == 0) return Outcome::Holds;
  return Outcome::Indeterminate;
}

/// First twist beyond which the per-twist verdict of audit_extension_pounds
/// cannot change: both ends have nonnegative h-coefficient, h1 of the sub side
/// has reached its limiting value, and the quotient has at least s sections
/// and at least as many as h1 of the sub side.
inline std::int64_t extension_stable_twist(const ExtensionDatum& d) {
  using namespace checked;
  const Surface& S = d.surface;
  const std::int64_t e = S.e();
  const Divisor M = m_class(S);
  const Divisor Q = d.quotient.twist_class;
  // Under M the quantity b - e a is invariant; h1 of a class with a >= 0 equals
  // sum_{j>=0} max(0, -(b-ea) - 1 - j e), constant once a e >= -(b-ea) - 1.
  const std::int64_t sub_slack = sub(d.sub.b, mul(e, d.sub.a));
  const std::int64_t sub_a_needed = ceil_div(std::max<std::int64_t>(0, sub(neg(sub_slack), 1)), e);
  std::int64_t t = std::max({d.m, neg(Q.a), sub(sub_a_needed, d.sub.a)});
  for (std::int64_t guard = 0;; ++t, ++guard) {
    if (guard > 10'000'000) throw std::runtime_error("extension audit: no stabilization found");
    const std::int64_t q0 = h0(S, twist(Q, t, M));
    if (q0 >= d.s && sub(q0, d.s) >= h1(S, twist(d.sub, t, M))) return t;
  }
}

}  // namespace detail

/// £ audit w.r.t. M for any sheaf in the extension family. Per twist: Fails
/// when h0 and h1 are both forced positive, Holds when either is forced zero,
/// Indeterminate otherwise. Below the scanned window both ends have no
/// sections; above it the per-twist verdict is constant.
inline ExtensionAudit audit_extension_pounds(const ExtensionDatum& d, std::int64_t extra_window = 1) {
  if (extra_window < 0) throw std::invalid_argument("extra_window must be >= 0");
  const Surface& S = d.surface;
  const Divisor M = m_class(S);
  ExtensionAudit audit;
  audit.t_from = std::min({checked::sub(d.m, 1), detail::first_effective_twist(d.sub, M),
                           detail::first_effective_twist(d.quotient.twist_class, M)});
  audit.t_to = checked::add(detail::extension_stable_twist(d), extra_window);
  bool any_indet = false;
  audit.verdict.outcome = Outcome::Holds;
  for (std::int64_t t = audit.t_from; t <= audit.t_to; ++t) {
    const CohomologyInterval x = les_interval(d, t);
    const Outcome o = detail::interval_outcome(x);
    audit.rows.push_back({t, x, o});
    if (o == Outcome::Fails && !audit.verdict.fails()) audit.verdict = {Outcome::Fails, t, x.h0_min, x.h1_min};
    if (o == Outcome::Indeterminate) any_indet = true;
  }
  if (!audit.verdict.fails() && any_indet) {
    audit.verdict.outcome = Outcome::Indeterminate;
    for (const auto& row : audit.rows)
      if (row.outcome == Outcome::Indeterminate) {
        audit.verdict.witness_t = row.t;
        audit.verdict.witness_h0 = row.interval.h0_min;
        audit.verdict.witness_h1 = row.interval.h1_min;
        break;
      }
  }
  return audit;
}

// ---------------------------------------------------------------------------
// Slope stability

enum class Polarization { R, M };

inline std::string_view to_string(Polarization p) { return p == Polarization::R ? "R" : "M"; }

inline Polarization parse_polarization(std::string_view s) {
  if (s == "R") return Polarization::R;
  if (s == "M") return Polarization::M;
  throw std::invalid_argument("polarization must be R or M, got '" + std::string(s) + "'");
}

struct DestabilizerCandidate {
  Divisor n;
  bool maps_to_sub = false;      // sub - N effective
  bool delta_effective = false;  // (u-1-gamma, v-delta) effective
  std::int64_t h0_delta = 0;
  bool excluded = false;
  std::string reason;
  /// The row stands for every gamma at or below n.a with the same delta.
  bool represents_tail = false;

  friend bool operator==(const DestabilizerCandidate&, const DestabilizerCandidate&) = default;
};

struct StabilityReport {
  Polarization polarization = Polarization::R;
  bool certified = false;
  std::vector<DestabilizerCandidate> candidates;
  std::vector<std::string> warnings;
};

namespace detail {

inline DestabilizerCandidate judge_candidate(const Surface& S, const ExtensionDatum& d, Divisor n, bool tail) {
  DestabilizerCandidate c;
  c.n = n;
  c.represents_tail = tail;
  c.maps_to_sub = is_effective(S, d.sub - n);
  const Divisor delta = d.quotient.twist_class - n;
  c.delta_effective = is_effective(S, delta);
  c.h0_delta = c.delta_effective ? h0(S, delta) : 0;
  if (c.maps_to_sub) {
    c.reason = "N maps into the sub line bundle";
  } else if (!c.delta_effective) {
    c.excluded = true;
    c.reason = "no map to sub; Delta not effective";
  } else if (c.h0_delta <= d.s) {
    // A section of I_S(Delta) for s general points needs h0(Delta) >= s + 1.
    c.excluded = true;
    c.reason = "no map to sub; h0(Delta)=" + std::to_string(c.h0_delta) + " <= s=" + std::to_string(d.s);
  } else {
    c.reason = "h0(Delta)=" + std::to_string(c.h0_delta) + " > s=" + std::to_string(d.s);
  }
  return c;
}

}  // namespace detail

/// Enumerates every N = (gamma, delta) with N.H >= c1.H / 2 that could map
/// nonzero into E (into the sub, or into the quotient through an effective
/// Delta = c1 - h - N) and tries to exclude each. For H = R the slope
/// condition reads 2(gamma+delta) >= u+v; for H = M it reads 2 delta >= v.
inline StabilityReport stability_certificate(const ExtensionDatum& d, Polarization polarization) {
  using namespace checked;
  const Surface& S = d.surface;
  const std::int64_t e = S.e();
  if (d.m != 0) throw DomainError("stability certificate needs m = 0, got m = " + std::to_string(d.m));
  const std::int64_t u = d.u, v = d.v;

  StabilityReport report;
  report.polarization = polarization;
  const std::int64_t two_eu = mul(mul(2, e), u);
  if (u < 3) report.warnings.push_back("u < 3: outside the stability hypotheses");
  if (v >= two_eu) report.warnings.push_back("v >= 2eu: outside the stability hypotheses");
  if (polarization == Polarization::M && v > sub(two_eu, 3))
    report.warnings.push_back("v > 2eu-3: outside the M-slope hypotheses");

  // Maps to the sub O(h) need gamma <= 1, delta <= 0; maps to the quotient
  // need gamma <= u-1, delta <= v.
  const std::int64_t gamma_hi = std::max<std::int64_t>(1, sub(u, 1));
  const std::int64_t delta_hi = std::max<std::int64_t>(0, v);
  const auto could_map = [&](Divisor n) {
    return is_effective(S, d.sub - n) || is_effective(S, d.quotient.twist_class - n);
  };

  if (polarization == Polarization::R) {
    const std::int64_t uv = add(u, v);
    const std::int64_t delta_lo = ceil_div(sub(uv, mul(2, gamma_hi)), 2);
    const std::int64_t gamma_lo = ceil_div(sub(uv, mul(2, delta_hi)), 2);
    for (std::int64_t g = gamma_lo; g <= gamma_hi; ++g)
      for (std::int64_t dl = delta_lo; dl <= delta_hi; ++dl) {
        const Divisor n{g, dl};
        if (mul(2, add(g, dl)) < uv || !could_map(n)) continue;
        report.candidates.push_back(detail::judge_candidate(S, d, n, false));
      }
  } else {
    // gamma is unbounded below; per delta, everything below gamma_tail behaves
    // like gamma_tail (sub-effectivity is constant for gamma <= 1, and
    // h0(Delta) stops growing once u-1-gamma >= floor((v-delta)/e)).
    for (std::int64_t dl = ceil_div(v, 2); dl <= delta_hi; ++dl) {
      const std::int64_t room = std::max<std::int64_t>(0, sub(v, dl));
      const std::int64_t gamma_tail = std::min({std::int64_t{1}, sub(u, 1), sub(sub(u, 1), room / e)});
      for (std::int64_t g = gamma_tail; g <= gamma_hi; ++g) {
        const Divisor n{g, dl};
        if (!could_map(n)) continue;
        report.candidates.push_back(detail::judge_candidate(S, d, n, g == gamma_tail));
      }
    }
  }
  report.certified = std::all_of(report.candidates.begin(), report.candidates.end(),
                                 [](const DestabilizerCandidate& c) { return c.excluded; });
  return report;
}

// ---------------------------------------------------------------------------
// Existence region

enum class RegionLabel { Nonexistent, Existent, Unknown };

inline std::string_view to_string(RegionLabel l) {
  switch (l) {
    case RegionLabel::Nonexistent: return "NONEXISTENT";
    case RegionLabel::Existent: return "EXISTENT";
    case RegionLabel::Unknown: return "UNKNOWN";
  }
  return "?";
}

struct IntRange {
  std::int64_t from;
  std::int64_t to;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct RegionCell {
  std::int64_t u;
  std::int64_t v;
  RegionLabel label;
  /// Realized c2 values (merged, ascending) for existent cells.
  std::vector<IntRange> c2_witness;
};

/// Sorts and merges integer intervals, joining ones that touch ([1,3],[4,8] -> [1,8]).
inline std::vector<IntRange> merge_ranges(std::vector<IntRange> ranges) {
  std::sort(ranges.begin(), ranges.end(), [](IntRange x, IntRange y) { return x.from < y.from; });
  std::vector<IntRange> out;
  for (IntRange r : ranges) {
    if (!out.empty() && r.from <= checked::add(out.back().to, 1)) out.back().to = std::max(out.back().to, r.to);
    else out.push_back(r);
  }
  return out;
}

/// c2 values realized by the construction for m = 0..m_max.
inline std::vector<IntRange> c2_witness(const Surface& S, std::int64_t u, std::int64_t v, std::int64_t m_max) {
  std::vector<IntRange> ranges;
  for (std::int64_t m = 0; m <= m_max; ++m) {
    const AbTilde r = ab_tilde(S, u, v, m);
    ranges.push_back({c2_points_quotient(S, u, v, m, r.a_tilde), c2_points_quotient(S, u, v, m, r.b_tilde)});
  }
  return merge_ranges(std::move(ranges));
}

inline RegionCell classify_cell(const Surface& S, std::int64_t r, std::int64_t u, std::int64_t v,
                                std::int64_t m_max) {
  if (rank_r_nonexistent(S, r, u, v)) return {u, v, RegionLabel::Nonexistent, {}};
  if (r == 1 && natural_line_m(S, {u, v})) return {u, v, RegionLabel::Existent, {{0, 0}}};
  if (r == 2 && construction_applies(S, u, v)) return {u, v, RegionLabel::Existent, c2_witness(S, u, v, m_max)};
  return {u, v, RegionLabel::Unknown, {}};
}

/// Labels every (u,v) in the box for rank r in {1, 2}; rows ordered by (u,v).
inline std::vector<RegionCell> classify_region(const Surface& S, std::int64_t r, IntRange u_range, IntRange v_range,
                                               std::int64_t m_max) {
  if (r != 1 && r != 2) throw DomainError("classify supports rank 1 or 2, got " + std::to_string(r));
  if (u_range.from > u_range.to || v_range.from > v_range.to) throw std::invalid_argument("empty u or v range");
  if (m_max < 0) throw DomainError("m_max must be >= 0");
  std::vector<RegionCell> cells;
  for (std::int64_t u = u_range.from; u <= u_range.to; ++u)
    for (std::int64_t v = v_range.from; v <= v_range.to; ++v) cells.push_back(classify_cell(S, r, u, v, m_max));
  return cells;
}

}  // namespace hirzebruch
