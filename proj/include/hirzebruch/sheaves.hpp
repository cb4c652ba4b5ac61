#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "checked.hpp"
#include "cohomology.hpp"
#include "picard.hpp"

namespace hirzebruch {

/// Where the points of Z sit. Points are reduced and general subject to the
/// locus; tangency conditions are not modeled.
enum class Locus { GeneralPosition, OnSectionH, OnFiber };

/// The two curves a point configuration can be constrained to.
enum class Curve { SectionH, Fiber };

inline std::string_view to_string(Locus l) {
  switch (l) {
    case Locus::GeneralPosition: return "general";
    case Locus::OnSectionH: return "section";
    case Locus::OnFiber: return "fiber";
  }
  return "?";
}

inline Locus parse_locus(std::string_view s) {
  if (s == "general" || s == "G") return Locus::GeneralPosition;
  if (s == "section" || s == "h" || s == "H") return Locus::OnSectionH;
  if (s == "fiber" || s == "f" || s == "F") return Locus::OnFiber;
  throw std::invalid_argument("unknown point locus '" + std::string(s) + "'");
}

struct PointConfig {
  std::int64_t z = 0;
  Locus locus = Locus::GeneralPosition;

  friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

/// I_Z(twist_class) for a configuration Z of z points.
struct IdealSheafModel {
  PointConfig config;
  Divisor twist_class;

  friend bool operator==(const IdealSheafModel&, const IdealSheafModel&) = default;
};

inline IdealSheafModel make_ideal(Locus locus, std::int64_t z, Divisor c) {
  if (z < 0) throw DomainError("point count must be >= 0, got " + std::to_string(z));
  return {{z, locus}, c};
}

inline Divisor curve_class(Curve curve) { return curve == Curve::SectionH ? kSectionClass : kFiberClass; }

/// Degree of c restricted to h (b - e a) or to a fiber (a).
inline std::int64_t restriction_degree(const Surface& S, Divisor c, Curve curve) {
  return intersect(S, c, curve_class(curve));
}

namespace detail {

inline std::int64_t pos(std::int64_t x) { return x > 0 ? x : 0; }

}  // namespace detail

/// Sections of I_Z(c). For points on a curve C, sections vanishing on C are
/// unconstrained and the r = h0(c) - h0(c - C) sections that survive on C lose
/// one dimension per point until they are used up.
inline std::int64_t h0_ideal(const Surface& S, const IdealSheafModel& m) {
  const Divisor c = m.twist_class;
  const std::int64_t z = m.config.z;
  if (m.config.locus == Locus::GeneralPosition) return detail::pos(checked::sub(h0(S, c), z));
  const Divisor C = curve_class(m.config.locus == Locus::OnSectionH ? Curve::SectionH : Curve::Fiber);
  const std::int64_t below = h0(S, c - C);
  const std::int64_t restricted = checked::sub(h0(S, c), below);
  return checked::add(below, detail::pos(checked::sub(restricted, z)));
}

/// Points do not change h^2.
inline std::int64_t h2_ideal(const Surface& S, const IdealSheafModel& m) { return h2(S, m.twist_class); }

inline std::int64_t chi_ideal(const Surface& S, const IdealSheafModel& m) {
  return checked::sub(chi(S, m.twist_class), m.config.z);
}

inline std::int64_t h1_ideal(const Surface& S, const IdealSheafModel& m) {
  const std::int64_t v = checked::sub(checked::add(h0_ideal(S, m), h2_ideal(S, m)), chi_ideal(S, m));
  if (v < 0) throw std::logic_error("h1 of ideal sheaf model negative for class " + to_string(m.twist_class));
  return v;
}

inline CohomologyTriple cohomology_ideal(const Surface& S, const IdealSheafModel& m) {
  return {h0_ideal(S, m), h1_ideal(S, m), h2_ideal(S, m)};
}

inline IdealSheafModel twist(const IdealSheafModel& m, std::int64_t t, Divisor by) {
  return {m.config, twist(m.twist_class, t, by)};
}

}  // namespace hirzebruch
