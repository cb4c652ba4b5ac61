#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "checked.hpp"

namespace hirzebruch {

/// Raised for inputs outside the admitted parameter space (e <= 0, a
/// non-spanned twisting class, ...). The CLI maps it to exit code 3.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The Hirzebruch surface F_e, e >= 1. The negative section h has h^2 = -e.
class Surface {
 public:
  std::int64_t e() const noexcept { return e_; }
  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  explicit Surface(std::int64_t e) : e_(e) {}
  friend Surface make_surface(std::int64_t e);
  std::int64_t e_;
};

inline Surface make_surface(std::int64_t e) {
  if (e <= 0) throw DomainError("Hirzebruch parameter e must be >= 1, got " + std::to_string(e));
  return Surface(e);
}

/// A class a*h + b*f in Pic(F_e) = Z^2.
struct Divisor {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const Divisor&, const Divisor&) = default;

  friend Divisor operator+(Divisor x, Divisor y) { return {checked::add(x.a, y.a), checked::add(x.b, y.b)}; }
  friend Divisor operator-(Divisor x, Divisor y) { return {checked::sub(x.a, y.a), checked::sub(x.b, y.b)}; }
  friend Divisor operator*(std::int64_t t, Divisor x) { return {checked::mul(t, x.a), checked::mul(t, x.b)}; }
  Divisor operator-() const { return {checked::neg(a), checked::neg(b)}; }

  friend std::ostream& operator<<(std::ostream& os, const Divisor& d) { return os << '(' << d.a << ',' << d.b << ')'; }
};

inline std::string to_string(const Divisor& d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

inline constexpr Divisor kSectionClass{1, 0};
inline constexpr Divisor kFiberClass{0, 1};

struct PositivityReport {
  bool effective = false;
  bool spanned = false;
  bool ample = false;
};

/// h^2 = -e, h.f = 1, f^2 = 0.
inline std::int64_t intersect(const Surface& S, Divisor x, Divisor y) {
  using namespace checked;
  return add(mul(neg(S.e()), mul(x.a, y.a)), add(mul(x.a, y.b), mul(y.a, x.b)));
}

inline Divisor canonical_class(const Surface& S) { return {-2, checked::neg(checked::add(S.e(), 2))}; }

inline bool is_effective(const Surface&, Divisor c) { return c.a >= 0 && c.b >= 0; }
inline bool is_spanned(const Surface& S, Divisor c) { return c.a >= 0 && c.b >= checked::mul(c.a, S.e()); }
inline bool is_ample(const Surface& S, Divisor c) { return c.a > 0 && c.b > checked::mul(c.a, S.e()); }

inline PositivityReport positivity(const Surface& S, Divisor c) {
  return {is_effective(S, c), is_spanned(S, c), is_ample(S, c)};
}

/// M = h + e f: spanned, not ample.
inline Divisor m_class(const Surface& S) { return {1, S.e()}; }
/// R = h + (e+1) f: ample.
inline Divisor r_class(const Surface& S) { return {1, checked::add(S.e(), 1)}; }

/// c + t * by
inline Divisor twist(Divisor c, std::int64_t t, Divisor by) { return c + t * by; }

}  // namespace hirzebruch
