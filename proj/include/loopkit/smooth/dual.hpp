#pragma once

#include <cmath>
#include <ostream>

namespace loopkit::smooth {

/// a + b·δ with δ² = 0. Carries one directional derivative through
/// arithmetic.
struct Dual {
  double v = 0.0; // value
  double d = 0.0; // coefficient of δ

  constexpr Dual() = default;
  constexpr Dual(double value, double deriv = 0.0) : v(value), d(deriv) {}

  Dual &operator+=(const Dual &o) { return *this = *this + o; }
  Dual &operator-=(const Dual &o) { return *this = *this - o; }
  Dual &operator*=(const Dual &o) { return *this = *this * o; }
  Dual &operator/=(const Dual &o) { return *this = *this / o; }

  friend constexpr Dual operator+(const Dual &a, const Dual &b) { return {a.v + b.v, a.d + b.d}; }
  friend constexpr Dual operator-(const Dual &a, const Dual &b) { return {a.v - b.v, a.d - b.d}; }
  friend constexpr Dual operator-(const Dual &a) { return {-a.v, -a.d}; }
  friend constexpr Dual operator*(const Dual &a, const Dual &b) {
    return {a.v * b.v, a.v * b.d + a.d * b.v};
  }
  friend constexpr Dual operator/(const Dual &a, const Dual &b) {
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
  }
  friend constexpr bool operator==(const Dual &, const Dual &) = default;

  friend std::ostream &operator<<(std::ostream &out, const Dual &a) {
    return out << a.v << (a.d < 0 ? " - " : " + ") << std::abs(a.d) << "δ";
  }
};

inline Dual sqrt(const Dual &a) {
  const double s = std::sqrt(a.v);
  return {s, a.d / (2.0 * s)};
}

inline double sqrt(double a) { return std::sqrt(a); }
inline double value(double a) { return a; }
inline double value(const Dual &a) { return a.v; }

} // namespace loopkit::smooth
