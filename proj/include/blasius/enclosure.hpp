#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "blasius/rational.hpp"

namespace blasius {

// Closed interval [lo, hi] guaranteed to contain the exact real value of the
// computation that produced it. Directed rounding is emulated: every
// operation evaluates in double and then widens each endpoint one ulp
// outward, which dominates the half-ulp error of correctly rounded IEEE
// arithmetic. Library transcendentals (exp) are evaluated in long double and
// widened further, see exp().
struct Enclosure {
  double lo;
  double hi;

  Enclosure() : lo(0.0), hi(0.0) {}
  Enclosure(double point) : lo(point), hi(point) { check(); }
  Enclosure(double l, double h) : lo(l), hi(h) { check(); }

  static Enclosure from_rational(const Rational& r);
  static Enclosure hull(const Enclosure& a, const Enclosure& b) {
    return Enclosure(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
  }

  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Enclosure& o) const { return lo <= o.lo && o.hi <= hi; }
  bool contains(const Rational& r) const;
  bool strictly_positive() const { return lo > 0.0; }
  bool strictly_negative() const { return hi < 0.0; }
  bool intersects(const Enclosure& o) const { return lo <= o.hi && o.lo <= hi; }

  Enclosure operator-() const { return Enclosure(-hi, -lo); }
  Enclosure abs() const;
  Enclosure inv() const;
  Enclosure sqrt() const;
  Enclosure exp() const;
  Enclosure pow_int(int e) const;

  std::string to_string() const;

private:
  void check() const {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi)
      throw std::domain_error("Enclosure: invalid endpoints");
  }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator/(const Enclosure& a, const Enclosure& b);

inline Enclosure operator+(const Enclosure& a, double b) { return a + Enclosure(b); }
inline Enclosure operator-(const Enclosure& a, double b) { return a - Enclosure(b); }
inline Enclosure operator*(const Enclosure& a, double b) { return a * Enclosure(b); }
inline Enclosure operator/(const Enclosure& a, double b) { return a / Enclosure(b); }
inline Enclosure operator+(double a, const Enclosure& b) { return Enclosure(a) + b; }
inline Enclosure operator-(double a, const Enclosure& b) { return Enclosure(a) - b; }
inline Enclosure operator*(double a, const Enclosure& b) { return Enclosure(a) * b; }
inline Enclosure operator/(double a, const Enclosure& b) { return Enclosure(a) / b; }

inline Enclosure emin(const Enclosure& a, const Enclosure& b) {
  return Enclosure(std::min(a.lo, b.lo), std::min(a.hi, b.hi));
}
inline Enclosure emax(const Enclosure& a, const Enclosure& b) {
  return Enclosure(std::max(a.lo, b.lo), std::max(a.hi, b.hi));
}

}  // namespace blasius
