#include "blasius/enclosure.hpp"

#include <algorithm>
#include <cfloat>
#include <sstream>

namespace blasius {

namespace {

inline double down(double x) { return std::nextafter(x, -HUGE_VAL); }
inline double up(double x) { return std::nextafter(x, HUGE_VAL); }

// one-ulp outward widening is skipped when the double operation is exact;
// this keeps invariants like [0,w] + [0,w] >= 0 intact. The fma residual
// test is only conclusive away from the subnormal range, where the residual
// itself is representable.
inline bool sum_exact(double a, double b, double s) { return s - a == b && s - b == a; }
inline bool prod_exact(double a, double b, double p) {
  if (p != 0.0 && std::fabs(p) < 1e-290) return false;
  return std::fma(a, b, -p) == 0.0;
}
inline bool quot_exact(double a, double b, double q) {
  if (a != 0.0 && std::fabs(a) < 1e-290) return false;
  return std::fma(q, b, -a) == 0.0;
}

inline double down_n(double x, int n) {
  for (int i = 0; i < n; ++i) x = down(x);
  return x;
}
inline double up_n(double x, int n) {
  for (int i = 0; i < n; ++i) x = up(x);
  return x;
}

}  // namespace

Enclosure Enclosure::from_rational(const Rational& r) {
  double d = r.to_double();
  if (!std::isfinite(d)) throw std::domain_error("Enclosure::from_rational: overflow");
  double lo = d, hi = d;
  // mpq_get_d truncates toward zero, so at most one ulp of slack is needed;
  // verify with exact comparisons and nudge until certain.
  while (Rational::from_double(lo) > r) lo = down(lo);
  while (Rational::from_double(hi) < r) hi = up(hi);
  return Enclosure(lo, hi);
}

bool Enclosure::contains(const Rational& r) const {
  return Rational::from_double(lo) <= r && r <= Rational::from_double(hi);
}

Enclosure Enclosure::abs() const {
  if (lo >= 0.0) return *this;
  if (hi <= 0.0) return -*this;
  return Enclosure(0.0, std::max(-lo, hi));
}

Enclosure Enclosure::inv() const { return Enclosure(1.0) / *this; }

Enclosure Enclosure::sqrt() const {
  if (lo < 0.0) throw std::domain_error("Enclosure::sqrt: negative argument");
  return Enclosure(down(std::sqrt(lo)), up(std::sqrt(hi)));
}

Enclosure Enclosure::exp() const {
  // expl carries ~64-bit mantissa accuracy; two double ulps outward absorbs
  // both its error and the narrowing conversion.
  double l = static_cast<double>(expl(static_cast<long double>(lo)));
  double h = static_cast<double>(expl(static_cast<long double>(hi)));
  return Enclosure(std::max(0.0, down_n(l, 2)), up_n(h, 2));
}

Enclosure Enclosure::pow_int(int e) const {
  if (e == 0) return Enclosure(1.0);
  if (e < 0) return pow_int(-e).inv();
  Enclosure base = *this;
  // even powers are nonnegative and tighten at zero for straddling intervals
  if (e % 2 == 0 && lo < 0.0) base = abs();
  Enclosure acc(1.0);
  int n = e;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  if (e % 2 == 0 && acc.lo < 0.0) acc.lo = 0.0;
  return acc;
}

std::string Enclosure::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "[" << lo << ", " << hi << "]";
  return os.str();
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  double lo = a.lo + b.lo, hi = a.hi + b.hi;
  if (!sum_exact(a.lo, b.lo, lo)) lo = down(lo);
  if (!sum_exact(a.hi, b.hi, hi)) hi = up(hi);
  return Enclosure(lo, hi);
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  double lo = a.lo - b.hi, hi = a.hi - b.lo;
  if (!sum_exact(lo, b.hi, a.lo)) lo = down(lo);
  if (!sum_exact(hi, b.lo, a.hi)) hi = up(hi);
  return Enclosure(lo, hi);
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  bool exact = prod_exact(a.lo, b.lo, p1) && prod_exact(a.lo, b.hi, p2) &&
               prod_exact(a.hi, b.lo, p3) && prod_exact(a.hi, b.hi, p4);
  if (!exact) {
    lo = down(lo);
    hi = up(hi);
  }
  return Enclosure(lo, hi);
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.lo <= 0.0 && b.hi >= 0.0)
    throw std::domain_error("Enclosure: division by interval containing zero");
  double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
  double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  bool exact = quot_exact(a.lo, b.lo, p1) && quot_exact(a.lo, b.hi, p2) &&
               quot_exact(a.hi, b.lo, p3) && quot_exact(a.hi, b.hi, p4);
  if (!exact) {
    lo = down(lo);
    hi = up(hi);
  }
  return Enclosure(lo, hi);
}

}  // namespace blasius
