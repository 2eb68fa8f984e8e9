#pragma once

#include <optional>
#include <vector>

#include "blasius/enclosure.hpp"
#include "blasius/rational.hpp"

namespace blasius {

// Dense univariate polynomial with exact rational coefficients, lowest degree
// first, trailing zeros trimmed. All arithmetic is exact.
class RationalPoly {
public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RationalPoly constant(const Rational& v) { return RationalPoly({v}); }
  static RationalPoly monomial(unsigned deg, const Rational& v);

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational eval(const Rational& x) const;
  Enclosure eval(const Enclosure& x) const;

  RationalPoly derivative() const;
  // antiderivative with zero constant term
  RationalPoly antiderivative() const;
  Rational definite_integral(const Rational& lo, const Rational& hi) const;

  // p(shift + scale * tau), exact; scale must be nonzero
  RationalPoly compose_affine(const Rational& scale, const Rational& shift) const;

  RationalPoly scaled(const Rational& s) const;
  Rational l1_norm() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  RationalPoly operator-() const;

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

private:
  void trim();
  std::vector<Rational> c_;
};

// Exact Chebyshev coefficients A_j of p on [lo, hi]: p(x) = sum A_j T_j(y),
// y the affine image of x in [-1, 1]. Conversion is the exact basis-change
// recurrence over rationals, no sampling.
std::vector<Rational> to_chebyshev(const RationalPoly& p, const Rational& lo, const Rational& hi);
RationalPoly from_chebyshev(const std::vector<Rational>& cheb, const Rational& lo, const Rational& hi);

// Certified range bracket of p over [cell_lo, cell_hi]: exact critical-point
// analysis of the cubic head of the local rescaled expansion, plus the l1
// tail of the remaining coefficients. Guarantees m.lo <= p(x) <= M.hi on the
// cell.
struct RangeBracket {
  Enclosure min_bound;   // encloses (head min - tail)
  Enclosure max_bound;   // encloses (head max + tail)
  Rational tail_l1;      // sum_{k>=4} |a_k| of the local expansion
};
RangeBracket range_bound_cubic_tail(const RationalPoly& p, const Rational& cell_lo,
                                    const Rational& cell_hi);

// Sign-change isolation by recursive bisection with certified range bounds.
// Each returned enclosure contains exactly one sign change; outside them the
// sign of p on [lo, hi] is certified. Cells that stay ambiguous at width tol
// without a sign flip (degenerate multiple roots) are reported separately.
struct SignIsolation {
  std::vector<Enclosure> changes;
  std::vector<Enclosure> unresolved;
};
SignIsolation isolate_sign_changes(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                   const Rational& tol);

// +1 / -1 if the sign of p on [lo, hi] is certified, std::nullopt otherwise.
std::optional<int> certified_sign(const RationalPoly& p, const Rational& lo, const Rational& hi);

}  // namespace blasius
