#pragma once

#include <vector>

#include "blasius/rational_poly.hpp"

namespace blasius {

// Dense bivariate polynomial sum c[i][j] x^i a^j with exact rational
// coefficients; carrier for the alpha-parameterized inner quasi-solution and
// its residual. Partial evaluation at rational alpha is exact.
class BiRationalPoly {
public:
  BiRationalPoly() = default;
  explicit BiRationalPoly(std::vector<std::vector<Rational>> coeffs)
      : c_(std::move(coeffs)) {
    trim();
  }
  static BiRationalPoly from_x_poly(const RationalPoly& p);
  static BiRationalPoly constant(const Rational& v);

  bool is_zero() const { return c_.empty(); }
  int degree_x() const { return static_cast<int>(c_.size()) - 1; }
  int degree_alpha() const;
  Rational coeff(size_t i, size_t j) const;
  const std::vector<std::vector<Rational>>& coeffs() const { return c_; }

  Rational eval(const Rational& x, const Rational& alpha) const;
  Enclosure eval(const Enclosure& x, const Enclosure& alpha) const;
  RationalPoly eval_alpha(const Rational& alpha) const;   // polynomial in x
  RationalPoly eval_x(const Rational& x) const;           // polynomial in alpha

  BiRationalPoly derivative_x() const;
  BiRationalPoly antiderivative_x() const;
  // exact polynomial in alpha: integral over x in [xlo, xhi]
  RationalPoly definite_integral_x(const Rational& xlo, const Rational& xhi) const;

  // substitute x -> shift + scale * u (exact)
  BiRationalPoly compose_affine_x(const Rational& scale, const Rational& shift) const;
  // substitute alpha -> shift + scale * v (exact)
  BiRationalPoly compose_affine_alpha(const Rational& scale, const Rational& shift) const;

  friend BiRationalPoly operator+(const BiRationalPoly& a, const BiRationalPoly& b);
  friend BiRationalPoly operator-(const BiRationalPoly& a, const BiRationalPoly& b);
  friend BiRationalPoly operator*(const BiRationalPoly& a, const BiRationalPoly& b);
  BiRationalPoly operator-() const;

private:
  void trim();
  std::vector<std::vector<Rational>> c_;  // c_[i][j]: x^i alpha^j
};

// Exact l1 norm of the 2D Chebyshev coefficients of p over
// [xlo, xhi] x [alo, ahi]; an upper bound for sup |p| on the rectangle.
Rational chebyshev2d_l1(const BiRationalPoly& p, const Rational& xlo, const Rational& xhi,
                        const Rational& alo, const Rational& ahi);

}  // namespace blasius
