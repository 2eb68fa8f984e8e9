#pragma once

#include "blasius/birational_poly.hpp"
#include "blasius/rational_poly.hpp"
#include "blasius/special_fn.hpp"

namespace blasius {

// The alpha interval of the generalized family, [-3/50, 3/50].
Rational alpha_lo();
Rational alpha_hi();
bool alpha_in_range(const Rational& alpha);

// Inner representation of the quasi-solution on [0, 5/2]: a single polynomial
// with exact rational coefficients. The base construction (alpha = 0) and the
// generalized one differ, so the variant is kept explicit.
struct InnerQuasi {
  RationalPoly poly;
  Rational alpha;
  bool family;  // true when built from the alpha-parameterized table
};

// Base construction, alpha = 0 only: F0 = x^2/2 + x^4 P(2x/5), degree 16.
InnerQuasi build_inner_base();

// Generalized construction for alpha in [-3/50, 3/50] (exact beta
// substitution 25 alpha/3 + 1/2): F0 = alpha + x^2/2 + x^3 P(2x/5; beta).
InnerQuasi build_inner_general(const Rational& alpha);

// Dispatch per the pipeline convention: alpha = 0 -> base construction.
InnerQuasi build_inner(const Rational& alpha);

// Full bivariate inner family F0(x; alpha), exact.
const BiRationalPoly& inner_family();

// Matching constants (a, b, c) with their trust radius rho0.
struct MatchTriple {
  Enclosure a, b, c;
  Rational rho0;
};

// Nominal rational triples: constants for the base case, quadratics in alpha
// for the family.
struct RationalTriple {
  Rational a, b, c;
};
RationalTriple initial_triple_exact(const Rational& alpha);
MatchTriple initial_triple(const Rational& alpha);
Rational rho0_base();    // 5e-5
Rational rho0_general(); // 5e-4

// Stretched variable t(x) = (a/2)(x + b/a)^2 and its value t_m at x = 5/2.
Enclosure stretched_t(const Enclosure& x, const Enclosure& a, const Enclosure& b);
Enclosure t_match(const Enclosure& a, const Enclosure& b);

// Certified t_m ranges over the trust region: exact rational endpoints for
// the base case, enclosures of the inf/sup over alpha for the family.
struct TmRange {
  Enclosure lo;
  Enclosure hi;
};
TmRange tm_range_base();
TmRange tm_range_family();

// Outer representation F0 = a x + b + sqrt(a/(2t)) q0(t) and its first two
// x-derivatives, valid wherever t(x) >= 1.96.
struct OuterEval {
  Enclosure t;
  Enclosure F;
  Enclosure dF;
  Enclosure ddF;
};
OuterEval f0_outer(const Enclosure& x, const MatchTriple& triple);
OuterEval f0_outer_at_t(const Enclosure& t, const Enclosure& x, const Enclosure& a,
                        const Enclosure& b, const Enclosure& c);

}  // namespace blasius
