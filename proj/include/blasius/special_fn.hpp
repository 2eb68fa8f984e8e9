#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "blasius/enclosure.hpp"

namespace blasius {

// Certified enclosures of the far-field kernel functions
//   I0(t) = 1 - sqrt(pi t) e^t erfc(sqrt(t)) = (1/2) int_0^inf e^{-st} (1+s)^{-3/2} ds
//   J0(t) = 1 - sqrt(2 pi t) e^{2t} erfc(sqrt(2t)) = I0-kernel at 2t
// evaluated through the Laplace integral: an alternating-tail expansion of
// the algebraic factor gives exact rational brackets at large t, and the
// first-order ODE the integral satisfies transports the bracket down to the
// working range by Taylor steps with explicit remainder bounds. erfc itself
// is never used on the certified path.
Enclosure I0(const Enclosure& t);  // domain t >= 1.9
Enclosure J0(const Enclosure& t);  // domain t >= 1.9 (kernel argument 2t)

enum class MomentBase { One, Half };

// Enclosure of int_0^inf s^k e^{-st} (1 + base*s)^{-3/2} ds for k <= 6,
// via the integration-by-parts recurrence seeded by I0 / J0.
Enclosure moment(int k, MomentBase base, const Enclosure& t);

// q0(t;c) = 2 c sqrt(t) e^{-t} I0 + c^2 e^{-2t} (2 J0 - I0 - I0^2) and its
// first three t-derivatives, all obtained symbolically: I0' and J0' reduce to
// rational-coefficient combinations of I0, J0 and 1/t (the k=1 moment
// recurrence), so no numerical differentiation enters.
struct Q0Derivs {
  Enclosure q0;
  Enclosure d1;
  Enclosure d2;
  Enclosure d3;
};
Q0Derivs q0_derivs(const Enclosure& t, const Enclosure& c);  // |c| < 1/4, t >= 1.96
Enclosure q0(const Enclosure& t, const Enclosure& c);

// q0 split by powers of c: q0 = c * linear + c^2 * quadratic; used by the
// matching map where c is solved from the second-derivative condition.
struct Q0Split {
  Q0Derivs linear;
  Q0Derivs quadratic;
};
Q0Split q0_split(const Enclosure& t);

// Far-field residual of q0 in the stretched variable: substitutes q0 into the
// third-order equation satisfied by q and evaluates the defect.
struct FarResidual {
  Enclosure t;
  Enclosure value;
  Enclosure normalized;  // value * t^{3/2} * e^{3t}
};
FarResidual far_residual(const Enclosure& t, const Enclosure& c);

namespace detail {

// term algebra: coef * c^cpow * t^{th/2} * e^{-em t} * I0^ip * J0^jp
struct FarKey {
  int cpow, th, em, ip, jp;
  auto operator<=>(const FarKey&) const = default;
};
using TermSet = std::map<FarKey, Rational>;

TermSet q0_terms();
TermSet d_dt(const TermSet& s);
TermSet mul(const TermSet& a, const TermSet& b);
TermSet add(const TermSet& a, const TermSet& b);
TermSet scale(const TermSet& s, const Rational& coef, int th_shift);
Enclosure eval(const TermSet& s, const Enclosure& t, const Enclosure& c);

}  // namespace detail

}  // namespace blasius
