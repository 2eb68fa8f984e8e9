#pragma once

#include <vector>

#include "blasius/quasi_solution.hpp"
#include "blasius/special_fn.hpp"

namespace blasius {

// Hypothesized bounds on the far-field correction in the stretched variable:
//   |EE(t)|                         <= C e^{-3t} / (9 t^{3/2})
//   |EE'(t) - EE/(2t)|              <= C e^{-3t} / (3 t^{3/2})
//   |sqrt(t) EE'' - EE'/sqrt(t) + EE/(2 t^{3/2})| <= C t^{-1} e^{-3t}
// with C = 1.6667e-4 (base) or 1.6955e-4 (family).
Rational farfield_constant_base();
Rational farfield_constant_family();

// x-domain error-bound constants obtained by transporting the stretched
// bounds through E = sqrt(a/(2t)) EE and dt/dx = sqrt(2at), with the
// prefactors maximized over the trust region:
//   |E|   <= e_const   t^{-2}  e^{-3t}
//   |E'|  <= de_const  t^{-3/2} e^{-3t}
//   |E''| <= dde_const t^{-1}  e^{-3t}
// The second-derivative constant follows the published identification of the
// third combination with the full transform; the strict chain rule carries an
// extra EE'/(2 sqrt t) term, and the constant including it is reported
// alongside.
struct FarFieldXBounds {
  Enclosure e_const;
  Enclosure de_const;
  Enclosure dde_const;
  Enclosure dde_const_strict;  // with the chain-rule cross term at t = t_m
  Enclosure a_sup;
};
FarFieldXBounds map_far_bounds_to_x(bool family);

// Residual scan of q0 along a t-grid at fixed c, for the report.
struct FarResidualSample {
  double t;
  Enclosure value;
  Enclosure normalized;
};
std::vector<FarResidualSample> far_residual_scan(const Enclosure& c, double t_lo, double t_hi,
                                                 int samples);

}  // namespace blasius
