#include "blasius/farfield_cert.hpp"

namespace blasius {

Rational farfield_constant_base() { return Rational(16667, 100000000); }
Rational farfield_constant_family() { return Rational(16955, 100000000); }

FarFieldXBounds map_far_bounds_to_x(bool family) {
  Rational C = family ? farfield_constant_family() : farfield_constant_base();
  // sup of a over the trust region: a0 (+ alpha-quadratic for the family,
  // convex, so maximal at an endpoint of the alpha interval) plus rho0
  Rational a_sup_exact;
  if (!family) {
    a_sup_exact = initial_triple_exact(Rational(0)).a + rho0_base();
  } else {
    Rational left = initial_triple_exact(alpha_lo()).a;
    Rational right = initial_triple_exact(alpha_hi()).a;
    a_sup_exact = max(left, right) + rho0_general();
  }
  Enclosure a = Enclosure::from_rational(a_sup_exact);
  Enclosure Ce = Enclosure::from_rational(C);
  FarFieldXBounds out;
  out.a_sup = a;
  out.e_const = Ce * (a * 0.5).sqrt() / 9.0;
  out.de_const = Ce * a / 3.0;
  out.dde_const = Ce * Enclosure(2.0).sqrt() * a * a.sqrt();
  // strict chain-rule constant: the transform of E'' also carries
  // a sqrt(2a) * EE'/(2 sqrt t); at t >= t_m that adds
  // C (1/(6t) + 1/(36 t^2)) relative to the leading t^{-1} term.
  Enclosure tm = family ? Enclosure(tm_range_family().lo.lo) : Enclosure(tm_range_base().lo.lo);
  Enclosure correction = Enclosure(1.0) + (tm * 6.0).inv() + (tm.pow_int(2) * 36.0).inv();
  out.dde_const_strict = out.dde_const * correction;
  return out;
}

std::vector<FarResidualSample> far_residual_scan(const Enclosure& c, double t_lo, double t_hi,
                                                 int samples) {
  if (samples < 2) throw std::invalid_argument("far_residual_scan: need at least 2 samples");
  std::vector<FarResidualSample> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    double t = t_lo + (t_hi - t_lo) * i / (samples - 1);
    FarResidual r = far_residual(Enclosure(t), c);
    out.push_back(FarResidualSample{t, r.value, r.normalized});
  }
  return out;
}

}  // namespace blasius
