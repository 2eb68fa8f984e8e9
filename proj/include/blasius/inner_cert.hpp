#pragma once

#include <vector>

#include "blasius/quasi_solution.hpp"

namespace blasius {

// Defect of the inner quasi-solution: R = F0''' + F0 * F0'', exact.
RationalPoly residual_poly(const InnerQuasi& inner);
BiRationalPoly residual_family(const BiRationalPoly& f0);

// Canonical partitions. The base residual partition has 14 cells with the
// sign-change breakpoint x_c = 1.322040 (exact rational); the base error
// chain runs on {0, x_c, 2, 5/2}; the family pipeline uses
// {0, 1.25, 1.4, 2, 5/2}.
const std::vector<Rational>& base_partition();
const std::vector<Rational>& base_energy_cells();
const std::vector<Rational>& family_cells();
Rational x_c();

struct RegionBracket {
  Rational xlo, xhi;
  Enclosure lo;  // certified lower bound of the function on the region
  Enclosure hi;  // certified upper bound
};

// Per-cell cubic-head + l1-tail brackets over a partition.
std::vector<RegionBracket> brackets_on_partition(const RationalPoly& p,
                                                 const std::vector<Rational>& partition);
// Min/max aggregation of cell brackets over [xlo, xhi] (cells must tile it).
RegionBracket aggregate_brackets(const std::vector<RegionBracket>& cells, const Rational& xlo,
                                 const Rational& xhi);
// Upper bound for sup |p| implied by a bracket.
Enclosure bracket_abs_sup(const RegionBracket& b);

// Exact l1 Chebyshev bound for sup |p| on [xlo, xhi].
Rational chebyshev_l1_bound(const RationalPoly& p, const Rational& xlo, const Rational& xhi);

// Brackets for F0, F0', F0'' on [0, 1/8] and [1/8, 5/2].
struct CoefficientBrackets {
  RegionBracket f0_wall, f0_bulk;
  RegionBracket df0_wall, df0_bulk;
  RegionBracket ddf0_wall, ddf0_bulk;
};
CoefficientBrackets certify_coefficients(const InnerQuasi& inner);

// Energy bounds for the resolvent of the linearized operator on a cell:
//   M1 <= sqrt(F0'(xr) - F0'(xl)) exp(1/2 int Q1)
//   M2 <= sqrt(int (y-xl)^2 F0'') exp(1/2 int Q1)
//   M3 <= exp(1/2 int Q2)
//   M  <= sqrt(xr - xl) exp(1/2 int Q)
// Each Q is the pointwise max of its two branch polynomials; the switch locus
// is isolated with certified signs and the integrals of the active branches
// are exact. Ambiguity zones are integrated with the hull of both branches
// and flagged.
struct EnergyBounds {
  Rational xl, xr;
  Enclosure M, M1, M2, M3;
  bool branch_ambiguity_fallback = false;
};
EnergyBounds energy_bounds(const InnerQuasi& inner, const Rational& xl, const Rational& xr);

// Same bounds maximized over the alpha family by subdividing the alpha
// interval and certifying branch signs on (y, alpha) rectangles.
EnergyBounds energy_bounds_family(const Rational& xl, const Rational& xr, int alpha_cells = 16);

// Contraction-ball certification of the error integral equation on one cell.
struct IncomingData {
  Enclosure E, E1, E2;
};
struct ErrorBallCert {
  Rational xl, xr;
  Enclosure B0;                      // M1|E(xl)| + M2|E'(xl)| + M3|E''(xl)| + M sup|R|
  double eps = 0.0;                  // certified ball radius for ||E''||
  Enclosure E_bound, E1_bound, E2_bound;
  double contraction_factor = 0.0;
  bool certified = false;
};
ErrorBallCert certify_error_ball(const EnergyBounds& energy, const Enclosure& residual_sup,
                                 const IncomingData& incoming,
                                 const std::vector<double>& eps_hints = {});

// Chain of per-cell certifications across a partition, worst-case endpoint
// propagation.
struct InnerCertification {
  std::vector<ErrorBallCert> cells;
  Enclosure E_sup, E1_sup, E2_sup;
  bool certified = false;
};
InnerCertification run_error_chain(const std::vector<EnergyBounds>& energies,
                                   const std::vector<Enclosure>& residual_sups,
                                   const std::vector<std::vector<double>>& eps_hints = {});

}  // namespace blasius
