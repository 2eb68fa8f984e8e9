#pragma once

#include <array>
#include <vector>

#include "blasius/quasi_solution.hpp"

namespace blasius {

// State of the matching iteration in the weighted coordinates
// A = (a, b/2, c/2); the residual norm is the weighted Euclidean distance
// ||A - N[A]||_2.
struct MatchState {
  Enclosure a, b, c;
  Rational alpha;
  int iterations = 0;
  Enclosure residual_norm;
  bool converged = false;
  bool stayed_in_trust_region = true;
  std::vector<double> step_norms;  // ||A_{k+1} - A_k||_2 per iteration
};

// One application of the matching map with h = E = 0:
//   N1 = F0'(5/2) - a (q0'(t_m) - q0(t_m)/(2 t_m))
//   N2 = F0(5/2) - (5/2) N1 - sqrt(a/(2 t_m)) q0(t_m)
//   N3 solves the second-derivative match for the leading c factor, the c^2
//   part of q0 iterated on the right-hand side.
struct NTriple {
  Enclosure N1, N2, N3;
};
NTriple apply_N(const Enclosure& a, const Enclosure& b, const Enclosure& c, const Rational& alpha);

// Weighted residual norm ||A - N[A]||_2 at a point.
Enclosure matching_residual_norm(const Enclosure& a, const Enclosure& b, const Enclosure& c,
                                 const Rational& alpha);

// Midpoint fixed-point iteration, re-centered each step; the final residual
// norm is certified with full enclosures.
MatchState match_fixed_point(const Rational& alpha, double tol = 1e-14, int max_iter = 200,
                             bool from_nominal = true);

// Central finite-difference Jacobian in the weighted coordinates, widened by
// the second-difference magnitude. Diagnostic, not a certified enclosure.
struct JacobianEstimate {
  std::array<std::array<Enclosure, 3>, 3> entries;
  Enclosure norm2;
};
JacobianEstimate jacobian_norm(const Enclosure& a, const Enclosure& b, const Enclosure& c,
                               const Rational& alpha, const Rational& step);

// Frobenius norm of the weighted Jacobian matrix; the weighting encodes the
// (a, b/2, c/2) coordinates.
Enclosure weighted_jacobian_norm(const std::array<std::array<Enclosure, 3>, 3>& weighted_entries);

// Contraction-lemma check: ||A0 - N[A0]|| <= (1 - kappa) rho0 and the
// supplied kappa < 1; margins are reported.
struct ContractionCheck {
  bool certified = false;
  Enclosure ndiff_norm;
  double threshold = 0.0;  // (1 - kappa) rho0
  double margin = 0.0;
  double kappa = 0.0;
};
ContractionCheck verify_contraction(const Rational& alpha, double kappa, const Rational& rho0);

// Wall stress a^{-3/2} (rescaled problem) and its original-variable value.
struct WallStress {
  Enclosure scaled;
  Enclosure original;
};
WallStress wall_stress(const Enclosure& a);

// The 13-point equispaced alpha grid of the family interval.
std::vector<Rational> alpha_grid_13();

}  // namespace blasius
