#pragma once

#include <array>
#include <optional>

#include "blasius/farfield_cert.hpp"
#include "blasius/inner_cert.hpp"
#include "blasius/matching.hpp"
#include "blasius/oracle.hpp"
#include "blasius/report.hpp"

namespace blasius {

enum class ResidualMethod { TaylorCells, ChebyshevL1 };

// Full base-case certification (alpha = 0).
struct BaseCertification {
  std::vector<RegionBracket> cells;  // per-cell residual brackets
  RegionBracket region1, region2, region3;
  Enclosure taylor_global_sup;
  Rational cheb_l1_global;
  std::array<Rational, 3> cheb_l1_regions;
  CoefficientBrackets coeffs;
  std::vector<EnergyBounds> energy;
  InnerCertification chain;
  FarFieldXBounds far;
  TmRange tm;
  ContractionCheck contraction;
  JacobianEstimate jacobian0;
  MatchState fixed_point;
  WallStress wall_match;
  std::optional<OracleTrajectory> oracle;
  std::optional<DeviationReport> deviation;
  WallStress wall_oracle;
};
BaseCertification run_base_certification(bool with_oracle = true, double oracle_tol = 1e-13,
                                         const std::vector<Rational>* cells_override = nullptr);

// Uniform certification over the whole alpha family.
struct FamilyCertification {
  std::array<Rational, 4> residual_l1;
  std::array<EnergyBounds, 4> energy;
  InnerCertification chain;
  FarFieldXBounds far;
  TmRange tm;
  struct GridPoint {
    Rational alpha;
    ContractionCheck contraction;
    Enclosure jacobian_norm;
  };
  std::vector<GridPoint> grid;
  bool grid_all_certified = false;
};
FamilyCertification run_family_certification(int alpha_cells = 16, bool with_jacobians = true);

// Uniform family residual bound on one cell: max of exact 2D Chebyshev l1
// bounds over the inherited x-breakpoints and an alpha split.
Rational family_residual_l1(const BiRationalPoly& rfam, const Rational& xlo, const Rational& xhi,
                            int alpha_split);
// the alpha splits used per family cell
std::array<int, 4> family_alpha_splits();

// Certification of a single family member (general alpha, CLI path).
struct AlphaCertification {
  Rational alpha;
  std::array<Rational, 4> residual_l1;  // this alpha only
  std::vector<EnergyBounds> energy;
  InnerCertification chain;
  FarFieldXBounds far;  // family constants, valid for each alpha
  MatchState fixed_point;
  ContractionCheck contraction;
  WallStress wall_match;
  std::optional<DeviationReport> deviation;
};
AlphaCertification run_alpha_certification(const Rational& alpha, bool with_oracle = true,
                                           double oracle_tol = 1e-13);

// Report assembly; see docs/report-schema.md for the layout.
CertReport make_base_report(const BaseCertification& c, ResidualMethod method);
CertReport make_family_report(const FamilyCertification& c);
CertReport make_alpha_report(const AlphaCertification& c);

}  // namespace blasius
