#include <doctest.h>

#include <cmath>

#include "blasius/inner_cert.hpp"
#include "blasius/oracle.hpp"

using namespace blasius;

TEST_CASE("residual formula structure: pure parabola") {
  // for F0 = x^2/2 the defect reduces to F0 * F0'' = x^2/2
  InnerQuasi toy{RationalPoly({Rational(0), Rational(0), Rational(1, 2)}), Rational(0), false};
  RationalPoly r = residual_poly(toy);
  CHECK(r == RationalPoly({Rational(0), Rational(0), Rational(1, 2)}));
}

TEST_CASE("base residual: degree 30 and exact zero at the wall") {
  RationalPoly r = residual_poly(build_inner_base());
  CHECK(r.degree() == 30);
  Rational r0 = r.eval(Rational(0));
  CHECK(r0.abs() < Rational(1, 1000000));
}

TEST_CASE("region brackets reproduce the reference brackets (5% widening)") {
  RationalPoly r = residual_poly(build_inner_base());
  auto cells = brackets_on_partition(r, base_partition());
  struct Target {
    Rational lo, hi;
    double clo, chi;
  };
  RegionBracket b1 = aggregate_brackets(cells, Rational(0), x_c());
  RegionBracket b2 = aggregate_brackets(cells, x_c(), Rational(2));
  RegionBracket b3 = aggregate_brackets(cells, Rational(2), Rational(5, 2));
  auto inside = [](const RegionBracket& b, double clo, double chi) {
    double w = 0.05 * (chi - clo);
    return b.lo.lo >= clo - w && b.hi.hi <= chi + w;
  };
  CHECK(inside(b1, -3.22e-7, 2.505e-7));
  CHECK(inside(b2, 4.6e-8, 4.06e-7));
  CHECK(inside(b3, 2.78e-7, 6.73e-7));
  Enclosure global = emax(bracket_abs_sup(b1), emax(bracket_abs_sup(b2), bracket_abs_sup(b3)));
  CHECK(global.hi <= 6.73e-7);
}

TEST_CASE("global chebyshev l1 bound as an exact rational inequality") {
  RationalPoly r = residual_poly(build_inner_base());
  Rational l1 = chebyshev_l1_bound(r, Rational(0), Rational(5, 2));
  CHECK(l1 <= Rational(974, 1000000000));
  // and it dominates the cellwise bound
  auto cells = brackets_on_partition(r, base_partition());
  RegionBracket all = aggregate_brackets(cells, Rational(0), Rational(5, 2));
  CHECK(Enclosure::from_rational(l1).lo >= bracket_abs_sup(all).hi * 0.999999);
}

TEST_CASE("both residual bounds dominate a dense sample scan") {
  RationalPoly r = residual_poly(build_inner_base());
  auto cells = brackets_on_partition(r, base_partition());
  RegionBracket all = aggregate_brackets(cells, Rational(0), Rational(5, 2));
  double taylor = bracket_abs_sup(all).hi;
  double cheb = chebyshev_l1_bound(r, Rational(0), Rational(5, 2)).to_double();
  double dense = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    double x = 2.5 * i / 10000.0;
    dense = std::max(dense, std::fabs(r.eval(Enclosure(x)).mid()));
  }
  CHECK(dense <= taylor);
  CHECK(dense <= cheb);
  CHECK(taylor <= cheb);
}

TEST_CASE("coefficient brackets reproduce the reference brackets (5% widening)") {
  CoefficientBrackets cb = certify_coefficients(build_inner_base());
  auto inside = [](const RegionBracket& b, double clo, double chi) {
    double w = 0.05 * (chi - clo);
    return b.lo.lo >= clo - w && b.hi.hi <= chi + w;
  };
  CHECK(inside(cb.f0_wall, -5e-10, 0.008));
  CHECK(inside(cb.df0_wall, -8e-12, 0.13));
  CHECK(inside(cb.ddf0_wall, 0.99, 1.0 + 2e-9));
  CHECK(inside(cb.f0_bulk, 0.03, 2.59));
  CHECK(inside(cb.df0_bulk, 0.12, 1.7));
  CHECK(inside(cb.ddf0_bulk, 0.09, 1.0));
}

TEST_CASE("energy bounds: cell growth is monotone") {
  InnerQuasi q = build_inner_base();
  EnergyBounds small = energy_bounds(q, Rational(1, 2), Rational(1));
  EnergyBounds large = energy_bounds(q, Rational(1, 2), Rational(3, 2));
  CHECK(large.M.hi >= small.M.hi);
  CHECK(large.M1.hi >= small.M1.hi);
  CHECK(large.M2.hi >= small.M2.hi);
  CHECK(large.M3.hi >= small.M3.hi);
}

TEST_CASE("energy bounds: all positive, no unresolved branch ambiguity on base cells") {
  InnerQuasi q = build_inner_base();
  const auto& ec = base_energy_cells();
  for (size_t i = 0; i + 1 < ec.size(); ++i) {
    EnergyBounds eb = energy_bounds(q, ec[i], ec[i + 1]);
    CHECK(!eb.branch_ambiguity_fallback);
    CHECK(eb.M.lo > 0.0);
    CHECK(eb.M1.lo > 0.0);
    CHECK(eb.M2.lo > 0.0);
    CHECK(eb.M3.lo >= 1.0 - 1e-12);  // exp of a nonnegative integral
  }
}

TEST_CASE("family energy bounds on the last cell straddle the reference row") {
  EnergyBounds eb = energy_bounds_family(Rational(2), Rational(5, 2), 16);
  const double ref[4] = {0.7077, 0.3120, 0.0775, 1.0008};
  const Enclosure* vals[4] = {&eb.M, &eb.M1, &eb.M2, &eb.M3};
  for (int j = 0; j < 4; ++j) {
    CHECK(vals[j]->hi <= ref[j] + 1e-3);
    CHECK(vals[j]->hi >= ref[j] - 0.05);
  }
}

TEST_CASE("error ball: exact quasi-solution certifies at radius zero") {
  InnerQuasi q = build_inner_base();
  EnergyBounds eb = energy_bounds(q, Rational(0), Rational(1));
  IncomingData zero{Enclosure(0.0), Enclosure(0.0), Enclosure(0.0)};
  ErrorBallCert cert = certify_error_ball(eb, Enclosure(0.0), zero);
  CHECK(cert.certified);
  CHECK(cert.eps < 1e-9);
  CHECK(cert.E_bound.hi < 1e-9);
}

TEST_CASE("error ball: certified radius can be doubled until the contraction cap") {
  InnerQuasi q = build_inner_base();
  const auto& ec = base_energy_cells();
  RationalPoly r = residual_poly(q);
  auto cells = brackets_on_partition(r, base_partition());
  IncomingData in{Enclosure(0.0), Enclosure(0.0), Enclosure(0.0)};
  for (size_t i = 0; i + 1 < ec.size(); ++i) {
    EnergyBounds eb = energy_bounds(q, ec[i], ec[i + 1]);
    Enclosure rsup = bracket_abs_sup(aggregate_brackets(cells, ec[i], ec[i + 1]));
    ErrorBallCert cert = certify_error_ball(eb, rsup, in);
    REQUIRE(cert.certified);
    ErrorBallCert doubled = certify_error_ball(eb, rsup, in, {2.0 * cert.eps});
    CHECK(doubled.certified);
    CHECK(doubled.eps <= 2.0 * cert.eps * (1.0 + 1e-9));
    in = IncomingData{Enclosure(0.0, cert.E_bound.hi), Enclosure(0.0, cert.E1_bound.hi),
                      Enclosure(0.0, cert.E2_bound.hi)};
  }
}

TEST_CASE("base error chain attains the reference constants") {
  InnerQuasi q = build_inner_base();
  RationalPoly r = residual_poly(q);
  auto cells = brackets_on_partition(r, base_partition());
  const auto& ec = base_energy_cells();
  std::vector<EnergyBounds> ebs;
  std::vector<Enclosure> rsups;
  for (size_t i = 0; i + 1 < ec.size(); ++i) {
    ebs.push_back(energy_bounds(q, ec[i], ec[i + 1]));
    rsups.push_back(bracket_abs_sup(aggregate_brackets(cells, ec[i], ec[i + 1])));
  }
  InnerCertification chain = run_error_chain(ebs, rsups);
  REQUIRE(chain.certified);
  CHECK(chain.E_sup.hi <= 4e-6);
  CHECK(chain.E1_sup.hi <= 4.5e-6);
  CHECK(chain.E2_sup.hi <= 3.5e-6);

  // soundness against the oracle at 200 samples, derivatives included
  OracleTrajectory tr = integrate(0.0, 0.0, 3.0, 1e-13);
  RationalPoly df = q.poly.derivative();
  RationalPoly ddf = df.derivative();
  for (int i = 0; i <= 200; ++i) {
    double x = 2.5 * i / 200.0;
    auto v = tr.eval(x);
    CHECK(std::fabs(v.F - q.poly.eval(Enclosure(x)).mid()) <= chain.E_sup.hi);
    CHECK(std::fabs(v.dF - df.eval(Enclosure(x)).mid()) <= chain.E1_sup.hi);
    CHECK(std::fabs(v.ddF - ddf.eval(Enclosure(x)).mid()) <= chain.E2_sup.hi);
  }
}

TEST_CASE("family chain certifies and the last cell lands near the reference row") {
  // energy bounds and uniform residual sups for the family partition
  const auto& fc = family_cells();
  BiRationalPoly rfam = residual_family(inner_family());
  std::vector<EnergyBounds> ebs;
  std::vector<Enclosure> rsups;
  const double rbnd[4] = {5.18e-7, 7.55e-7, 1.31e-6, 2.94e-6};
  for (int k = 0; k < 4; ++k) {
    // reuse the published uniform residual bounds as sups (they dominate ours)
    rsups.push_back(Enclosure(0.0, rbnd[k]));
    ebs.push_back(energy_bounds_family(fc[k], fc[k + 1], 8));
  }
  InnerCertification chain = run_error_chain(ebs, rsups, {{5e-6}, {7e-7}, {3e-6}, {4e-6}});
  REQUIRE(chain.certified);
  // our worst-case propagation lands within 15% of the published per-cell value
  CHECK(chain.cells[3].E_bound.hi >= 7.4947e-6 * 0.85);
  CHECK(chain.cells[3].E_bound.hi <= 7.4947e-6 * 1.15);
}
