#include <doctest.h>

#include <cmath>
#include <random>

#include "blasius/special_fn.hpp"
#include "oracle_support.hpp"

using namespace blasius;
using testsupport::kernel_integral;

TEST_CASE("I0 at t = 2 encloses the quadrature oracle value") {
  // frozen from two independent 50-digit routes (kernel quadrature and the
  // complementary-error-function closed form)
  const double reference = 0.15726154142389105;
  Enclosure v = I0(Enclosure(2.0));
  CHECK(v.contains(reference));
  CHECK(v.width() < 1e-12);

  auto q = kernel_integral(2.0L, 1.0L);
  long double quad = 0.5L * q.value;
  CHECK(std::fabs(static_cast<double>(quad) - reference) < 1e-15);
}

TEST_CASE("I0/J0 widths and containment across the working range") {
  for (double t : {1.9, 1.999, 2.0, 2.5, 3.0, 4.0, 6.0, 10.0, 20.0, 35.0, 50.0}) {
    Enclosure i0 = I0(Enclosure(t));
    Enclosure j0 = J0(Enclosure(t));
    CHECK(i0.width() < 1e-12);
    CHECK(j0.width() < 1e-12);
    long double ri = testsupport::ref_I0(t);
    long double rj = testsupport::ref_J0(t);
    // the long double oracle itself carries ~1e-17 noise
    CHECK(std::fabs(static_cast<double>(ri) - i0.mid()) < i0.width() / 2 + 5e-16);
    CHECK(std::fabs(static_cast<double>(rj) - j0.mid()) < j0.width() / 2 + 5e-16);
    CHECK(i0.lo > 0.0);
    CHECK(i0.hi < 1.0);
    CHECK(j0.lo > 0.0);
    CHECK(j0.hi < 1.0);
  }
  CHECK(I0(Enclosure(50.0)).hi < I0(Enclosure(2.0)).lo);  // monotone decay
  CHECK_THROWS_AS(I0(Enclosure(1.5)), std::domain_error);
}

TEST_CASE("monte-carlo containment against the adaptive quadrature oracle") {
  std::mt19937 g(23);
  std::uniform_real_distribution<double> u(1.9, 30.0);
  for (int i = 0; i < 40; ++i) {
    double t = u(g);
    Enclosure v = I0(Enclosure(t));
    long double r = testsupport::ref_I0(t);
    CHECK(v.lo - 5e-16 <= static_cast<double>(r));
    CHECK(static_cast<double>(r) <= v.hi + 5e-16);
  }
}

TEST_CASE("I0 tends to the 1/(2t) asymptote") {
  Enclosure big = I0(Enclosure(200.0)) * 400.0;
  CHECK(big.lo > 0.99);
  CHECK(big.hi < 1.0);
}

TEST_CASE("moment definitional identities") {
  for (double t : {2.0, 2.5, 5.0}) {
    Enclosure t_e(t);
    Enclosure m0 = moment(0, MomentBase::One, t_e);
    Enclosure two_i0 = I0(t_e) * 2.0;
    CHECK(m0.intersects(two_i0));
    CHECK(std::fabs(m0.mid() - two_i0.mid()) < 1e-13);
    Enclosure m0h = moment(0, MomentBase::Half, t_e);
    Enclosure four_j0 = J0(t_e) * 4.0;
    CHECK(m0h.intersects(four_j0));
    CHECK(std::fabs(m0h.mid() - four_j0.mid()) < 1e-13);
  }
  CHECK_THROWS_AS(moment(7, MomentBase::One, Enclosure(2.0)), std::domain_error);
}

TEST_CASE("first moment equals -2 dI0/dt") {
  // frozen 50-digit oracle value of the k = 1 moment at t = 2.5
  const double reference = 0.07694220763624551;
  Enclosure m1 = moment(1, MomentBase::One, Enclosure(2.5));
  CHECK(m1.contains(reference));

  // centered finite difference of I0 at t = 2.5
  double h = 1e-5;
  double fd = (I0(Enclosure(2.5 + h)).mid() - I0(Enclosure(2.5 - h)).mid()) / (2 * h);
  CHECK(std::fabs(-2.0 * fd - m1.mid()) < 1e-8);
}

TEST_CASE("q0 vanishes identically at c = 0") {
  for (double t : {1.96, 2.0, 3.0, 7.0}) {
    Enclosure v = q0(Enclosure(t), Enclosure(0.0));
    CHECK(v.lo == 0.0);
    CHECK(v.hi == 0.0);
  }
}

TEST_CASE("q0 minus its linear part scales as c^2") {
  Enclosure t(2.1);
  Enclosure c(0.2);
  Enclosure lin = q0_split(t).linear.q0;
  Enclosure r1 = q0(t, c) - c * lin;
  Enclosure r2 = q0(t, c * 0.5) - c * 0.5 * lin;
  Enclosure ratio = r1 / r2;
  CHECK(ratio.contains(4.0));
}

TEST_CASE("q0 at the matching point, frozen oracle value") {
  // 50-digit oracle: q0(1.9990, 377/1613) = 0.014092384606171046...
  Enclosure v = q0(Enclosure(1.9990), Enclosure::from_rational(Rational(377, 1613)));
  CHECK(v.contains(0.014092384606171046));
  CHECK(v.width() < 1e-12);
}

TEST_CASE("q0 derivatives agree with finite differences to O(h^2)") {
  std::mt19937 g(29);
  std::uniform_real_distribution<double> ut(2.0, 6.0);
  std::uniform_real_distribution<double> uc(-0.24, 0.24);
  for (int i = 0; i < 20; ++i) {
    Enclosure t(ut(g));
    Enclosure c(uc(g));
    Q0Derivs d = q0_derivs(t, c);
    for (double h : {1e-4, 1e-5}) {
      double fd1 = (q0(t + h, c).mid() - q0(t - h, c).mid()) / (2 * h);
      double fd2 = (q0(t + h, c).mid() - 2 * d.q0.mid() + q0(t - h, c).mid()) / (h * h);
      // truncation O(h^2) plus rounding O(eps/h) resp. O(eps/h^2)
      CHECK(std::fabs(fd1 - d.d1.mid()) < 1e-9);
      CHECK(std::fabs(fd2 - d.d2.mid()) < 1e-6);
    }
  }
}

TEST_CASE("q0 domain checks") {
  CHECK_THROWS_AS(q0(Enclosure(1.9), Enclosure(0.1)), std::domain_error);
  CHECK_THROWS_AS(q0(Enclosure(2.0), Enclosure(0.3)), std::domain_error);
}

TEST_CASE("far residual vanishes identically at c = 0") {
  FarResidual r = far_residual(Enclosure(2.5), Enclosure(0.0));
  CHECK(r.value.lo == 0.0);
  CHECK(r.value.hi == 0.0);
}

TEST_CASE("far residual at t = 2 with the nominal c, frozen oracle value") {
  // 50-digit oracle: R(2, 377/1613) = 2.2894800456093399e-7
  FarResidual r = far_residual(Enclosure(2.0), Enclosure::from_rational(Rational(377, 1613)));
  CHECK(r.value.contains(2.2894800456093399e-7));
  CHECK(r.normalized.contains(2.6124545743316658e-4));
}

TEST_CASE("normalized far residual stays bounded along the decay") {
  Enclosure c = Enclosure::from_rational(Rational(377, 1613));
  double n3 = far_residual(Enclosure(3.0), c).normalized.mid();
  double n6 = far_residual(Enclosure(6.0), c).normalized.mid();
  CHECK(n3 / n6 < 10.0);
  CHECK(n6 / n3 < 10.0);
}

TEST_CASE("far residual is O(c) as c tends to zero") {
  Enclosure t(2.5);
  double prev_ratio = 0.0;
  for (double c : {1e-2, 1e-3, 1e-4}) {
    double ratio = std::fabs(far_residual(t, Enclosure(c)).value.mid()) / c;
    CHECK(ratio < 1.0);  // bounded
    if (prev_ratio != 0.0) CHECK(ratio < prev_ratio * 1.5 + 1e-6);
    prev_ratio = ratio;
  }
}
