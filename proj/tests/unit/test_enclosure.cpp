#include <doctest.h>

#include <cmath>
#include <random>

#include "blasius/enclosure.hpp"
#include "oracle_support.hpp"

using namespace blasius;

namespace {

Enclosure rand_interval(std::mt19937& g, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  double a = u(g), b = u(g);
  if (a > b) std::swap(a, b);
  return Enclosure(a, b);
}

double rand_inside(std::mt19937& g, const Enclosure& e) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return e.lo + (e.hi - e.lo) * u(g);
}

}  // namespace

TEST_CASE("interval arithmetic containment, 1000 cases per operator") {
  std::mt19937 g(7);
  for (int i = 0; i < 1000; ++i) {
    Enclosure A = rand_interval(g, -10.0, 10.0);
    Enclosure B = rand_interval(g, -10.0, 10.0);
    long double a = rand_inside(g, A), b = rand_inside(g, B);
    CHECK((A + B).contains(static_cast<double>(a + b)));
    CHECK((A - B).contains(static_cast<double>(a - b)));
    CHECK((A * B).contains(static_cast<double>(a * b)));
    if (B.lo > 0.1 || B.hi < -0.1) CHECK((A / B).contains(static_cast<double>(a / b)));
  }
  for (int i = 0; i < 1000; ++i) {
    Enclosure A = rand_interval(g, -3.0, 3.0);
    double a = rand_inside(g, A);
    CHECK(A.exp().contains(std::exp(a)));
    if (A.lo >= 0.0) CHECK(A.sqrt().contains(std::sqrt(a)));
  }
  for (int i = 0; i < 1000; ++i) {
    Enclosure A = rand_interval(g, -4.0, 4.0);
    double a = rand_inside(g, A);
    for (int e : {2, 3, 5}) CHECK(A.pow_int(e).contains(std::pow(a, e)));
  }
}

TEST_CASE("exact rational conversion is a tight certified bracket") {
  std::mt19937 g(17);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 99991);
  for (int i = 0; i < 500; ++i) {
    Rational r(num(g), den(g));
    Enclosure e = Enclosure::from_rational(r);
    CHECK(e.contains(r));
    CHECK(e.width() <= 4.0 * std::ldexp(std::fabs(e.lo) + 1e-300, -52));
  }
  // dyadic values convert to points
  CHECK(Enclosure::from_rational(Rational(3, 8)).width() == 0.0);
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(Enclosure(1.0) / Enclosure(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(Enclosure(-2.0, -1.0).sqrt(), std::domain_error);
  CHECK_THROWS_AS(Enclosure(1.0, 0.0), std::domain_error);
}

TEST_CASE("even powers stay nonnegative and squares of zero-anchored intervals keep zero") {
  Enclosure z(0.0, 1e-7);
  Enclosure sq = z.pow_int(2);
  CHECK(sq.lo >= 0.0);
  CHECK_NOTHROW((sq + Enclosure(0.0)).sqrt());
  Enclosure straddle(-2.0, 3.0);
  Enclosure p = straddle.pow_int(2);
  CHECK(p.lo == 0.0);
  CHECK(p.contains(4.0));
  CHECK(p.contains(9.0));
}
