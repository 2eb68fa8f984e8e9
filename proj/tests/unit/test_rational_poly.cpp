#include <doctest.h>

#include <random>

#include "blasius/coeff_data.hpp"
#include "blasius/quasi_solution.hpp"
#include "blasius/rational_poly.hpp"
#include "oracle_support.hpp"

using namespace blasius;

namespace {

Rational rand_rational(std::mt19937& g) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  return Rational(num(g), den(g));
}

RationalPoly rand_poly(std::mt19937& g, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(g);
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.push_back(rand_rational(g));
  return RationalPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("3/50") == Rational(3, 50));
  CHECK(Rational::parse("-0.0625") == Rational(-1, 16));
  CHECK(Rational::parse("1.322040") == Rational(1322040, 1000000));
  CHECK(Rational::parse("0.50") == Rational(1, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(2, 3).pow_int(3) == Rational(8, 27));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK(Rational::from_double(0.125) == Rational(1, 8));
}

TEST_CASE("polynomial product: difference of squares") {
  RationalPoly xp1({Rational(1), Rational(1)});
  RationalPoly xm1({Rational(-1), Rational(1)});
  CHECK(xp1 * xm1 == RationalPoly({Rational(-1), Rational(0), Rational(1)}));
}

TEST_CASE("derivative of antiderivative is the identity") {
  std::mt19937 g(11);
  for (int k = 0; k < 50; ++k) {
    RationalPoly p = rand_poly(g, 12);
    CHECK(p.antiderivative().derivative() == p);
  }
}

TEST_CASE("triple antiderivative reproduces the inner coefficient scaling") {
  // the x^4 P(2x/5) block is the triple antiderivative of
  // sum_j p_j (2/5)^{j+1} x^{j+1}; this pins the 2/(5(j+2)(j+3)(j+4)) factors
  const auto& p = CoeffData::instance().inner_base;
  const Rational two_fifths(2, 5);
  std::vector<Rational> third(p.size() + 2, Rational(0));
  for (size_t j = 0; j < p.size(); ++j)
    third[j + 1] = p[j] * two_fifths.pow_int(static_cast<unsigned>(j + 1));
  RationalPoly f3(std::move(third));
  RationalPoly target = f3.antiderivative().antiderivative().antiderivative();

  std::vector<Rational> block(17, Rational(0));
  for (size_t j = 0; j < p.size(); ++j) {
    long jj = static_cast<long>(j);
    Rational scale =
        Rational(2) / (Rational(5) * Rational(jj + 2) * Rational(jj + 3) * Rational(jj + 4));
    block[4 + j] = scale * p[j] * two_fifths.pow_int(static_cast<unsigned>(j));
  }
  CHECK(target == RationalPoly(std::move(block)));
}

TEST_CASE("compose_affine exactness") {
  RationalPoly x2({Rational(0), Rational(0), Rational(1)});
  CHECK(x2.compose_affine(Rational(1), Rational(0)) == x2);

  std::mt19937 g(21);
  for (int k = 0; k < 60; ++k) {
    RationalPoly p = rand_poly(g, 10);
    Rational s = rand_rational(g);
    if (s.is_zero()) s = Rational(1, 3);
    Rational t = rand_rational(g);
    Rational tau = rand_rational(g);
    CHECK(p.compose_affine(s, t).eval(tau) == p.eval(t + s * tau));
  }

  // Chebyshev T2 on [0, 5/2]: 2y^2 - 1 with y = 4x/5 - 1 evaluates to 1 at x = 5/2
  RationalPoly t2({Rational(-1), Rational(0), Rational(2)});
  RationalPoly t2x = t2.compose_affine(Rational(4, 5), Rational(-1));
  CHECK(t2x.eval(Rational(5, 2)) == Rational(1));

  CHECK_THROWS_AS(x2.compose_affine(Rational(0), Rational(1)), std::domain_error);
}

TEST_CASE("chebyshev basis conversion") {
  const Rational zero(0), one(1);
  auto c = to_chebyshev(RationalPoly::constant(one), zero, Rational(5, 2));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == one);

  auto cx = to_chebyshev(RationalPoly({zero, one}), Rational(-1), one);
  REQUIRE(cx.size() == 2);
  CHECK(cx[0] == zero);
  CHECK(cx[1] == one);
}

TEST_CASE("chebyshev round trip is exact") {
  std::mt19937 g(31);
  for (int k = 0; k < 30; ++k) {
    RationalPoly p = rand_poly(g, 14);
    Rational lo = rand_rational(g);
    Rational hi = lo + Rational(1) + rand_rational(g).abs();
    auto cheb = to_chebyshev(p, lo, hi);
    CHECK(from_chebyshev(cheb, lo, hi) == p);
  }
}

TEST_CASE("range bound: monotone cubic") {
  RationalPoly x3({Rational(0), Rational(0), Rational(0), Rational(1)});
  RangeBracket rb = range_bound_cubic_tail(x3, Rational(-1), Rational(1));
  CHECK(rb.min_bound.contains(-1.0));
  CHECK(rb.max_bound.contains(1.0));
  CHECK(rb.tail_l1 == Rational(0));
}

TEST_CASE("range bound: pure quartic head/tail split") {
  RationalPoly x4({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)});
  RangeBracket rb = range_bound_cubic_tail(x4, Rational(-1), Rational(1));
  // cubic head is zero, the tail contributes +-1
  CHECK(rb.tail_l1 == Rational(1));
  CHECK(rb.min_bound.lo >= -1.0 - 1e-15);
  CHECK(rb.max_bound.hi <= 1.0 + 1e-15);
  CHECK(rb.min_bound.lo <= 0.0);
  CHECK(rb.max_bound.hi >= 1.0 - 1e-15);
}

TEST_CASE("range bound soundness on random samples") {
  std::mt19937 g(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 25; ++k) {
    RationalPoly p = rand_poly(g, 9);
    Rational lo = rand_rational(g);
    Rational hi = lo + Rational(1, 2) + rand_rational(g).abs();
    RangeBracket rb = range_bound_cubic_tail(p, lo, hi);
    for (int i = 0; i < 1000; ++i) {
      Rational x = lo + (hi - lo) * Rational::from_double(u(g));
      Rational v = p.eval(x);
      CHECK(Rational::from_double(rb.min_bound.lo) <= v);
      CHECK(v <= Rational::from_double(rb.max_bound.hi));
    }
  }
}

TEST_CASE("range bound width shrinks under bisection") {
  std::mt19937 g(51);
  for (int k = 0; k < 20; ++k) {
    RationalPoly p = rand_poly(g, 10);
    Rational lo(-1), hi(2);
    RangeBracket parent = range_bound_cubic_tail(p, lo, hi);
    Rational mid = (lo + hi) / Rational(2);
    RangeBracket l = range_bound_cubic_tail(p, lo, mid);
    RangeBracket r = range_bound_cubic_tail(p, mid, hi);
    double child_lo = std::min(l.min_bound.lo, r.min_bound.lo);
    double child_hi = std::max(l.max_bound.hi, r.max_bound.hi);
    CHECK(child_hi - child_lo <= (parent.max_bound.hi - parent.min_bound.lo) * (1.0 + 1e-12));
  }
}

TEST_CASE("sign isolation") {
  const Rational tol(1, 1000000000);
  RationalPoly x({Rational(0), Rational(1)});
  SignIsolation iso = isolate_sign_changes(x, Rational(-1), Rational(1), tol);
  REQUIRE(iso.changes.size() == 1);
  CHECK(iso.changes[0].contains(0.0));
  CHECK(iso.unresolved.empty());

  RationalPoly x2p1({Rational(1), Rational(0), Rational(1)});
  SignIsolation none = isolate_sign_changes(x2p1, Rational(0), Rational(1), tol);
  CHECK(none.changes.empty());
  CHECK(none.unresolved.empty());
  CHECK(certified_sign(x2p1, Rational(0), Rational(1)) == 1);

  CHECK_THROWS_AS(isolate_sign_changes(RationalPoly(), Rational(0), Rational(1), tol),
                  std::domain_error);
}

TEST_CASE("sign isolation locates the energy-branch breakpoint") {
  // F0'' - 2 F0 + 1 changes sign once on [0, 5/2], at the partition point
  // 1.322040 (quoted to six digits)
  InnerQuasi q = blasius::build_inner_base();
  RationalPoly f = q.poly;
  RationalPoly sw = f.derivative().derivative() - f.scaled(Rational(2)) +
                    RationalPoly::constant(Rational(1));
  SignIsolation iso =
      isolate_sign_changes(sw, Rational(0), Rational(5, 2), Rational(1, 1000000000));
  REQUIRE(iso.changes.size() == 1);
  CHECK(iso.unresolved.empty());
  CHECK(iso.changes[0].lo >= 1.322040 - 1e-6);
  CHECK(iso.changes[0].hi <= 1.322040 + 1e-6);
}
