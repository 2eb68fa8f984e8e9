#include "blasius/quasi_solution.hpp"

#include <mutex>

#include "blasius/coeff_data.hpp"

namespace blasius {

Rational alpha_lo() { return Rational(-3, 50); }
Rational alpha_hi() { return Rational(3, 50); }
bool alpha_in_range(const Rational& alpha) { return alpha >= alpha_lo() && alpha <= alpha_hi(); }

InnerQuasi build_inner_base() {
  const auto& p = CoeffData::instance().inner_base;
  // F0 = x^2/2 + x^4 P(2x/5),  P(y) = sum_j 2/(5(j+2)(j+3)(j+4)) p_j y^j
  std::vector<Rational> c(17, Rational(0));
  c[2] = Rational(1, 2);
  const Rational two_fifths(2, 5);
  for (size_t j = 0; j < p.size(); ++j) {
    long jj = static_cast<long>(j);
    Rational scale = Rational(2) / (Rational(5) * Rational(jj + 2) * Rational(jj + 3) * Rational(jj + 4));
    c[4 + j] = scale * p[j] * two_fifths.pow_int(static_cast<unsigned>(j));
  }
  return InnerQuasi{RationalPoly(std::move(c)), Rational(0), false};
}

const BiRationalPoly& inner_family() {
  static BiRationalPoly fam = [] {
    const auto& m = CoeffData::instance().inner_family;
    // P(y; beta) = sum_{i,j} p_{i,j} / ((i+1)(i+2)(i+3)) beta^j y^i
    std::vector<std::vector<Rational>> c(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
      long ii = static_cast<long>(i);
      Rational scale = Rational(1) / (Rational(ii + 1) * Rational(ii + 2) * Rational(ii + 3));
      c[i].reserve(m[i].size());
      for (const auto& v : m[i]) c[i].push_back(v * scale);
    }
    BiRationalPoly p(std::move(c));
    // y -> 2x/5, then shift up by x^3, then beta -> 25 alpha / 3 + 1/2
    p = p.compose_affine_x(Rational(2, 5), Rational(0));
    BiRationalPoly x3({{Rational(0)}, {Rational(0)}, {Rational(0)}, {Rational(1)}});
    p = x3 * p;
    p = p.compose_affine_alpha(Rational(25, 3), Rational(1, 2));
    // + alpha + x^2/2
    BiRationalPoly rest({{Rational(0), Rational(1)}, {}, {Rational(1, 2)}});
    return p + rest;
  }();
  return fam;
}

InnerQuasi build_inner_general(const Rational& alpha) {
  if (!alpha_in_range(alpha))
    throw std::domain_error("build_inner_general: alpha outside [-3/50, 3/50]");
  return InnerQuasi{inner_family().eval_alpha(alpha), alpha, true};
}

InnerQuasi build_inner(const Rational& alpha) {
  if (alpha.is_zero()) return build_inner_base();
  return build_inner_general(alpha);
}

Rational rho0_base() { return Rational(1, 20000); }
Rational rho0_general() { return Rational(1, 2000); }

RationalTriple initial_triple_exact(const Rational& alpha) {
  if (alpha.is_zero())
    return RationalTriple{Rational(3221, 1946), Rational(-2763, 1765), Rational(377, 1613)};
  if (!alpha_in_range(alpha))
    throw std::domain_error("initial_triple: alpha outside [-3/50, 3/50]");
  Rational a2 = alpha * alpha;
  return RationalTriple{
      Rational(3221, 1946) - Rational(797, 603) * alpha + Rational(176, 289) * a2,
      Rational(-2763, 1765) + Rational(761, 284) * alpha - Rational(194, 237) * a2,
      Rational(377, 1613) + Rational(174, 1357) * alpha + Rational(937, 6822) * a2};
}

MatchTriple initial_triple(const Rational& alpha) {
  RationalTriple t = initial_triple_exact(alpha);
  return MatchTriple{Enclosure::from_rational(t.a), Enclosure::from_rational(t.b),
                     Enclosure::from_rational(t.c),
                     alpha.is_zero() ? rho0_base() : rho0_general()};
}

Enclosure stretched_t(const Enclosure& x, const Enclosure& a, const Enclosure& b) {
  Enclosure u = x + b / a;
  return a * 0.5 * u.pow_int(2);
}

Enclosure t_match(const Enclosure& a, const Enclosure& b) {
  return stretched_t(Enclosure(2.5), a, b);
}

namespace {

Rational tm_exact(const Rational& a, const Rational& b) {
  Rational u = Rational(5, 2) + b / a;
  return a / Rational(2) * u * u;
}

}  // namespace

TmRange tm_range_base() {
  RationalTriple t0 = initial_triple_exact(Rational(0));
  Rational r = rho0_base();
  Rational lo = tm_exact(t0.a - r, t0.b - Rational(2) * r);
  Rational hi = tm_exact(t0.a + r, t0.b + Rational(2) * r);
  return TmRange{Enclosure::from_rational(lo), Enclosure::from_rational(hi)};
}

TmRange tm_range_family() {
  // inf / sup over alpha of the lower / upper t_m corner values; the corner
  // functions are smooth rational functions of alpha, bounded by enclosure
  // evaluation on a fine subdivision of the alpha interval.
  const Rational r = rho0_general();
  auto corner = [&](const Rational& alpha, int side) {
    RationalTriple t0 = initial_triple_exact(alpha);
    return side < 0 ? tm_exact(t0.a - r, t0.b - Rational(2) * r)
                    : tm_exact(t0.a + r, t0.b + Rational(2) * r);
  };
  auto corner_enc = [&](const Enclosure& alpha, int side) {
    Enclosure a = Enclosure::from_rational(Rational(3221, 1946)) -
                  Enclosure::from_rational(Rational(797, 603)) * alpha +
                  Enclosure::from_rational(Rational(176, 289)) * alpha.pow_int(2);
    Enclosure b = Enclosure::from_rational(Rational(-2763, 1765)) +
                  Enclosure::from_rational(Rational(761, 284)) * alpha -
                  Enclosure::from_rational(Rational(194, 237)) * alpha.pow_int(2);
    Enclosure rr = Enclosure::from_rational(r);
    if (side < 0) {
      a = a - rr;
      b = b - rr * 2.0;
    } else {
      a = a + rr;
      b = b + rr * 2.0;
    }
    Enclosure u = Enclosure(2.5) + b / a;
    return a * 0.5 * u.pow_int(2);
  };

  // adaptive interval minimization: refine only cells that can still beat
  // the best point sample
  auto optimize = [&](int side, bool minimize) {
    Rational lo_a = alpha_lo(), hi_a = alpha_hi();
    double incumbent =
        minimize
            ? std::min(Enclosure::from_rational(corner(lo_a, side)).hi,
                       Enclosure::from_rational(corner(hi_a, side)).hi)
            : std::max(Enclosure::from_rational(corner(lo_a, side)).lo,
                       Enclosure::from_rational(corner(hi_a, side)).lo);
    double outer = minimize ? HUGE_VAL : -HUGE_VAL;
    struct Cell {
      Rational a0, a1;
      int depth;
    };
    std::vector<Cell> stack{{lo_a, hi_a, 0}};
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      Enclosure cell =
          Enclosure::hull(Enclosure::from_rational(c.a0), Enclosure::from_rational(c.a1));
      Enclosure v = corner_enc(cell, side);
      if (minimize) {
        if (v.lo >= incumbent) continue;  // cannot contain a smaller value
      } else {
        if (v.hi <= incumbent) continue;
      }
      if (c.depth >= 36 || v.width() < 1e-10) {
        if (minimize)
          outer = std::min(outer, v.lo);
        else
          outer = std::max(outer, v.hi);
        Rational mid = (c.a0 + c.a1) / Rational(2);
        double sample = minimize ? Enclosure::from_rational(corner(mid, side)).hi
                                 : Enclosure::from_rational(corner(mid, side)).lo;
        incumbent = minimize ? std::min(incumbent, sample) : std::max(incumbent, sample);
        continue;
      }
      Rational mid = (c.a0 + c.a1) / Rational(2);
      double sample = minimize ? Enclosure::from_rational(corner(mid, side)).hi
                               : Enclosure::from_rational(corner(mid, side)).lo;
      incumbent = minimize ? std::min(incumbent, sample) : std::max(incumbent, sample);
      stack.push_back({c.a0, mid, c.depth + 1});
      stack.push_back({mid, c.a1, c.depth + 1});
    }
    if (minimize) {
      if (outer == HUGE_VAL) outer = incumbent;  // every cell pruned: incumbent is sharp
      return Enclosure(outer, incumbent);
    }
    if (outer == -HUGE_VAL) outer = incumbent;
    return Enclosure(incumbent, outer);
  };
  return TmRange{optimize(-1, true), optimize(+1, false)};
}

OuterEval f0_outer_at_t(const Enclosure& t, const Enclosure& x, const Enclosure& a,
                        const Enclosure& b, const Enclosure& c) {
  if (t.lo < 1.96) throw std::domain_error("f0_outer: t below 1.96");
  Q0Derivs q = q0_derivs(t, c);
  Enclosure inv2t = (t * 2.0).inv();
  Enclosure F = a * x + b + (a * inv2t).sqrt() * q.q0;
  Enclosure dF = a + a * (q.d1 - q.q0 * inv2t);
  Enclosure ddF = a * (a * t * 2.0).sqrt() * (q.d2 - q.d1 * inv2t + q.q0 * (t.pow_int(2) * 2.0).inv());
  return OuterEval{t, F, dF, ddF};
}

OuterEval f0_outer(const Enclosure& x, const MatchTriple& triple) {
  Enclosure t = stretched_t(x, triple.a, triple.b);
  return f0_outer_at_t(t, x, triple.a, triple.b, triple.c);
}

}  // namespace blasius
