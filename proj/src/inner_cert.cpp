#include "blasius/inner_cert.hpp"

#include <algorithm>
#include <cmath>

namespace blasius {

RationalPoly residual_poly(const InnerQuasi& inner) {
  RationalPoly d2 = inner.poly.derivative().derivative();
  RationalPoly d3 = d2.derivative();
  return d3 + inner.poly * d2;
}

BiRationalPoly residual_family(const BiRationalPoly& f0) {
  BiRationalPoly d2 = f0.derivative_x().derivative_x();
  BiRationalPoly d3 = d2.derivative_x();
  return d3 + f0 * d2;
}

Rational x_c() { return Rational(1322040, 1000000); }

const std::vector<Rational>& base_partition() {
  static const std::vector<Rational> pts = [] {
    std::vector<Rational> v;
    v.push_back(Rational(0));
    for (const char* s : {"0.0625", "0.125", "0.25", "0.375", "0.50", "0.75", "1.0"})
      v.push_back(Rational::parse(s));
    v.push_back(x_c());
    for (const char* s : {"1.5", "1.75", "2.0", "2.25", "2.40"})
      v.push_back(Rational::parse(s));
    v.push_back(Rational(5, 2));
    return v;
  }();
  return pts;
}

const std::vector<Rational>& base_energy_cells() {
  static const std::vector<Rational> pts = {Rational(0), x_c(), Rational(2), Rational(5, 2)};
  return pts;
}

const std::vector<Rational>& family_cells() {
  static const std::vector<Rational> pts = {Rational(0), Rational(5, 4), Rational(7, 5),
                                            Rational(2), Rational(5, 2)};
  return pts;
}

std::vector<RegionBracket> brackets_on_partition(const RationalPoly& p,
                                                 const std::vector<Rational>& partition) {
  std::vector<RegionBracket> out;
  for (size_t j = 0; j + 1 < partition.size(); ++j) {
    RangeBracket rb = range_bound_cubic_tail(p, partition[j], partition[j + 1]);
    out.push_back(RegionBracket{partition[j], partition[j + 1], rb.min_bound, rb.max_bound});
  }
  return out;
}

RegionBracket aggregate_brackets(const std::vector<RegionBracket>& cells, const Rational& xlo,
                                 const Rational& xhi) {
  bool any = false;
  Enclosure lo, hi;
  for (const auto& c : cells) {
    if (c.xlo >= xhi || c.xhi <= xlo) continue;
    if (!any) {
      lo = c.lo;
      hi = c.hi;
      any = true;
    } else {
      lo = emin(lo, c.lo);
      hi = emax(hi, c.hi);
    }
  }
  if (!any) throw std::domain_error("aggregate_brackets: no cells in region");
  return RegionBracket{xlo, xhi, lo, hi};
}

Enclosure bracket_abs_sup(const RegionBracket& b) {
  return emax(b.hi.abs(), b.lo.abs());
}

Rational chebyshev_l1_bound(const RationalPoly& p, const Rational& xlo, const Rational& xhi) {
  Rational sum(0);
  for (const auto& a : to_chebyshev(p, xlo, xhi)) sum += a.abs();
  return sum;
}

CoefficientBrackets certify_coefficients(const InnerQuasi& inner) {
  RationalPoly f = inner.poly;
  RationalPoly df = f.derivative();
  RationalPoly ddf = df.derivative();
  const Rational eighth(1, 8);
  const Rational end(5, 2);
  // reuse the residual partition so the wall cells stay small
  const auto& part = base_partition();
  auto brackets = [&](const RationalPoly& p, const Rational& lo, const Rational& hi) {
    std::vector<Rational> cells;
    for (const auto& x : part)
      if (x >= lo && x <= hi) cells.push_back(x);
    if (cells.empty() || cells.front() != lo) cells.insert(cells.begin(), lo);
    if (cells.back() != hi) cells.push_back(hi);
    return aggregate_brackets(brackets_on_partition(p, cells), lo, hi);
  };
  return CoefficientBrackets{
      brackets(f, Rational(0), eighth),   brackets(f, eighth, end),
      brackets(df, Rational(0), eighth),  brackets(df, eighth, end),
      brackets(ddf, Rational(0), eighth), brackets(ddf, eighth, end)};
}

namespace {

// integral over [xl, xr] of max(pos_branch, neg_branch) where
// switch = pos_branch - neg_branch; exact on certified-sign segments, hulled
// on the isolation enclosures.
struct BranchIntegral {
  Enclosure value;
  bool ambiguity_fallback = false;
};

BranchIntegral integrate_branch_max(const RationalPoly& pos_branch, const RationalPoly& neg_branch,
                                    const RationalPoly& switch_fn, const Rational& xl,
                                    const Rational& xr) {
  BranchIntegral out;
  out.value = Enclosure(0.0);
  SignIsolation iso = isolate_sign_changes(switch_fn, xl, xr, Rational(1, 1000000000));
  if (!iso.unresolved.empty()) out.ambiguity_fallback = true;

  std::vector<std::pair<Rational, Rational>> zones;
  auto add_zone = [&](const Enclosure& e) {
    Rational lo = max(xl, Rational::from_double(e.lo));
    Rational hi = min(xr, Rational::from_double(e.hi));
    if (lo < hi) zones.push_back({lo, hi});
  };
  for (const auto& e : iso.changes) add_zone(e);
  for (const auto& e : iso.unresolved) add_zone(e);
  std::sort(zones.begin(), zones.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Rational cursor = xl;
  auto integrate_segment = [&](const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) return;
    Rational mid = (lo + hi) / Rational(2);
    bool positive = switch_fn.eval(mid).sign() > 0;
    const RationalPoly& branch = positive ? pos_branch : neg_branch;
    out.value = out.value + Enclosure::from_rational(branch.definite_integral(lo, hi));
  };
  for (const auto& [zone_lo, zone_hi] : zones) {
    Rational zlo = max(zone_lo, cursor);  // zones never overlap in practice
    Rational zhi = zone_hi;
    if (!(zlo < zhi)) continue;
    integrate_segment(cursor, zlo);
    // ambiguity zone: hull of both branch ranges
    RangeBracket r1 = range_bound_cubic_tail(pos_branch, zlo, zhi);
    RangeBracket r2 = range_bound_cubic_tail(neg_branch, zlo, zhi);
    Enclosure lo_end(std::max(r1.min_bound.lo, r2.min_bound.lo));
    Enclosure hi_end(std::max(r1.max_bound.hi, r2.max_bound.hi));
    Enclosure width = Enclosure::from_rational(zhi - zlo);
    out.value = out.value + width * Enclosure::hull(lo_end, hi_end);
    cursor = zhi;
  }
  integrate_segment(cursor, xr);
  return out;
}

RationalPoly w_pow4_over4(const Rational& xl) {
  // (y - xl)^4 / 4
  RationalPoly w({-xl, Rational(1)});
  return (w * w * w * w).scaled(Rational(1, 4));
}

}  // namespace

EnergyBounds energy_bounds(const InnerQuasi& inner, const Rational& xl, const Rational& xr) {
  if (!(Rational(0) <= xl && xl < xr && xr <= Rational(5, 2)))
    throw std::domain_error("energy_bounds: cell outside [0, 5/2]");
  RationalPoly f = inner.poly;
  RationalPoly df = f.derivative();
  RationalPoly ddf = df.derivative();
  RationalPoly w4 = w_pow4_over4(xl);
  const Rational two(2);

  // branch polynomials and switch functions
  RationalPoly q1_pos = ddf * (RationalPoly::constant(two) + w4) - f.scaled(two);
  RationalPoly q2_pos = ddf * (RationalPoly::constant(Rational(1)) + w4) - f.scaled(two);
  RationalPoly q_pos = ddf - f.scaled(two) + RationalPoly::constant(Rational(1)) + ddf * w4;
  RationalPoly shared_neg = ddf * w4;
  RationalPoly s1 = ddf.scaled(two) - f.scaled(two);
  RationalPoly s2 = ddf - f.scaled(two);
  RationalPoly s3 = ddf - f.scaled(two) + RationalPoly::constant(Rational(1));

  BranchIntegral iq1 = integrate_branch_max(q1_pos, shared_neg, s1, xl, xr);
  BranchIntegral iq2 = integrate_branch_max(q2_pos, shared_neg, s2, xl, xr);
  BranchIntegral iq = integrate_branch_max(q_pos, shared_neg, s3, xl, xr);

  Enclosure exp_q1 = (iq1.value * 0.5).exp();
  Enclosure exp_q2 = (iq2.value * 0.5).exp();
  Enclosure exp_q = (iq.value * 0.5).exp();

  Rational df_jump = df.eval(xr) - df.eval(xl);
  RationalPoly w2 = RationalPoly({-xl, Rational(1)}) * RationalPoly({-xl, Rational(1)});
  Rational m2_pref = (w2 * ddf).definite_integral(xl, xr);

  EnergyBounds out;
  out.xl = xl;
  out.xr = xr;
  out.M1 = Enclosure::from_rational(df_jump).sqrt() * exp_q1;
  out.M2 = Enclosure::from_rational(m2_pref).sqrt() * exp_q1;
  out.M3 = exp_q2;
  out.M = Enclosure::from_rational(xr - xl).sqrt() * exp_q;
  out.branch_ambiguity_fallback =
      iq1.ambiguity_fallback || iq2.ambiguity_fallback || iq.ambiguity_fallback;
  return out;
}

namespace {

// Polynomial on a fixed alpha cell, recentered: p(y; am + u) = mid(y) +
// sum_j devs[j-1](y) u^j for |u| <= r. Range queries combine the 1D
// cubic-tail bracket of mid with the deviation budget, which keeps wide
// x-cells from inflating the enclosure.
struct AlphaCellPoly {
  RationalPoly mid;
  std::vector<RationalPoly> devs;
  Rational r;

  static AlphaCellPoly make(const BiRationalPoly& p, const Rational& a0, const Rational& a1) {
    AlphaCellPoly out;
    out.r = (a1 - a0) / Rational(2);
    Rational am = (a1 + a0) / Rational(2);
    BiRationalPoly shifted = p.compose_affine_alpha(Rational(1), am);
    int dj = shifted.degree_alpha();
    std::vector<std::vector<Rational>> cols(dj + 1);
    for (int i = 0; i <= shifted.degree_x(); ++i)
      for (int j = 0; j <= dj; ++j) {
        Rational c = shifted.coeff(i, j);
        if (j >= static_cast<int>(cols.size())) cols.resize(j + 1);
        cols[j].resize(std::max(cols[j].size(), static_cast<size_t>(i + 1)), Rational(0));
        cols[j][i] = c;
      }
    out.mid = RationalPoly(cols.empty() ? std::vector<Rational>{} : cols[0]);
    for (size_t j = 1; j < cols.size(); ++j) out.devs.emplace_back(std::move(cols[j]));
    return out;
  }

  // deviation budget: sum_j r^j max |devs_j| over [ylo, yhi]
  double dev_budget(const Rational& ylo, const Rational& yhi) const {
    double dev = 0.0;
    Rational rp = r;
    for (const auto& d : devs) {
      if (!d.is_zero()) {
        RangeBracket db = range_bound_cubic_tail(d, ylo, yhi);
        double mag = std::max(std::fabs(db.min_bound.lo), std::fabs(db.max_bound.hi));
        dev += mag * Enclosure::from_rational(rp).hi;
      }
      rp = rp * r;
    }
    return std::nextafter(dev * (1.0 + 1e-12), HUGE_VAL);
  }

  Enclosure range(const Rational& ylo, const Rational& yhi) const {
    return range_with_dev(ylo, yhi, dev_budget(ylo, yhi));
  }

  Enclosure range_with_dev(const Rational& ylo, const Rational& yhi, double dev) const {
    RangeBracket rb = range_bound_cubic_tail(mid, ylo, yhi);
    return Enclosure(rb.min_bound.lo - dev, rb.max_bound.hi + dev);
  }

  // exact integral over [ylo, yhi] as a function of u, evaluated over the cell
  Enclosure integral(const Rational& ylo, const Rational& yhi) const {
    Enclosure u(-Enclosure::from_rational(r).hi, Enclosure::from_rational(r).hi);
    Enclosure acc = Enclosure::from_rational(mid.definite_integral(ylo, yhi));
    Enclosure up(1.0);
    for (const auto& d : devs) {
      up = up * u;
      if (!d.is_zero()) acc = acc + Enclosure::from_rational(d.definite_integral(ylo, yhi)) * up;
    }
    return acc;
  }
};

struct FamilyBranchIntegral {
  Enclosure value;
  bool fallback = false;
};

// sw_dev is the switch deviation budget over the whole cell, computed once
void family_integrate_rec(const AlphaCellPoly& pos, const AlphaCellPoly& neg,
                          const AlphaCellPoly& sw, double sw_dev, const Rational& ylo,
                          const Rational& yhi, FamilyBranchIntegral& out, int depth) {
  Enclosure s = sw.range_with_dev(ylo, yhi, sw_dev);
  if (s.lo > 0.0 || s.hi < 0.0) {
    const AlphaCellPoly& branch = s.lo > 0.0 ? pos : neg;
    out.value = out.value + branch.integral(ylo, yhi);
    return;
  }
  if (depth >= 16 || (yhi - ylo) < Rational(1, 4096)) {
    Enclosure p = pos.range(ylo, yhi);
    Enclosure n = neg.range(ylo, yhi);
    Enclosure hull(std::max(p.lo, n.lo), std::max(p.hi, n.hi));
    out.value = out.value + Enclosure::from_rational(yhi - ylo) * hull;
    if ((yhi - ylo) > Rational(1, 256)) out.fallback = true;
    return;
  }
  Rational mid = (ylo + yhi) / Rational(2);
  family_integrate_rec(pos, neg, sw, sw_dev, ylo, mid, out, depth + 1);
  family_integrate_rec(pos, neg, sw, sw_dev, mid, yhi, out, depth + 1);
}

void family_integrate(const AlphaCellPoly& pos, const AlphaCellPoly& neg, const AlphaCellPoly& sw,
                      const Rational& ylo, const Rational& yhi, FamilyBranchIntegral& out) {
  family_integrate_rec(pos, neg, sw, sw.dev_budget(ylo, yhi), ylo, yhi, out, 0);
}

}  // namespace

EnergyBounds energy_bounds_family(const Rational& xl, const Rational& xr, int alpha_cells) {
  const BiRationalPoly& f = inner_family();
  static const BiRationalPoly df = f.derivative_x();
  static const BiRationalPoly ddf = df.derivative_x();
  BiRationalPoly w4 = BiRationalPoly::from_x_poly(w_pow4_over4(xl));
  const Rational two(2);

  BiRationalPoly q1_pos = ddf * (BiRationalPoly::constant(two) + w4) - f * BiRationalPoly::constant(two);
  BiRationalPoly q2_pos = ddf * (BiRationalPoly::constant(Rational(1)) + w4) - f * BiRationalPoly::constant(two);
  BiRationalPoly q_pos = ddf - f * BiRationalPoly::constant(two) + BiRationalPoly::constant(Rational(1)) + ddf * w4;
  BiRationalPoly shared_neg = ddf * w4;
  BiRationalPoly s1 = (ddf - f) * BiRationalPoly::constant(two);
  BiRationalPoly s2 = ddf - f * BiRationalPoly::constant(two);
  BiRationalPoly s3 = s2 + BiRationalPoly::constant(Rational(1));

  RationalPoly df_xr = df.eval_x(xr);  // alpha-polynomials
  RationalPoly df_xl = df.eval_x(xl);
  RationalPoly m1_pref = df_xr - df_xl;
  BiRationalPoly w2 = BiRationalPoly::from_x_poly(RationalPoly({-xl, Rational(1)}) *
                                                  RationalPoly({-xl, Rational(1)}));
  RationalPoly m2_pref = (w2 * ddf).definite_integral_x(xl, xr);

  Rational alo = alpha_lo(), ahi = alpha_hi();
  Rational astep = (ahi - alo) / Rational(alpha_cells);
  EnergyBounds out;
  out.xl = xl;
  out.xr = xr;
  bool first = true;
  for (int i = 0; i < alpha_cells; ++i) {
    Rational a0 = alo + astep * Rational(i);
    Rational a1 = (i == alpha_cells - 1) ? ahi : alo + astep * Rational(i + 1);

    AlphaCellPoly q1p = AlphaCellPoly::make(q1_pos, a0, a1);
    AlphaCellPoly q2p = AlphaCellPoly::make(q2_pos, a0, a1);
    AlphaCellPoly qp = AlphaCellPoly::make(q_pos, a0, a1);
    AlphaCellPoly neg = AlphaCellPoly::make(shared_neg, a0, a1);
    AlphaCellPoly s1p = AlphaCellPoly::make(s1, a0, a1);
    AlphaCellPoly s2p = AlphaCellPoly::make(s2, a0, a1);
    AlphaCellPoly s3p = AlphaCellPoly::make(s3, a0, a1);

    FamilyBranchIntegral iq1, iq2, iq;
    iq1.value = Enclosure(0.0);
    iq2.value = Enclosure(0.0);
    iq.value = Enclosure(0.0);
    family_integrate(q1p, neg, s1p, xl, xr, iq1);
    family_integrate(q2p, neg, s2p, xl, xr, iq2);
    family_integrate(qp, neg, s3p, xl, xr, iq);

    Rational am = (a0 + a1) / Rational(2);
    Rational rr = (a1 - a0) / Rational(2);
    Enclosure u(-Enclosure::from_rational(rr).hi, Enclosure::from_rational(rr).hi);
    Enclosure exp_q1 = (iq1.value * 0.5).exp();
    Enclosure m1 = m1_pref.compose_affine(Rational(1), am).eval(u).sqrt() * exp_q1;
    Enclosure m2 = m2_pref.compose_affine(Rational(1), am).eval(u).sqrt() * exp_q1;
    Enclosure m3 = (iq2.value * 0.5).exp();
    Enclosure m = Enclosure::from_rational(xr - xl).sqrt() * (iq.value * 0.5).exp();
    if (first) {
      out.M1 = m1;
      out.M2 = m2;
      out.M3 = m3;
      out.M = m;
      first = false;
    } else {
      out.M1 = emax(out.M1, m1);
      out.M2 = emax(out.M2, m2);
      out.M3 = emax(out.M3, m3);
      out.M = emax(out.M, m);
    }
    out.branch_ambiguity_fallback |= iq1.fallback || iq2.fallback || iq.fallback;
  }
  return out;
}

ErrorBallCert certify_error_ball(const EnergyBounds& energy, const Enclosure& residual_sup,
                                 const IncomingData& incoming,
                                 const std::vector<double>& eps_hints) {
  ErrorBallCert cert;
  cert.xl = energy.xl;
  cert.xr = energy.xr;
  Enclosure L = Enclosure::from_rational(energy.xr - energy.xl);
  cert.B0 = energy.M1 * incoming.E + energy.M2 * incoming.E1 + energy.M3 * incoming.E2 +
            energy.M * residual_sup;

  auto try_eps = [&](double eps) -> bool {
    if (eps <= 0.0) return false;
    Enclosure e(eps);
    Enclosure ebar = incoming.E + L * incoming.E1 + L.pow_int(2) * 0.5 * e;  // ||E|| inside the ball
    double self_map = (cert.B0 + energy.M * ebar * e).hi;
    double contraction = (energy.M * (ebar + L.pow_int(2) * 0.5 * e)).hi;
    return self_map <= eps && contraction < 1.0;
  };

  double found = 0.0;
  for (double eps : eps_hints)
    if (try_eps(eps)) {
      found = eps;
      break;
    }
  if (found == 0.0) {
    for (double eps = 1e-7; eps < 1e-2; eps *= 2.0)
      if (try_eps(eps)) {
        found = eps;
        break;
      }
  }
  if (found == 0.0) return cert;  // certification failure

  // shrink toward the minimal certifiable radius
  double lo = 0.0, hi = found;
  for (int i = 0; i < 80; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (try_eps(mid))
      hi = mid;
    else
      lo = mid;
  }
  cert.eps = hi;
  cert.certified = true;

  Enclosure e(cert.eps);
  Enclosure ebar = incoming.E + L * incoming.E1 + L.pow_int(2) * 0.5 * e;
  Enclosure e2 = cert.B0 + energy.M * ebar * e;  // fixed point satisfies E'' = N[E'']
  cert.E2_bound = Enclosure(0.0, std::min(e2.hi, cert.eps));
  cert.E1_bound = Enclosure(0.0, (incoming.E1 + L * cert.E2_bound).hi);
  cert.E_bound = Enclosure(0.0, (incoming.E + L * incoming.E1 + L.pow_int(2) * 0.5 * cert.E2_bound).hi);
  cert.contraction_factor = (energy.M * (ebar + L.pow_int(2) * 0.5 * e)).hi;
  return cert;
}

InnerCertification run_error_chain(const std::vector<EnergyBounds>& energies,
                                   const std::vector<Enclosure>& residual_sups,
                                   const std::vector<std::vector<double>>& eps_hints) {
  if (energies.size() != residual_sups.size())
    throw std::invalid_argument("run_error_chain: size mismatch");
  InnerCertification out;
  IncomingData in{Enclosure(0.0), Enclosure(0.0), Enclosure(0.0)};
  out.certified = true;
  out.E_sup = Enclosure(0.0);
  out.E1_sup = Enclosure(0.0);
  out.E2_sup = Enclosure(0.0);
  for (size_t i = 0; i < energies.size(); ++i) {
    std::vector<double> hints = i < eps_hints.size() ? eps_hints[i] : std::vector<double>{};
    ErrorBallCert cert = certify_error_ball(energies[i], residual_sups[i], in, hints);
    out.cells.push_back(cert);
    if (!cert.certified) {
      out.certified = false;
      break;
    }
    out.E_sup = emax(out.E_sup, cert.E_bound);
    out.E1_sup = emax(out.E1_sup, cert.E1_bound);
    out.E2_sup = emax(out.E2_sup, cert.E2_bound);
    // certified endpoint values feed the next cell, worst case
    in = IncomingData{Enclosure(0.0, cert.E_bound.hi), Enclosure(0.0, cert.E1_bound.hi),
                      Enclosure(0.0, cert.E2_bound.hi)};
  }
  return out;
}

}  // namespace blasius
