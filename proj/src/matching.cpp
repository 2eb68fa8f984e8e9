#include "blasius/matching.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace blasius {

namespace {

struct InnerAtMatch {
  Enclosure F, dF, ddF;
};

// exact inner values at x = 5/2, cached per alpha
InnerAtMatch inner_at_match(const Rational& alpha) {
  static std::map<std::string, InnerAtMatch> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = alpha.to_string();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  InnerQuasi q = build_inner(alpha);
  RationalPoly df = q.poly.derivative();
  RationalPoly ddf = df.derivative();
  const Rational x(5, 2);
  InnerAtMatch vals{Enclosure::from_rational(q.poly.eval(x)),
                    Enclosure::from_rational(df.eval(x)),
                    Enclosure::from_rational(ddf.eval(x))};
  memo.emplace(key, vals);
  return vals;
}

}  // namespace

NTriple apply_N(const Enclosure& a, const Enclosure& b, const Enclosure& c, const Rational& alpha) {
  if (a.lo <= 0.0) throw std::domain_error("apply_N: a must be positive");
  if (c.abs().hi >= 0.25) throw std::domain_error("apply_N: |c| must stay below 1/4");
  InnerAtMatch inner = inner_at_match(alpha);
  Enclosure tm = t_match(a, b);
  if (tm.lo < 1.96) throw std::domain_error("apply_N: t_m below 1.96");

  Q0Split split = q0_split(tm);
  Enclosure c2 = c.pow_int(2);
  Enclosure q0v = c * split.linear.q0 + c2 * split.quadratic.q0;
  Enclosure q0d = c * split.linear.d1 + c2 * split.quadratic.d1;
  Enclosure inv2t = (tm * 2.0).inv();

  Enclosure n1 = inner.dF - a * (q0d - q0v * inv2t);
  Enclosure n2 = inner.F - Enclosure(2.5) * n1 - (a * inv2t).sqrt() * q0v;

  // second-derivative matching: F0_outer'' = a sqrt(2 a t) (c D_A + c^2 D_B)
  Enclosure inv_t2 = (tm.pow_int(2) * 2.0).inv();
  Enclosure d_a = split.linear.d2 - split.linear.d1 * inv2t + split.linear.q0 * inv_t2;
  Enclosure d_b = split.quadratic.d2 - split.quadratic.d1 * inv2t + split.quadratic.q0 * inv_t2;
  Enclosure target = inner.ddF / (a * (a * tm * 2.0).sqrt());
  Enclosure n3 = (target - c2 * d_b) / d_a;
  return NTriple{n1, n2, n3};
}

Enclosure matching_residual_norm(const Enclosure& a, const Enclosure& b, const Enclosure& c,
                                 const Rational& alpha) {
  NTriple n = apply_N(a, b, c, alpha);
  Enclosure da = a - n.N1;
  Enclosure db = (b - n.N2) * 0.5;
  Enclosure dc = (c - n.N3) * 0.5;
  return (da.pow_int(2) + db.pow_int(2) + dc.pow_int(2)).sqrt();
}

MatchState match_fixed_point(const Rational& alpha, double tol, int max_iter, bool from_nominal) {
  RationalTriple t0 = initial_triple_exact(alpha);
  const Rational rho0 = alpha.is_zero() ? rho0_base() : rho0_general();
  double a0 = Enclosure::from_rational(t0.a).mid();
  double b0 = Enclosure::from_rational(t0.b).mid();
  double c0 = Enclosure::from_rational(t0.c).mid();
  (void)from_nominal;

  MatchState st;
  st.alpha = alpha;
  double a = a0, b = b0, c = c0;
  const double rho = Enclosure::from_rational(rho0).mid();
  for (int k = 0; k < max_iter; ++k) {
    NTriple n = apply_N(Enclosure(a), Enclosure(b), Enclosure(c), alpha);
    double na = n.N1.mid(), nb = n.N2.mid(), nc = n.N3.mid();
    double da = na - a, db = (nb - b) * 0.5, dc = (nc - c) * 0.5;
    double step = std::sqrt(da * da + db * db + dc * dc);
    st.step_norms.push_back(step);
    a = na;
    b = nb;
    c = nc;
    double ra = a - a0, rb = (b - b0) * 0.5, rc = (c - c0) * 0.5;
    if (std::sqrt(ra * ra + rb * rb + rc * rc) > rho) st.stayed_in_trust_region = false;
    ++st.iterations;
    if (step < tol) {
      st.converged = true;
      break;
    }
  }
  st.a = Enclosure(a);
  st.b = Enclosure(b);
  st.c = Enclosure(c);
  st.residual_norm = matching_residual_norm(st.a, st.b, st.c, alpha);
  return st;
}

JacobianEstimate jacobian_norm(const Enclosure& a, const Enclosure& b, const Enclosure& c,
                               const Rational& alpha, const Rational& step) {
  Enclosure h = Enclosure::from_rational(step);
  NTriple n0 = apply_N(a, b, c, alpha);
  auto diff = [&](int var) {
    Enclosure ap = a, am = a, bp = b, bm = b, cp = c, cm = c;
    if (var == 0) {
      ap = a + h;
      am = a - h;
    } else if (var == 1) {
      bp = b + h;
      bm = b - h;
    } else {
      cp = c + h;
      cm = c - h;
    }
    NTriple np = apply_N(ap, bp, cp, alpha);
    NTriple nm = apply_N(am, bm, cm, alpha);
    auto fd = [&](const Enclosure& plus, const Enclosure& minus, const Enclosure& center) {
      Enclosure d = (plus - minus) / (h * 2.0);
      Enclosure curv = (plus - center * 2.0 + minus) / (h * 2.0);
      double w = curv.abs().hi;
      return Enclosure(d.lo - w, d.hi + w);
    };
    return std::array<Enclosure, 3>{fd(np.N1, nm.N1, n0.N1), fd(np.N2, nm.N2, n0.N2),
                                    fd(np.N3, nm.N3, n0.N3)};
  };
  auto da = diff(0), db = diff(1), dc = diff(2);

  JacobianEstimate est;
  // weighted matrix for A = (a, b/2, c/2)
  est.entries[0] = {da[0], db[0] * 2.0, dc[0] * 2.0};
  est.entries[1] = {da[1] * 0.5, db[1], dc[1]};
  est.entries[2] = {da[2] * 0.5, db[2], dc[2]};
  est.norm2 = weighted_jacobian_norm(est.entries);
  return est;
}

Enclosure weighted_jacobian_norm(const std::array<std::array<Enclosure, 3>, 3>& weighted_entries) {
  Enclosure sum(0.0);
  for (const auto& row : weighted_entries)
    for (const auto& e : row) sum = sum + e.pow_int(2);
  return sum.sqrt();
}

ContractionCheck verify_contraction(const Rational& alpha, double kappa, const Rational& rho0) {
  ContractionCheck out;
  out.kappa = kappa;
  RationalTriple t0 = initial_triple_exact(alpha);
  out.ndiff_norm = matching_residual_norm(Enclosure::from_rational(t0.a),
                                          Enclosure::from_rational(t0.b),
                                          Enclosure::from_rational(t0.c), alpha);
  double rho = Enclosure::from_rational(rho0).lo;
  out.threshold = (1.0 - kappa) * rho;
  out.margin = out.threshold - out.ndiff_norm.hi;
  out.certified = kappa < 1.0 && out.margin > 0.0;
  return out;
}

WallStress wall_stress(const Enclosure& a) {
  if (a.lo <= 0.0) throw std::domain_error("wall_stress: a must be positive");
  Enclosure scaled = (a * a.sqrt()).inv();
  return WallStress{scaled, scaled / Enclosure(2.0).sqrt()};
}

std::vector<Rational> alpha_grid_13() {
  std::vector<Rational> out;
  for (int k = 0; k <= 12; ++k) out.push_back(Rational(-3, 50) + Rational(k, 100));
  return out;
}

}  // namespace blasius
