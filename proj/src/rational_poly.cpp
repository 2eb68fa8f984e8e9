#include "blasius/rational_poly.hpp"

#include <algorithm>

namespace blasius {

void RationalPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RationalPoly RationalPoly::monomial(unsigned deg, const Rational& v) {
  std::vector<Rational> c(deg + 1, Rational(0));
  c[deg] = v;
  return RationalPoly(std::move(c));
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Enclosure RationalPoly::eval(const Enclosure& x) const {
  Enclosure acc(0.0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Enclosure::from_rational(c_[i]);
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return RationalPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::antiderivative() const {
  if (c_.empty()) return RationalPoly();
  std::vector<Rational> a(c_.size() + 1, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k)
    a[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
  return RationalPoly(std::move(a));
}

Rational RationalPoly::definite_integral(const Rational& lo, const Rational& hi) const {
  RationalPoly a = antiderivative();
  return a.eval(hi) - a.eval(lo);
}

RationalPoly RationalPoly::compose_affine(const Rational& scale, const Rational& shift) const {
  if (scale.is_zero()) throw std::domain_error("compose_affine: zero scale");
  // Horner in the affine argument: result = ((c_n * u + c_{n-1}) * u + ...)
  // with u(tau) = shift + scale * tau.
  RationalPoly u({shift, scale});
  RationalPoly acc;
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * u;
    acc = acc + RationalPoly::constant(c_[i]);
  }
  return acc;
}

RationalPoly RationalPoly::scaled(const Rational& s) const {
  std::vector<Rational> c(c_);
  for (auto& v : c) v *= s;
  return RationalPoly(std::move(c));
}

Rational RationalPoly::l1_norm() const {
  Rational s(0);
  for (const auto& v : c_) s += v.abs();
  return s;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return RationalPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> c(c_);
  for (auto& v : c) v = -v;
  return RationalPoly(std::move(c));
}

namespace {

// Chebyshev-basis multiply by the variable: y*T_0 = T_1,
// y*T_k = (T_{k+1} + T_{k-1}) / 2.
std::vector<Rational> cheb_mul_y(const std::vector<Rational>& c) {
  if (c.empty()) return {};
  std::vector<Rational> d(c.size() + 1, Rational(0));
  const Rational half(1, 2);
  d[1] += c[0];
  for (size_t i = 1; i < c.size(); ++i) {
    d[i + 1] += c[i] * half;
    d[i - 1] += c[i] * half;
  }
  return d;
}

}  // namespace

std::vector<Rational> to_chebyshev(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::domain_error("to_chebyshev: degenerate interval");
  const Rational half = (hi - lo) / Rational(2);
  const Rational mid = (hi + lo) / Rational(2);
  RationalPoly q = p.compose_affine(half, mid);  // q(y) = p(x(y)), y in [-1,1]
  const auto& a = q.coeffs();
  if (a.empty()) return {};
  std::vector<Rational> cheb;  // Horner over the monomial coefficients
  for (size_t i = a.size(); i-- > 0;) {
    cheb = cheb_mul_y(cheb);
    if (cheb.empty()) cheb.assign(1, Rational(0));
    cheb[0] += a[i];
  }
  while (!cheb.empty() && cheb.back().is_zero()) cheb.pop_back();
  return cheb;
}

RationalPoly from_chebyshev(const std::vector<Rational>& cheb, const Rational& lo,
                            const Rational& hi) {
  if (!(lo < hi)) throw std::domain_error("from_chebyshev: degenerate interval");
  RationalPoly t_prev = RationalPoly::constant(Rational(1));
  RationalPoly t_cur({Rational(0), Rational(1)});
  RationalPoly acc;
  for (size_t k = 0; k < cheb.size(); ++k) {
    const RationalPoly& tk = (k == 0) ? t_prev : t_cur;
    acc = acc + tk.scaled(cheb[k]);
    if (k >= 1) {
      RationalPoly t_next = RationalPoly({Rational(0), Rational(2)}) * t_cur - t_prev;
      t_prev = t_cur;
      t_cur = t_next;
    }
  }
  // map back: y = (2x - lo - hi) / (hi - lo)
  const Rational scale = Rational(2) / (hi - lo);
  const Rational shift = -(hi + lo) / (hi - lo);
  return acc.compose_affine(scale, shift);
}

RangeBracket range_bound_cubic_tail(const RationalPoly& p, const Rational& cell_lo,
                                    const Rational& cell_hi) {
  if (!(cell_lo < cell_hi)) throw std::domain_error("range_bound_cubic_tail: degenerate cell");
  const Rational half = (cell_hi - cell_lo) / Rational(2);
  const Rational mid = (cell_hi + cell_lo) / Rational(2);
  RationalPoly q = p.compose_affine(half, mid);  // tau in [-1, 1]

  Rational tail(0);
  for (size_t k = 4; k < q.coeffs().size(); ++k) tail += q.coeff(k).abs();

  const Rational q0 = q.coeff(0), q1 = q.coeff(1), q2 = q.coeff(2), q3 = q.coeff(3);
  RationalPoly head({q0, q1, q2, q3});

  // candidate extrema: endpoints (exact) plus interior critical points
  std::vector<Enclosure> values;
  values.push_back(Enclosure::from_rational(head.eval(Rational(-1))));
  values.push_back(Enclosure::from_rational(head.eval(Rational(1))));

  auto consider = [&](const Enclosure& root) {
    double lo = std::max(root.lo, -1.0), hi = std::min(root.hi, 1.0);
    if (lo <= hi) values.push_back(head.eval(Enclosure(lo, hi)));
  };

  if (!q3.is_zero()) {
    // head' = 3 q3 tau^2 + 2 q2 tau + q1
    Rational disc = q2 * q2 - Rational(3) * q3 * q1;
    if (disc.sign() > 0) {
      Enclosure sq = Enclosure::from_rational(disc).sqrt();
      Enclosure den = Enclosure::from_rational(Rational(3) * q3);
      consider((Enclosure::from_rational(-q2) + sq) / den);
      consider((Enclosure::from_rational(-q2) - sq) / den);
    } else if (disc.is_zero()) {
      consider(Enclosure::from_rational(-q2 / (Rational(3) * q3)));
    }
  } else if (!q2.is_zero()) {
    Rational crit = -q1 / (Rational(2) * q2);
    if (crit >= Rational(-1) && crit <= Rational(1))
      values.push_back(Enclosure::from_rational(head.eval(crit)));
  }

  Enclosure head_min = values.front(), head_max = values.front();
  for (const auto& v : values) {
    head_min = emin(head_min, v);
    head_max = emax(head_max, v);
  }
  Enclosure tail_enc = Enclosure::from_rational(tail);
  return RangeBracket{head_min - tail_enc, head_max + tail_enc, tail};
}

std::optional<int> certified_sign(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  RangeBracket rb = range_bound_cubic_tail(p, lo, hi);
  if (rb.min_bound.lo > 0.0) return 1;
  if (rb.max_bound.hi < 0.0) return -1;
  return std::nullopt;
}

namespace {

void isolate_rec(const RationalPoly& p, const Rational& lo, const Rational& hi,
                 const Rational& tol, SignIsolation& out) {
  RangeBracket rb = range_bound_cubic_tail(p, lo, hi);
  if (rb.min_bound.lo > 0.0 || rb.max_bound.hi < 0.0) return;  // sign certified
  if (hi - lo <= tol) {
    int sl = p.eval(lo).sign();
    int sr = p.eval(hi).sign();
    Enclosure cell(Enclosure::from_rational(lo).lo, Enclosure::from_rational(hi).hi);
    if (sl == 0 || sr == 0 || sl != sr)
      out.changes.push_back(cell);
    else
      out.unresolved.push_back(cell);
    return;
  }
  Rational mid = (lo + hi) / Rational(2);
  isolate_rec(p, lo, mid, tol, out);
  isolate_rec(p, mid, hi, tol, out);
}

}  // namespace

SignIsolation isolate_sign_changes(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                   const Rational& tol) {
  if (p.is_zero()) throw std::domain_error("isolate_sign_changes: zero polynomial");
  if (tol.sign() <= 0) throw std::domain_error("isolate_sign_changes: nonpositive tolerance");
  SignIsolation out;
  isolate_rec(p, lo, hi, tol, out);
  // merge adjacent candidate cells that share an endpoint where p vanishes or
  // nearly does (a root sitting exactly on a bisection point)
  std::vector<Enclosure> merged;
  for (const auto& e : out.changes) {
    if (!merged.empty() && merged.back().hi >= e.lo)
      merged.back() = Enclosure::hull(merged.back(), e);
    else
      merged.push_back(e);
  }
  out.changes = std::move(merged);
  return out;
}

}  // namespace blasius
