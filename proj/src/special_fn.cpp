#include "blasius/special_fn.hpp"

#include <cmath>
#include <mutex>
#include <optional>

namespace blasius {

namespace {

// Alternating-tail bracket of the kernel integral at large T:
//   ifun(T) = (1/2) sum_{n>=0} (-1)^n (2n+1)!! / (2^n T^{n+1})
// with the remainder after N terms of the sign and at most the magnitude of
// term N (Lagrange form of the binomial remainder, the factor (1+xi)^{-3/2-N}
// lies in (0,1)).
Enclosure ifun_series(const Enclosure& t) {
  Enclosure sum(0.0);
  Enclosure term_mag;             // (2n+1)!! / (2^n t^{n+1}) / 2
  Enclosure inv_t = t.inv();
  term_mag = inv_t * 0.5;         // n = 0
  int n = 0;
  int sign = 1;
  while (true) {
    if (term_mag.hi < 1e-24 || n > 70) {
      Enclosure rem = sign > 0 ? Enclosure(0.0, term_mag.hi) : Enclosure(-term_mag.hi, 0.0);
      return sum + rem;
    }
    sum = sum + (sign > 0 ? term_mag : -term_mag);
    ++n;
    sign = -sign;
    term_mag = term_mag * static_cast<double>(2 * n + 1) * 0.5 * inv_t;
  }
}

// Horner evaluation of the truncated solution series through (t0, v). The
// recurrence cancels heavily, so the coefficients are computed in exact
// rational arithmetic (t0 and v are dyadic) and only the final Horner pass
// rounds.
Enclosure ifun_series_through(double t0, double v, const Enclosure& h, int N) {
  const Rational two_t0 = Rational(2) * Rational::from_double(t0);
  const Rational one(1), two(2);
  std::vector<Rational> a;
  a.reserve(N + 1);
  a.push_back(Rational::from_double(v));
  a.push_back(((two_t0 + one) * a[0] - one) / two_t0);
  for (int n = 1; n < N; ++n) {
    Rational num = (two_t0 + Rational(1 - 2 * n)) * a[n] + two * a[n - 1];
    a.push_back(num / (two_t0 * Rational(n + 1)));
  }
  Enclosure s(0.0);
  for (int n = N; n >= 0; --n) s = s * h + Enclosure::from_rational(a[n]);
  return s;
}

// One Taylor step of the ODE from t0 (point) to t (enclosure below t0),
// seeded with a0 = ifun(t0). The solution map in the initial value is affine
// with positive slope H(t)/H(t0) < 1, H = e^t sqrt(t) the homogeneous
// solution, so the endpoint solutions bracket the true value; the two series
// truncations are covered by
//   |ifun tail|            <= |h|^N / (2 t_min^{N+1})
//   |initial-width * Q tail| with Q(h) = e^h sqrt(1 + h/t0), bounded through
//   the convolution of the exp and binomial coefficient series.
Enclosure ifun_taylor_step(double t0, const Enclosure& a0, const Enclosure& t) {
  Enclosure h = t - Enclosure(t0);
  double h_mag = std::max(std::fabs(h.lo), std::fabs(h.hi));
  double t_min = std::min(t.lo, t0);
  if (t_min <= 0.0) throw std::domain_error("ifun: argument too small");
  if (h_mag / t_min > 0.4) throw std::domain_error("ifun: taylor step too long");

  int N = 12;
  double rem_tail = 0.0;
  for (; N <= 90; N += 6) {
    rem_tail = std::pow(h_mag, N) / std::pow(t_min, N + 1);
    if (rem_tail < 1e-21) break;
  }

  // tail of Q(h) after N terms: sum_k t0^{-k} * tail_{N-k} of exp, padded 4x
  double q_tail = 0.0;
  {
    double ratio_k = 1.0;
    for (int k = 0; k <= N; ++k) {
      int m = N - k;
      double lg = m * std::log(std::max(h_mag, 1e-300)) - std::lgamma(m + 1.0);
      q_tail += ratio_k * std::exp(std::min(lg, 700.0) + h_mag);
      ratio_k /= t0;
    }
    q_tail *= 4.0;
  }
  double rem = rem_tail + a0.width() * q_tail;

  Enclosure lo_run = ifun_series_through(t0, a0.lo, h, N);
  Enclosure hi_run = ifun_series_through(t0, a0.hi, h, N);
  return Enclosure(lo_run.lo - rem, hi_run.hi + rem);
}

// ladder of exact dyadic base points 50 * (3/4)^k spanning down to ~2.1
const std::vector<double>& ladder() {
  static const std::vector<double> pts = [] {
    std::vector<double> v;
    double x = 50.0;
    while (x > 2.0) {
      v.push_back(x);
      x *= 0.75;
    }
    return v;
  }();
  return pts;
}

const Enclosure& ladder_value(size_t k) {
  static std::vector<std::optional<Enclosure>> memo(ladder().size());
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  for (size_t i = 0; i <= k; ++i)
    if (!memo[i])
      memo[i] = (i == 0) ? ifun_series(Enclosure(ladder()[0]))
                         : ifun_taylor_step(ladder()[i - 1], *memo[i - 1],
                                            Enclosure(ladder()[i]));
  return *memo[k];
}

Enclosure ifun_point(const Enclosure& t) {
  if (t.lo >= 48.0) return ifun_series(t);
  const auto& pts = ladder();
  // last ladder point >= t.hi keeps the final step a contraction of ratio <= 1/3
  size_t k = 0;
  while (k + 1 < pts.size() && pts[k + 1] >= t.hi) ++k;
  return ifun_taylor_step(pts[k], ladder_value(k), t);
}

Enclosure ifun(const Enclosure& t) {
  if (t.lo < 1.89) throw std::domain_error("ifun: argument below working range");
  if (t.width() < 0.1) return ifun_point(t);
  // wide argument: the kernel integral is decreasing in t, so endpoint
  // evaluations bracket the range
  Enclosure left = ifun_point(Enclosure(t.lo));
  Enclosure right = ifun_point(Enclosure(t.hi));
  return Enclosure(std::min(right.lo, left.lo), std::max(left.hi, right.hi));
}

}  // namespace

Enclosure I0(const Enclosure& t) {
  if (t.lo < 1.9) throw std::domain_error("I0: domain requires t >= 1.9");
  return ifun(t);
}

Enclosure J0(const Enclosure& t) {
  if (t.lo < 1.9) throw std::domain_error("J0: domain requires t >= 1.9");
  return ifun(t * 2.0);
}

Enclosure moment(int k, MomentBase base, const Enclosure& t) {
  if (k < 0 || k > 6) throw std::domain_error("moment: order out of range");
  if (t.lo < 1.9) throw std::domain_error("moment: domain requires t >= 1.9");
  // u_i = int (1 + b s)^{i-3/2} e^{-st} ds obeys u_{i+1} = (b(i-1/2) u_i + 1)/t
  const bool half = base == MomentBase::Half;
  std::vector<Enclosure> u;
  u.push_back(half ? ifun(t * 2.0) * 4.0 : ifun(t) * 2.0);
  for (int i = 0; i < k; ++i) {
    Enclosure bi = Enclosure(i - 0.5) * (half ? 0.5 : 1.0);
    u.push_back((bi * u[i] + 1.0) / t);
  }
  // s^k = b^{-k} sum_i C(k,i) (-1)^{k-i} (1+bs)^i
  Enclosure sum(0.0);
  double binom = 1.0;
  for (int i = 0; i <= k; ++i) {
    if (i > 0) binom = binom * (k - i + 1) / i;
    double sgn = ((k - i) % 2 == 0) ? 1.0 : -1.0;
    sum = sum + Enclosure(sgn * binom) * u[i];
  }
  if (half)
    for (int i = 0; i < k; ++i) sum = sum * 2.0;
  return sum;
}

namespace detail {

TermSet add(const TermSet& a, const TermSet& b) {
  TermSet out = a;
  for (const auto& [k, v] : b) {
    auto it = out.find(k);
    if (it == out.end())
      out.emplace(k, v);
    else {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

TermSet scale(const TermSet& s, const Rational& coef, int th_shift) {
  TermSet out;
  if (coef.is_zero()) return out;
  for (const auto& [k, v] : s) {
    FarKey nk = k;
    nk.th += th_shift;
    out.emplace(nk, v * coef);
  }
  return out;
}

TermSet mul(const TermSet& a, const TermSet& b) {
  TermSet out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      FarKey k{ka.cpow + kb.cpow, ka.th + kb.th, ka.em + kb.em, ka.ip + kb.ip, ka.jp + kb.jp};
      auto it = out.find(k);
      if (it == out.end())
        out.emplace(k, va * vb);
      else {
        it->second += va * vb;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

TermSet q0_terms() {
  TermSet s;
  s[{1, 1, 1, 1, 0}] = Rational(2);    // 2 c sqrt(t) e^{-t} I0
  s[{2, 0, 2, 0, 1}] = Rational(2);    // 2 c^2 e^{-2t} J0
  s[{2, 0, 2, 1, 0}] = Rational(-1);   // -c^2 e^{-2t} I0
  s[{2, 0, 2, 2, 0}] = Rational(-1);   // -c^2 e^{-2t} I0^2
  return s;
}

TermSet d_dt(const TermSet& s) {
  // I0' = (1 + 1/(2t)) I0 - 1/(2t);  J0' = (2 + 1/(2t)) J0 - 1/(2t)
  TermSet out;
  auto acc = [&out](const FarKey& k, const Rational& v) {
    if (v.is_zero()) return;
    auto it = out.find(k);
    if (it == out.end())
      out.emplace(k, v);
    else {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  const Rational half(1, 2);
  for (const auto& [k, v] : s) {
    if (k.th != 0) acc({k.cpow, k.th - 2, k.em, k.ip, k.jp}, v * Rational(k.th) * half);
    if (k.em != 0) acc({k.cpow, k.th, k.em, k.ip, k.jp}, v * Rational(-k.em));
    if (k.ip != 0) {
      Rational iv = v * Rational(k.ip);
      acc({k.cpow, k.th, k.em, k.ip, k.jp}, iv);
      acc({k.cpow, k.th - 2, k.em, k.ip, k.jp}, iv * half);
      acc({k.cpow, k.th - 2, k.em, k.ip - 1, k.jp}, -iv * half);
    }
    if (k.jp != 0) {
      Rational jv = v * Rational(k.jp);
      acc({k.cpow, k.th, k.em, k.ip, k.jp}, jv * Rational(2));
      acc({k.cpow, k.th - 2, k.em, k.ip, k.jp}, jv * half);
      acc({k.cpow, k.th - 2, k.em, k.ip, k.jp - 1}, -jv * half);
    }
  }
  return out;
}

Enclosure eval(const TermSet& s, const Enclosure& t, const Enclosure& c) {
  Enclosure i0 = ifun(t);
  Enclosure j0 = ifun(t * 2.0);
  Enclosure rt = t.sqrt();
  Enclosure total(0.0);
  for (const auto& [k, v] : s) {
    Enclosure term = Enclosure::from_rational(v);
    if (k.cpow != 0) term = term * c.pow_int(k.cpow);
    int th = k.th;
    if (th != 0) {
      int whole = th / 2;
      int rem = th - 2 * whole;  // -1, 0, or 1
      if (whole != 0) term = term * t.pow_int(whole);
      if (rem == 1) term = term * rt;
      if (rem == -1) term = term / rt;
    }
    if (k.em != 0) term = term * (Enclosure(-static_cast<double>(k.em)) * t).exp();
    if (k.ip != 0) term = term * i0.pow_int(k.ip);
    if (k.jp != 0) term = term * j0.pow_int(k.jp);
    total = total + term;
  }
  return total;
}

}  // namespace detail

namespace {

struct Q0Symbolic {
  detail::TermSet q, d1, d2, d3, residual;
};

const Q0Symbolic& q0_symbolic() {
  static const Q0Symbolic sym = [] {
    using namespace detail;
    Q0Symbolic s;
    s.q = q0_terms();
    s.d1 = d_dt(s.q);
    s.d2 = d_dt(s.d1);
    s.d3 = d_dt(s.d2);
    // defect of the third-order far-field equation:
    //   q''' + (1 + q/(2t)) q'' + (-1/(2t) + 3/(4t^2) - q/(4t^2)) q'
    //   + (1/(2t^2) - 3/(4t^3)) q + q^2/(4t^3)
    const Rational half(1, 2), quarter(1, 4), three_q(3, 4);
    TermSet r = s.d3;
    r = add(r, s.d2);
    r = add(r, scale(mul(s.q, s.d2), half, -2));
    r = add(r, scale(s.d1, -half, -2));
    r = add(r, scale(s.d1, three_q, -4));
    r = add(r, scale(mul(s.q, s.d1), -quarter, -4));
    r = add(r, scale(s.q, half, -4));
    r = add(r, scale(s.q, -three_q, -6));
    r = add(r, scale(mul(s.q, s.q), quarter, -6));
    s.residual = r;
    return s;
  }();
  return sym;
}

void check_q0_domain(const Enclosure& t, const Enclosure& c) {
  if (t.lo < 1.96) throw std::domain_error("q0: domain requires t >= 1.96");
  if (c.abs().hi >= 0.25) throw std::domain_error("q0: domain requires |c| < 1/4");
}

}  // namespace

Q0Derivs q0_derivs(const Enclosure& t, const Enclosure& c) {
  check_q0_domain(t, c);
  const auto& sym = q0_symbolic();
  return Q0Derivs{detail::eval(sym.q, t, c), detail::eval(sym.d1, t, c),
                  detail::eval(sym.d2, t, c), detail::eval(sym.d3, t, c)};
}

Enclosure q0(const Enclosure& t, const Enclosure& c) {
  check_q0_domain(t, c);
  return detail::eval(q0_symbolic().q, t, c);
}

Q0Split q0_split(const Enclosure& t) {
  if (t.lo < 1.96) throw std::domain_error("q0_split: domain requires t >= 1.96");
  const auto& sym = q0_symbolic();
  auto part = [&](int cpow) {
    using namespace detail;
    auto pick = [cpow](const TermSet& s) {
      TermSet out;
      for (const auto& [k, v] : s)
        if (k.cpow == cpow) {
          FarKey nk = k;
          nk.cpow = 0;
          out.emplace(nk, v);
        }
      return out;
    };
    Enclosure one(1.0);
    return Q0Derivs{eval(pick(sym.q), t, one), eval(pick(sym.d1), t, one),
                    eval(pick(sym.d2), t, one), eval(pick(sym.d3), t, one)};
  };
  return Q0Split{part(1), part(2)};
}

FarResidual far_residual(const Enclosure& t, const Enclosure& c) {
  if (t.lo < 1.96) throw std::domain_error("far_residual: domain requires t >= 1.96");
  if (c.abs().hi > 0.25) throw std::domain_error("far_residual: domain requires |c| <= 1/4");
  Enclosure value = detail::eval(q0_symbolic().residual, t, c);
  Enclosure norm = value * t.pow_int(1) * t.sqrt() * (t * 3.0).exp();
  return FarResidual{t, value, norm};
}

}  // namespace blasius
