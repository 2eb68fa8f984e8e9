#include "blasius/birational_poly.hpp"

#include <algorithm>

namespace blasius {

void BiRationalPoly::trim() {
  for (auto& row : c_)
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BiRationalPoly BiRationalPoly::from_x_poly(const RationalPoly& p) {
  std::vector<std::vector<Rational>> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back({v});
  return BiRationalPoly(std::move(c));
}

BiRationalPoly BiRationalPoly::constant(const Rational& v) {
  return BiRationalPoly({{v}});
}

int BiRationalPoly::degree_alpha() const {
  int d = -1;
  for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Rational BiRationalPoly::coeff(size_t i, size_t j) const {
  if (i >= c_.size() || j >= c_[i].size()) return Rational(0);
  return c_[i][j];
}

Rational BiRationalPoly::eval(const Rational& x, const Rational& alpha) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    Rational row(0);
    for (size_t j = c_[i].size(); j-- > 0;) row = row * alpha + c_[i][j];
    acc = acc * x + row;
  }
  return acc;
}

Enclosure BiRationalPoly::eval(const Enclosure& x, const Enclosure& alpha) const {
  Enclosure acc(0.0);
  for (size_t i = c_.size(); i-- > 0;) {
    Enclosure row(0.0);
    for (size_t j = c_[i].size(); j-- > 0;)
      row = row * alpha + Enclosure::from_rational(c_[i][j]);
    acc = acc * x + row;
  }
  return acc;
}

RationalPoly BiRationalPoly::eval_alpha(const Rational& alpha) const {
  std::vector<Rational> out(c_.size(), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    Rational row(0);
    for (size_t j = c_[i].size(); j-- > 0;) row = row * alpha + c_[i][j];
    out[i] = row;
  }
  return RationalPoly(std::move(out));
}

RationalPoly BiRationalPoly::eval_x(const Rational& x) const {
  std::vector<Rational> out;
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < c_[i].size(); ++j) {
      if (j >= out.size()) out.resize(j + 1, Rational(0));
      out[j] += c_[i][j] * x.pow_int(static_cast<unsigned>(i));
    }
  return RationalPoly(std::move(out));
}

BiRationalPoly BiRationalPoly::derivative_x() const {
  if (c_.size() <= 1) return BiRationalPoly();
  std::vector<std::vector<Rational>> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) {
    d[i - 1] = c_[i];
    for (auto& v : d[i - 1]) v *= Rational(static_cast<long>(i));
  }
  return BiRationalPoly(std::move(d));
}

BiRationalPoly BiRationalPoly::antiderivative_x() const {
  if (c_.empty()) return BiRationalPoly();
  std::vector<std::vector<Rational>> a(c_.size() + 1);
  a[0] = {};
  for (size_t i = 0; i < c_.size(); ++i) {
    a[i + 1] = c_[i];
    for (auto& v : a[i + 1]) v /= Rational(static_cast<long>(i + 1));
  }
  return BiRationalPoly(std::move(a));
}

RationalPoly BiRationalPoly::definite_integral_x(const Rational& xlo, const Rational& xhi) const {
  BiRationalPoly a = antiderivative_x();
  return a.eval_x(xhi) - a.eval_x(xlo);
}

BiRationalPoly BiRationalPoly::compose_affine_x(const Rational& scale, const Rational& shift) const {
  if (scale.is_zero()) throw std::domain_error("compose_affine_x: zero scale");
  BiRationalPoly u({{shift}, {scale}});
  BiRationalPoly acc;
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * u;
    BiRationalPoly row({c_[i]});
    acc = acc + row;
  }
  return acc;
}

BiRationalPoly BiRationalPoly::compose_affine_alpha(const Rational& scale, const Rational& shift) const {
  if (scale.is_zero()) throw std::domain_error("compose_affine_alpha: zero scale");
  // apply the univariate substitution row-wise
  size_t rows = c_.size();
  std::vector<std::vector<Rational>> out(rows);
  for (size_t i = 0; i < rows; ++i) {
    RationalPoly row(std::vector<Rational>(c_[i]));
    out[i] = row.compose_affine(scale, shift).coeffs();
  }
  return BiRationalPoly(std::move(out));
}

BiRationalPoly operator+(const BiRationalPoly& a, const BiRationalPoly& b) {
  std::vector<std::vector<Rational>> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    size_t na = i < a.c_.size() ? a.c_[i].size() : 0;
    size_t nb = i < b.c_.size() ? b.c_[i].size() : 0;
    c[i].assign(std::max(na, nb), Rational(0));
    for (size_t j = 0; j < na; ++j) c[i][j] += a.c_[i][j];
    for (size_t j = 0; j < nb; ++j) c[i][j] += b.c_[i][j];
  }
  return BiRationalPoly(std::move(c));
}

BiRationalPoly operator-(const BiRationalPoly& a, const BiRationalPoly& b) {
  return a + (-b);
}

BiRationalPoly BiRationalPoly::operator-() const {
  std::vector<std::vector<Rational>> c(c_);
  for (auto& row : c)
    for (auto& v : row) v = -v;
  return BiRationalPoly(std::move(c));
}

BiRationalPoly operator*(const BiRationalPoly& a, const BiRationalPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return BiRationalPoly();
  size_t rows = a.c_.size() + b.c_.size() - 1;
  std::vector<std::vector<Rational>> c(rows);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t k = 0; k < b.c_.size(); ++k) {
      if (a.c_[i].empty() || b.c_[k].empty()) continue;
      auto& dst = c[i + k];
      size_t need = a.c_[i].size() + b.c_[k].size() - 1;
      if (dst.size() < need) dst.resize(need, Rational(0));
      for (size_t j = 0; j < a.c_[i].size(); ++j)
        for (size_t l = 0; l < b.c_[k].size(); ++l)
          dst[j + l] += a.c_[i][j] * b.c_[k][l];
    }
  return BiRationalPoly(std::move(c));
}

namespace {

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

Rational chebyshev2d_l1(const BiRationalPoly& p, const Rational& xlo, const Rational& xhi,
                        const Rational& alo, const Rational& ahi) {
  if (!(xlo < xhi) || !(alo < ahi)) throw std::domain_error("chebyshev2d_l1: degenerate rect");
  BiRationalPoly q = p.compose_affine_x((xhi - xlo) / Rational(2), (xhi + xlo) / Rational(2))
                         .compose_affine_alpha((ahi - alo) / Rational(2), (ahi + alo) / Rational(2));
  // x-direction monomial -> Chebyshev, coefficients are alpha-polynomials
  std::vector<std::vector<Rational>> rows = q.coeffs().empty()
                                                ? std::vector<std::vector<Rational>>{}
                                                : q.coeffs();
  std::vector<std::vector<Rational>> chebx;  // chebx[k] = alpha-poly coeff of T_k(x)
  for (size_t i = rows.size(); i-- > 0;) {
    // multiply the Chebyshev-x expansion by x
    if (!chebx.empty()) {
      std::vector<std::vector<Rational>> next(chebx.size() + 1);
      const Rational half(1, 2);
      next[1] = chebx[0];
      for (size_t k = 1; k < chebx.size(); ++k) {
        auto add_scaled = [&](std::vector<Rational>& dst, const std::vector<Rational>& src) {
          if (dst.size() < src.size()) dst.resize(src.size(), Rational(0));
          for (size_t j = 0; j < src.size(); ++j) dst[j] += src[j] * half;
        };
        add_scaled(next[k + 1], chebx[k]);
        add_scaled(next[k - 1], chebx[k]);
      }
      chebx = std::move(next);
    }
    if (chebx.empty()) chebx.assign(1, {});
    // add the alpha-poly row
    if (chebx[0].size() < rows[i].size()) chebx[0].resize(rows[i].size(), Rational(0));
    for (size_t j = 0; j < rows[i].size(); ++j) chebx[0][j] += rows[i][j];
  }
  // alpha-direction per x-Chebyshev row, then sum |A_{k,j}|
  Rational total(0);
  for (auto& row : chebx) {
    std::vector<Rational> cheba;
    for (size_t j = row.size(); j-- > 0;) {
      cheba = cheb_mul_y(cheba);
      if (cheba.empty()) cheba.assign(1, Rational(0));
      cheba[0] += row[j];
    }
    for (const auto& v : cheba) total += v.abs();
  }
  return total;
}

}  // namespace blasius
