#include "blasius/rational.hpp"

#include <cmath>

namespace blasius {

Rational Rational::from_double(double d) {
  if (!std::isfinite(d)) throw std::domain_error("Rational::from_double: non-finite");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), d);  // exact
  return Rational(q);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num(s.substr(0, slash), 10);  // explicit base: no octal surprises
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) throw std::domain_error("Rational::parse: zero denominator");
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    return Rational(mpz_class(s, 10), mpz_class(1));
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  if (frac_len == 0) throw std::invalid_argument("Rational::parse: trailing dot");
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  return Rational(num, den);
}

Rational Rational::pow_int(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  return Rational(n, d);
}

std::string Rational::to_string() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += "/";
    s += v_.get_den().get_str();
  }
  return s;
}

}  // namespace blasius
