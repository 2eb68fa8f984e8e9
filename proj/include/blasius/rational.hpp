#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace blasius {

// Exact rational number, always normalized: gcd(num, den) = 1, den > 0.
// Thin value wrapper over GMP's canonical mpq_class; every coefficient of the
// inner pipeline lives here so that residual and Chebyshev bounds are exact
// rational inequalities rather than floating-point estimates.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Exact conversion: every finite double is a dyadic rational.
  static Rational from_double(double d);

  // Accepts "num/den", plain integers, and decimal literals ("-0.0625",
  // "1.322040"); all parsed exactly.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational pow_int(unsigned e) const;

  // Round-to-nearest-ish approximation; use Enclosure::from_rational for a
  // certified bracket.
  double to_double() const { return v_.get_d(); }

  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a > b ? a : b; }

}  // namespace blasius
