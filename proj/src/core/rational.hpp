#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orbitline {

// Arbitrary-precision rational, always held in lowest terms with a positive
// denominator (mpq_class canonical form).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(const mpq_class& v) : v_(v) { canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d);

  // Accepts "p", "p/q", optional leading '-' on either part, arbitrary size.
  static Rational parse(std::string_view text);

  // Always "num/den", canonical, e.g. "-3/2", "5/1", "0/1".
  std::string str() const;

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return mpz_class(v_.get_num()); }
  mpz_class den() const { return mpz_class(v_.get_den()); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational::from_canonical(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const;
  Rational abs() const { return Rational::from_canonical(::abs(v_)); }
  Rational pow(unsigned long e) const;

  double to_double() const { return v_.get_d(); }

  // Decimal digit count of num plus den; used for size budgets.
  std::size_t digit_size() const;

  std::size_t hash() const;

  // Trusted constructor for values already in canonical form (results of
  // mpq arithmetic on canonical operands).
  static Rational from_canonical(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);
    return r;
  }

 private:
  void canonicalize() { v_.canonicalize(); }

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// log(|z|) for z != 0, accurate for arbitrary magnitude.
double log_abs(const mpz_class& z);

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return r.hash(); }
};

}  // namespace orbitline
