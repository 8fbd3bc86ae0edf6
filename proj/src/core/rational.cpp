#include "rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "errors.hpp"

namespace orbitline {

namespace {

bool is_valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
  canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
  v_ = mpq_class(n) / mpq_class(d);
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_valid_integer_token(num) || !is_valid_integer_token(den)) {
    fail(ErrorCode::ParseError, "invalid rational literal: \"" + std::string(text) + "\"");
  }
  if (num.front() == '+') num.remove_prefix(1);  // mpz_set_str takes '-' but not '+'
  if (den.front() == '+') den.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    fail(ErrorCode::ParseError, "zero denominator in rational literal: \"" + std::string(text) + "\"");
  }
  return Rational(n, d);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "inverse of zero");
  return Rational(1) / *this;
}

Rational Rational::pow(unsigned long e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  // num/den coprime => powers coprime; den > 0 preserved.
  mpq_class out;
  out.get_num() = n;
  out.get_den() = d;
  return Rational::from_canonical(out);
}

std::size_t Rational::digit_size() const {
  return mpz_sizeinbase(v_.get_num().get_mpz_t(), 10) +
         mpz_sizeinbase(v_.get_den().get_mpz_t(), 10);
}

std::size_t Rational::hash() const {
  // FNV-1a over the limbs of num and den.
  auto mix = [](std::size_t h, const mpz_class& z) {
    const mp_limb_t* limbs = mpz_limbs_read(z.get_mpz_t());
    mp_size_t n = mpz_size(z.get_mpz_t());
    h ^= static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) + 0x9e3779b97f4a7c15ULL;
    for (mp_size_t i = 0; i < n; ++i) {
      h ^= static_cast<std::size_t>(limbs[i]);
      h *= 0x100000001b3ULL;
    }
    return h;
  };
  std::size_t h = 0xcbf29ce484222325ULL;
  h = mix(h, v_.get_num());
  h = mix(h, v_.get_den());
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

double log_abs(const mpz_class& z) {
  if (z == 0) fail(ErrorCode::InvalidArgument, "log of zero");
  long exp2 = 0;
  double m = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(exp2) * M_LN2;
}

}  // namespace orbitline
