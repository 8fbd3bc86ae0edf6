#include "polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "errors.hpp"

namespace orbitline {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Division with remainder over the rationals; b must be nonzero.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial::zero(), a};
  std::vector<Rational> rem(a.coeffs());
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational lead_inv = b.leading().inverse();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + b.degree())] * lead_inv;
    if (q.is_zero()) continue;
    quot[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= b.degree(); ++i) {
      rem[static_cast<std::size_t>(k + i)] -= q * b.coeff(i);
    }
  }
  Polynomial r(std::move(rem));
  return {Polynomial(std::move(quot)), std::move(r)};
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

Polynomial Polynomial::constant(Rational c) {
  std::vector<Rational> v;
  if (!c.is_zero()) v.push_back(std::move(c));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::identity() {
  return Polynomial({Rational(0), Rational(1)});
}

Polynomial Polynomial::monomial(int degree, Rational lead) {
  if (degree < 0) fail(ErrorCode::InvalidArgument, "monomial with negative degree");
  if (lead.is_zero()) return zero();
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = std::move(lead);
  return Polynomial(std::move(v));
}

bool Polynomial::is_monomial() const {
  if (is_zero()) return false;
  for (int i = 0; i < degree(); ++i) {
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) return false;
  }
  return true;
}

const Rational& Polynomial::coeff(int i) const {
  static const Rational kZero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(-c);
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return zero();
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& x : coeffs_) v.push_back(x * c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return zero();
  std::vector<Rational> v;
  v.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    v.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  }
  return Polynomial(std::move(v));
}

Rational Polynomial::evaluate(const Rational& x) const {
  if (is_zero()) return Rational(0);
  const int d = degree();
  if (d == 0) return coeffs_[0];

  const mpz_class p = x.num();
  const mpz_class q = x.den();

  // L = lcm of coefficient denominators; A_i = L * c_i are integers.
  mpz_class L = 1;
  for (const auto& c : coeffs_) {
    if (!c.is_integer()) {
      mpz_class den = c.den();
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), den.get_mpz_t());
    }
  }

  if (L == 1 && q == 1) {
    // Integer coefficients at an integer point: plain Horner, no reduction.
    mpz_class n = coeffs_[static_cast<std::size_t>(d)].num();
    for (int i = d - 1; i >= 0; --i) {
      n *= p;
      n += coeffs_[static_cast<std::size_t>(i)].num();
    }
    mpq_class out;
    out.get_num() = n;
    out.get_den() = 1;
    return Rational::from_canonical(std::move(out));
  }

  std::vector<mpz_class> A(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    A[static_cast<std::size_t>(i)] = c.num() * (L / c.den());
  }

  // N = sum_i A_i p^i q^(d-i), D = L q^d.
  mpz_class n = A[static_cast<std::size_t>(d)];
  mpz_class qpow = 1;
  for (int i = d - 1; i >= 0; --i) {
    qpow *= q;
    n *= p;
    n += A[static_cast<std::size_t>(i)] * qpow;
  }
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  den *= L;

  // gcd(p, q) = 1 gives N ≡ A_d p^d (mod q). When gcd(A_d, q) = 1 and
  // gcd(L, q) = 1 the whole reduction is gcd(N, L), which stays small.
  mpz_class g1, g2;
  mpz_gcd(g1.get_mpz_t(), A[static_cast<std::size_t>(d)].get_mpz_t(), q.get_mpz_t());
  mpz_gcd(g2.get_mpz_t(), L.get_mpz_t(), q.get_mpz_t());
  if (g1 == 1 && g2 == 1) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), L.get_mpz_t());
    if (g != 1) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
    mpq_class out;
    out.get_num() = n;
    out.get_den() = den;
    return Rational::from_canonical(std::move(out));
  }

  mpq_class out;
  out.get_num() = n;
  out.get_den() = den;
  out.canonicalize();
  return Rational::from_canonical(std::move(out));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  if (is_zero()) return zero();
  Polynomial acc = Polynomial::constant(coeffs_.back());
  for (int i = degree() - 1; i >= 0; --i) {
    acc = acc * inner + Polynomial::constant(coeffs_[static_cast<std::size_t>(i)]);
  }
  return acc;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
    } else if (c.sign() < 0) {
      os << "-";
    }
    first = false;
    os << c.abs().str();
    if (i == 1) {
      os << "*X";
    } else if (i > 1) {
      os << "*X^" << i;
    }
  }
  return os.str();
}

std::size_t Polynomial::hash() const {
  std::size_t h = 0x811c9dc5u ^ coeffs_.size();
  for (const auto& c : coeffs_) {
    h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t Polynomial::digit_size() const {
  std::size_t s = 0;
  for (const auto& c : coeffs_) s += c.digit_size();
  return s;
}

LinearMap::LinearMap(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.is_zero()) fail(ErrorCode::NotInvertible, "linear map with zero slope");
}

LinearMap LinearMap::inverse() const {
  Rational ai = alpha.inverse();
  return LinearMap(ai, -(beta * ai));
}

LinearMap LinearMap::after(const LinearMap& first) const {
  return LinearMap(alpha * first.alpha, alpha * first.beta + beta);
}

Polynomial LinearMap::as_polynomial() const {
  return Polynomial({beta, alpha});
}

Polynomial compose(const Polynomial& outer, const Polynomial& inner) {
  return outer.compose(inner);
}

Polynomial conjugate(const Polynomial& p, const LinearMap& l) {
  return l.as_polynomial().compose(p.compose(l.inverse().as_polynomial()));
}

DepressedForm depress(const Polynomial& p) {
  const int d = p.degree();
  if (d < 2) fail(ErrorCode::DegreeTooLow, "depressed form needs degree >= 2");
  Rational beta = -(p.coeff(d - 1) / (Rational(static_cast<long>(d)) * p.leading()));
  Polynomial shifted = p.compose(LinearMap(Rational(1), beta).as_polynomial());
  Rational alpha = -shifted.coeff(0);
  Polynomial normalized = shifted + Polynomial::constant(alpha);
  return DepressedForm{std::move(alpha), std::move(beta), std::move(normalized)};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) return Polynomial::zero();
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    (void)q;
    a = std::move(b);
    // Keeping the running remainder monic controls coefficient growth.
    b = r.is_zero() ? Polynomial::zero() : r.scaled(r.leading().inverse());
  }
  return a.scaled(a.leading().inverse());
}

Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) fail(ErrorCode::InvalidArgument, "inexact polynomial division");
  return q;
}

MonomialEquivalence is_monomial_equivalent(const Polynomial& p) {
  const int d = p.degree();
  if (d < 2) fail(ErrorCode::DegreeTooLow, "monomial equivalence needs degree >= 2");

  // P is linearly equivalent to X^d exactly when P' has one root of
  // multiplicity d-1, i.e. P' = lead(P') (X - g)^(d-1) for rational g.
  if (d > 2) {
    Polynomial dp = p.derivative();
    Polynomial g = poly_gcd(dp, dp.derivative());
    if (g.degree() != d - 2) return {};
    Polynomial lf = poly_div_exact(dp, g);
    if (lf.degree() != 1) return {};
    Rational root = -(lf.coeff(0) / lf.coeff(1));
    Polynomial factor({-root, Rational(1)});
    Polynomial power = Polynomial::constant(Rational(1));
    for (int i = 0; i < d - 1; ++i) power = power * factor;
    if (power.scaled(dp.leading()) != dp) return {};
  }

  DepressedForm df = depress(p);
  if (!df.normalized.is_monomial() || df.normalized.degree() != d) {
    return {};
  }
  Rational c = df.normalized.leading();
  // N = alpha + P(X + beta) = c X^d, so ((Y + alpha)/c) ∘ P ∘ (X + beta) = X^d.
  LinearMap u(c.inverse(), df.alpha / c);
  LinearMap v(Rational(1), df.beta);
  Polynomial check = u.as_polynomial().compose(p.compose(v.as_polynomial()));
  if (check != Polynomial::monomial(d)) {
    fail(ErrorCode::Internal, "monomial equivalence witness failed verification");
  }
  return {true, u, v};
}

}  // namespace orbitline
