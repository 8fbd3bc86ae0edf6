#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace orbitline {

// Dense univariate polynomial over the rationals, coefficients ascending by
// degree with trailing zeros trimmed. The zero polynomial has no coefficients
// and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Rational c);
  static Polynomial identity();  // X
  static Polynomial monomial(int degree, Rational lead = Rational(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  // True iff exactly one nonzero coefficient, at the given degree when >= 0.
  bool is_monomial() const;

  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial derivative() const;

  // Exact evaluation. Uses an all-integer Horner pass and canonicalizes the
  // result with at most two small gcds when the leading coefficient allows;
  // falls back to generic rational arithmetic otherwise.
  Rational evaluate(const Rational& x) const;

  // this(inner(X)).
  Polynomial compose(const Polynomial& inner) const;

  // Human-readable, e.g. "3/2*X^2 - 1/1*X + 4/1".
  std::string str() const;

  std::size_t hash() const;
  std::size_t digit_size() const;

 private:
  std::vector<Rational> coeffs_;
};

// X -> alpha*X + beta with alpha != 0.
struct LinearMap {
  Rational alpha{1};
  Rational beta{0};

  LinearMap() = default;
  LinearMap(Rational a, Rational b);

  Rational apply(const Rational& x) const { return alpha * x + beta; }
  LinearMap inverse() const;                       // (X - beta)/alpha
  LinearMap after(const LinearMap& first) const;   // this ∘ first
  Polynomial as_polynomial() const;

  bool is_identity() const { return alpha == Rational(1) && beta.is_zero(); }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
  friend bool operator!=(const LinearMap& a, const LinearMap& b) {
    return !(a == b);
  }
};

Polynomial compose(const Polynomial& outer, const Polynomial& inner);
Polynomial conjugate(const Polynomial& p, const LinearMap& l);  // l ∘ p ∘ l⁻¹

// N(X) = alpha + P(X + beta), chosen so N has zero constant term and zero
// degree-(d-1) term; equivalently P(X) = N(X - beta) - alpha. Requires
// deg P >= 2.
struct DepressedForm {
  Rational alpha;
  Rational beta;
  Polynomial normalized;  // N
};

DepressedForm depress(const Polynomial& p);

// Witness that u ∘ P ∘ v = X^d for linear u, v, when P is linearly
// equivalent to a monomial.
struct MonomialEquivalence {
  bool equivalent = false;
  std::optional<LinearMap> u;
  std::optional<LinearMap> v;
};

// Tests whether P = u⁻¹ ∘ X^d ∘ v⁻¹ for some linear maps by checking that
// P' has a single root of multiplicity d-1; on success produces exact
// witnesses and verifies them by composition. Requires deg P >= 2.
MonomialEquivalence is_monomial_equivalent(const Polynomial& p);

// Monic gcd over the rationals (Euclid with per-step normalization).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Exact quotient; fails unless b divides a.
Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b);

struct PolynomialHash {
  std::size_t operator()(const Polynomial& p) const { return p.hash(); }
};

}  // namespace orbitline
