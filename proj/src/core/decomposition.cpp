#include "decomposition.hpp"

#include <algorithm>

#include "errors.hpp"

namespace orbitline {

std::vector<Rational> rational_roots_of_power(const Rational& x, unsigned long k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "zeroth roots are not defined");
  std::vector<Rational> out;
  if (x.is_zero()) {
    out.emplace_back(0);
    return out;
  }
  const bool even = (k % 2) == 0;
  if (even && x.sign() < 0) return out;

  mpz_class num = abs(x.num());
  mpz_class den = x.den();
  mpz_class rn, rd;
  // mpz_root returns nonzero iff the root is exact.
  bool exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) != 0;
  bool exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) != 0;
  if (!exact_n || !exact_d) return out;

  Rational r(rn, rd);
  if (even) {
    out.push_back(-r);
    out.push_back(r);
  } else {
    out.push_back(x.sign() < 0 ? -r : r);
  }
  return out;
}

std::optional<RigidityWitness> solve_rigidity(const Polynomial& A, const Polynomial& B,
                                              const Polynomial& C, const Polynomial& D) {
  if (A.degree() < 1 || B.degree() < 1 || C.degree() < 1 || D.degree() < 1) {
    fail(ErrorCode::PreconditionViolated, "all four polynomials must be nonconstant");
  }
  if (B.degree() != D.degree()) {
    fail(ErrorCode::PreconditionViolated, "inner degrees must match");
  }
  if (A.compose(B) != C.compose(D)) {
    fail(ErrorCode::PreconditionViolated, "compositions disagree");
  }

  const Rational alpha = B.leading() / D.leading();
  const Polynomial shift = B - D.scaled(alpha);
  if (shift.degree() > 0) return std::nullopt;
  LinearMap l(alpha, shift.coeff(0));

  if (B != l.as_polynomial().compose(D)) return std::nullopt;
  if (A != C.compose(l.inverse().as_polynomial())) return std::nullopt;
  return RigidityWitness{l};
}

std::vector<LinearPairSolution> solve_linear_pair(const Polynomial& F, const Polynomial& G) {
  const int d = F.degree();
  if (d != G.degree()) fail(ErrorCode::DegreeMismatch, "degrees must match");
  if (d < 2) fail(ErrorCode::DegreeTooLow, "degree must be at least 2");
  if (is_monomial_equivalent(F).equivalent || is_monomial_equivalent(G).equivalent) {
    fail(ErrorCode::MonomialEquivalentInput,
         "monomial-equivalent inputs admit infinite solution families");
  }

  const DepressedForm df = depress(F);
  const DepressedForm dg = depress(G);
  const Polynomial& U = df.normalized;
  const Polynomial& V = dg.normalized;

  // a∘F = G∘b transports to dX ∘ U = V ∘ gX on the depressed forms, i.e.
  // del * u_i = v_i * g^i for every i. Supports must coincide.
  std::vector<int> support;
  for (int i = 1; i <= d; ++i) {
    const bool in_u = !U.coeff(i).is_zero();
    const bool in_v = !V.coeff(i).is_zero();
    if (in_u != in_v) return {};
    if (in_u) support.push_back(i);
  }
  // Depressing a non-monomial-equivalent polynomial leaves >= 2 terms.
  if (support.size() < 2) {
    fail(ErrorCode::Internal, "depressed form lost its lower terms unexpectedly");
  }

  const int j = support[support.size() - 2];  // largest nonzero index below d
  const unsigned long m = static_cast<unsigned long>(d - j);
  const Rational target = (U.coeff(d) * V.coeff(j)) / (U.coeff(j) * V.coeff(d));

  std::vector<LinearPairSolution> out;
  for (const Rational& g : rational_roots_of_power(target, m)) {
    if (g.is_zero()) continue;
    const Rational del = (V.coeff(d) * g.pow(static_cast<unsigned long>(d))) / U.coeff(d);
    bool ok = true;
    for (int i : support) {
      if (del * U.coeff(i) != V.coeff(i) * g.pow(static_cast<unsigned long>(i))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    // Undo the depressions: with U = a1 + F(X + b1), V = a2 + G(X + b2),
    // dX∘U = V∘gX pulls back to a(Y) = del*Y + (del*a1 - a2) and
    // b(X) = g*X + (b2 - g*b1).
    LinearMap a(del, del * df.alpha - dg.alpha);
    LinearMap b(g, dg.beta - g * df.beta);
    if (a.as_polynomial().compose(F) != G.compose(b.as_polynomial())) {
      fail(ErrorCode::Internal, "linear pair failed composition re-verification");
    }
    out.push_back(LinearPairSolution{a, b, 0, 0});
  }

  std::sort(out.begin(), out.end(), [](const LinearPairSolution& x, const LinearPairSolution& y) {
    if (x.b.alpha != y.b.alpha) return x.b.alpha < y.b.alpha;
    return x.b.beta < y.b.beta;
  });
  return out;
}

bool verify_decomposition(const Polynomial& F, const Polynomial& G,
                          const DecompositionWitness& w) {
  const Polynomial inner_f = w.H.compose(w.a.as_polynomial());
  if (F != w.E.compose(inner_f)) return false;
  const Polynomial inner_g = w.c.as_polynomial().compose(w.H.compose(w.b.as_polynomial()));
  return G == w.E.compose(inner_g);
}

}  // namespace orbitline
