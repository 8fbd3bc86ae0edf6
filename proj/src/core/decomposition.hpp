#pragma once

#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace orbitline {

// Linking map for matched-degree decompositions: A = C∘l⁻¹ and B = l∘D.
struct RigidityWitness {
  LinearMap l;
};

// One rational solution of a∘F = G∘b for linear a, b; i and j carry the
// generator indices when the polynomials came out of a system (0 otherwise).
struct LinearPairSolution {
  LinearMap a;
  LinearMap b;
  int i = 0;
  int j = 0;
};

// Shared-composite shape: F = E∘H∘a and G = E∘c∘H∘b.
struct DecompositionWitness {
  Polynomial E;
  Polynomial H;
  LinearMap a;
  LinearMap b;
  LinearMap c;
};

// Given A∘B = C∘D with deg B = deg D (all nonconstant), produce the linear l
// with A = C∘l⁻¹ and B = l∘D, or nothing when no rational l exists. The
// candidate is pinned by leading coefficients (l.alpha = lc(B)/lc(D)) and
// the constancy of B - alpha*D; both identities are then verified exactly.
std::optional<RigidityWitness> solve_rigidity(const Polynomial& A, const Polynomial& B,
                                              const Polynomial& C, const Polynomial& D);

// All rational linear pairs (a, b) with a∘F = G∘b, for F, G of equal degree
// d >= 2, neither linearly equivalent to a monomial. Works on the depressed
// forms: a surviving pair forces scale maps (dX, gX) there, with g solving
// g^(d-j) = u_d v_j / (u_j v_d) over the common support; each rational root
// candidate is cross-checked on every coefficient and the recovered (a, b)
// re-verified by exact composition. Results sorted by (b.alpha, b.beta).
std::vector<LinearPairSolution> solve_linear_pair(const Polynomial& F, const Polynomial& G);

// True iff F = E∘H∘a and G = E∘c∘H∘b hold exactly.
bool verify_decomposition(const Polynomial& F, const Polynomial& G,
                          const DecompositionWitness& w);

// Exact rational k-th roots: all r with r^k = x (zero, one, or two values,
// sorted ascending).
std::vector<Rational> rational_roots_of_power(const Rational& x, unsigned long k);

}  // namespace orbitline
