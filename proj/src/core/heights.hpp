#pragma once

#include <gmpxx.h>

#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"
#include "system.hpp"
#include "words.hpp"

namespace orbitline {

// h(p/q) = log max(|p|, q) for p/q in lowest terms; the exact integers are
// kept so the log can be recomputed at any precision.
struct HeightValue {
  double value = 0.0;
  mpz_class num_abs;
  mpz_class den;
};

HeightValue naive_height(const Rational& x);
double naive_height_value(const Rational& x);

// Sound deviation constant: |h(P(x)) - deg(P) * h(x)| <= C for all rational
// x. Upper side: h(P(x)) <= d h(x) + sum_i h(a_i) + log(d+1). Lower side uses
// (a) den(P(p/q)) >= (q / |L a_d|)^d, valid for every prime via the
// ultrametric inequality, and (b) |P(x)| >= |a_d| |x|^d / 2 once
// |x| >= 2R with R = 1 + max_{i<d} |a_i / a_d|, combined across the bands
// |x| < 1, 1 <= |x| < T, |x| >= T for T = 2R + 2/|a_d|. The result is
// comfortably sound rather than tight.
double map_height_constant(const Polynomial& p);

// Sound c with |h(l(x)) - h(x)| <= c for all x: both l and its inverse move
// heights by at most h(alpha) + h(beta) + log 2.
double linear_shift_constant(const LinearMap& l);

struct HeightEstimate {
  double estimate = 0.0;
  double error_bound = 0.0;
  int depth = 0;
  mpz_class degree_product;     // divisor used at the reported depth
  bool preperiodic = false;     // orbit closed; estimate is exactly 0
  bool depth_capped = false;    // target_error unreachable within max_depth
};

// tails[n] = sum_{k>n} C_k / D_k for the chain picked out by the sequence,
// where C_k is the deviation constant of the k-th map and D_k the degree
// product through step k; bounds |h(x_n)/D_n - limit| at every depth
// n <= horizon. Computed term by term with a rigorous geometric cap on the
// truncated remainder.
std::vector<double> chain_error_tails(const SemigroupSystem& sys, int coordinate,
                                      const SequenceSpec& seq, int horizon);

// Limit height along the composition chain picked out by an eventually
// periodic sequence of generator indices: estimate at depth n is
// h(x_n) / (d_1 ... d_n), with x_n the chain point. The reported error bound
// is sum_{k>n} C_k / D_k, accumulated term by term with a rigorous geometric
// cap on the remainder. Detecting a repeated (point, cycle phase) pair proves
// the chain is eventually periodic, pinning the value to exactly 0.
HeightEstimate canonical_height_sequence(const SemigroupSystem& sys, int coordinate,
                                         const SequenceSpec& seq, const Rational& x0,
                                         double target_error, int max_depth);

// Height attached to the whole generator set acting on one coordinate: the
// unique H with sum_j H(g_j(x)) = K * H(x), K = sum_j deg g_j. Estimated by
// averaging naive heights over all length-n compositions; the error bound
// contracts by s/K per level (s = generator count, K > s enforced). If the
// reachable point set closes up, the value is exactly 0.
HeightEstimate canonical_height_eigensystem(const SemigroupSystem& sys, int coordinate,
                                            const Rational& x0, int depth,
                                            const Budget& budget);

}  // namespace orbitline
