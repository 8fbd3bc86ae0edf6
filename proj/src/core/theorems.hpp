#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heights.hpp"
#include "polynomial.hpp"
#include "system.hpp"
#include "words.hpp"

namespace orbitline {

// A word whose f-composition equals link ∘ (g-composition) exactly; link
// absent means plain equality.
struct EqualityCertificate {
  Word word;  // inner-first
  int k = 0;
  std::optional<LinearMap> link;
};

struct CertificateSearchResult {
  std::optional<EqualityCertificate> certificate;
  int exhausted_k = 0;          // deepest fully searched word length
  long long words_visited = 0;
  long long checks_skipped = 0;  // words too large to compose under the cap
  bool budget_exhausted = false;
};

// Iterative deepening over words of length 1..max_k, lexicographic within
// each length, returning the first word whose coordinate compositions agree
// (up to link). Degree products and leading-coefficient logs prune cheaply;
// full composition runs only on surviving words and only below the degree
// cap. Never throws on exhaustion: absence is reported with the bounds.
CertificateSearchResult search_equality_certificate(const SemigroupSystem& sys, int max_k,
                                                    const std::optional<LinearMap>& link);

// {(f_i, l∘g_i∘l⁻¹)} with base (x0, l(y0)); a stored line X = m(Y) becomes
// X = (m∘l⁻¹)(Y) so that hits are preserved wordwise.
SemigroupSystem conjugate_system(const SemigroupSystem& sys, const LinearMap& l);

struct CommonWordResult {
  bool found = false;
  int m = 0;
  int k = 0;
};

// Least (m, k), m <= m_max, k in [1, k_max], with the length-k forward
// windows of the two sequences shifted by m composing to the same
// polynomial over the given generator list.
CommonWordResult check_common_word(const std::vector<Polynomial>& gens,
                                   const SequenceSpec& phi, const SequenceSpec& psi,
                                   int m_max, int k_max, const Budget& budget);

enum class FinitenessOutcome {
  Certified,
  PreperiodicBase,
  InconclusiveHeights,
  Inconclusive,
};

const char* finiteness_outcome_name(FinitenessOutcome o);

struct DominanceRow {
  int k = 0;
  mpz_class deg_f;
  mpz_class deg_g;
  bool separated = false;  // per-depth sound inequality held
  bool checked = false;    // exact chain values compared at this depth
  bool hit = false;        // x_k == y_k (only meaningful when checked)
};

struct HeightSumRow {
  int k = 0;
  double f_sum = 0.0;
  double g_sum = 0.0;
};

struct FinitenessReport {
  std::string criterion;  // "degree_dominance" or "height_sum"
  FinitenessOutcome outcome = FinitenessOutcome::Inconclusive;
  int stop_depth = 0;
  double delta = 0.0;    // certified lower bound for the f-side limit height
  double epsilon = 0.0;  // certified upper bound for the g-side limit height
  bool ratio_monotone = false;
  std::vector<DominanceRow> rows;
  std::vector<HeightSumRow> sums;
  std::string detail;
};

// Degree-dominance criterion along one sequence: delta is a certified lower
// bound for the x0 limit height (estimate minus error, required positive),
// epsilon a certified upper bound for the y0 side, and stop_depth the least
// depth from which D_f(k) * delta > D_g(k) * epsilon holds for every
// computed k — with exact chain evaluation confirming, within the digit
// budget, that no coordinate collision occurs from stop_depth on.
FinitenessReport degree_dominance_bound(const SemigroupSystem& sys, const SequenceSpec& seq,
                                        const Rational& x0, const Rational& y0,
                                        double target_error, int max_depth, int verify_depth);

// Level height-sum criterion: compares sum over all length-k words of
// h(F_w(x0)) against the same sum on the g side, for k = 1..k_max; reports
// the least depth from which the strict inequality holds on computed data.
// Requires sum deg f_i > sum deg g_i > s; preperiodic bases are reported,
// not certified around.
FinitenessReport height_sum_comparison(const SemigroupSystem& sys, const Rational& x0,
                                       const Rational& y0, int k_max, int detect_depth);

// All integer pairs (x, y) in the box |x|, |y| <= bound with F(x) = G(y).
// Enumerates x and inverts G exactly: small |y| via a precomputed value
// table, the monotone tails via binary search -- never a full double loop.
std::vector<std::pair<long long, long long>> sample_integral_solutions(const Polynomial& F,
                                                                       const Polynomial& G,
                                                                       long long bound);

// Exact compositional commutativity of every generator pair, coordinatewise.
bool generators_commute(const SemigroupSystem& sys);

}  // namespace orbitline
