#include "heights.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"

namespace orbitline {

namespace {

constexpr double kLog2 = 0.6931471805599453;
// Absorbs double rounding in sums of exact logs; keeps constants sound.
constexpr double kSlack = 1e-9;

double log_plus(double x) { return x > 0.0 ? x : 0.0; }

// log|r| for nonzero rational r.
double log_abs_rational(const Rational& r) {
  return log_abs(r.num()) - log_abs(r.den());
}

}  // namespace

HeightValue naive_height(const Rational& x) {
  HeightValue h;
  h.num_abs = abs(x.num());
  h.den = x.den();
  const mpz_class& m = h.num_abs > h.den ? h.num_abs : h.den;
  h.value = log_abs(m);  // m >= 1 always (den >= 1)
  return h;
}

double naive_height_value(const Rational& x) { return naive_height(x).value; }

double map_height_constant(const Polynomial& p) {
  const int d = p.degree();
  if (d < 1) fail(ErrorCode::DegreeTooLow, "height constant needs degree >= 1");

  double c_upper = std::log(static_cast<double>(d) + 1.0);
  for (int i = 0; i <= d; ++i) c_upper += naive_height_value(p.coeff(i));

  mpz_class L = 1;
  for (int i = 0; i <= d; ++i) {
    if (!p.coeff(i).is_integer()) {
      mpz_class den = p.coeff(i).den();
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), den.get_mpz_t());
    }
  }
  const double log_L = L == 1 ? 0.0 : log_abs(L);

  const Rational lead = p.leading();
  const double log_lead = log_abs_rational(lead);

  // R = 1 + max_{i<d} |a_i / a_d| <= 2 max(1, M).
  double log_M = 0.0;
  bool has_lower = false;
  for (int i = 0; i < d; ++i) {
    if (p.coeff(i).is_zero()) continue;
    double t = log_abs_rational(p.coeff(i)) - log_lead;
    log_M = has_lower ? std::max(log_M, t) : t;
    has_lower = true;
  }
  const double log_R = has_lower ? kLog2 + log_plus(log_M) : 0.0;
  // T = 2R + 2/|a_d| <= 4 max(R, 1/|a_d|).
  const double log_T = 2.0 * kLog2 + std::max(log_R, -log_lead);
  const double c_lower = d * (log_L + log_plus(log_lead) + log_T);

  return std::max(c_upper, c_lower) + kSlack;
}

double linear_shift_constant(const LinearMap& l) {
  const double fwd = naive_height_value(l.alpha) + naive_height_value(l.beta);
  const LinearMap inv = l.inverse();
  const double bwd = naive_height_value(inv.alpha) + naive_height_value(inv.beta);
  return kLog2 + std::max(fwd, bwd) + kSlack;
}

namespace {

struct ChainKey {
  Rational value;
  std::size_t phase;

  friend bool operator==(const ChainKey& a, const ChainKey& b) {
    return a.phase == b.phase && a.value == b.value;
  }
};

struct ChainKeyHash {
  std::size_t operator()(const ChainKey& k) const {
    return k.value.hash() ^ (k.phase * 0x9e3779b97f4a7c15ULL);
  }
};

// Schedule position after n applied maps; equal positions guarantee an
// identical sequence of maps from there on.
std::size_t chain_phase(const SequenceSpec& seq, std::size_t n) {
  if (n < seq.preperiod.size()) return n;
  return seq.preperiod.size() + (n - seq.preperiod.size()) % seq.cycle.size();
}

}  // namespace

std::vector<double> chain_error_tails(const SemigroupSystem& sys, int coordinate,
                                      const SequenceSpec& seq, int horizon) {
  if (seq.cycle.empty()) fail(ErrorCode::ValidationError, "sequence cycle is empty");
  if (seq.max_index() > static_cast<int>(sys.size())) {
    fail(ErrorCode::BadIndex, "sequence references a missing generator");
  }
  if (horizon < 0) fail(ErrorCode::InvalidArgument, "horizon must be >= 0");

  // Per-generator degree and deviation constant, for letters actually used.
  std::vector<int> deg(sys.size() + 1, 0);
  std::vector<double> dev(sys.size() + 1, 0.0);
  double dev_max = 0.0;
  {
    std::vector<bool> used(sys.size() + 1, false);
    for (int i : seq.preperiod) used[static_cast<std::size_t>(i)] = true;
    for (int i : seq.cycle) used[static_cast<std::size_t>(i)] = true;
    for (std::size_t i = 1; i <= sys.size(); ++i) {
      if (!used[i]) continue;
      const Polynomial& p = sys.coord(static_cast<int>(i), coordinate);
      if (p.degree() < 2) fail(ErrorCode::DegreeTooLow, "chain maps must have degree >= 2");
      deg[i] = p.degree();
      dev[i] = map_height_constant(p);
      dev_max = std::max(dev_max, dev[i]);
    }
  }

  // Term C_k / D_k for k = 1..N, with D_k saturating harmlessly to infinity.
  const int kExtra = 128;
  const int N = horizon + kExtra;
  std::vector<double> term(static_cast<std::size_t>(N) + 1, 0.0);
  double divisor_last = 1.0;
  {
    double D = 1.0;
    for (int k = 1; k <= N; ++k) {
      int letter = seq.letter(static_cast<std::size_t>(k));
      D *= static_cast<double>(deg[static_cast<std::size_t>(letter)]);
      term[static_cast<std::size_t>(k)] =
          std::isinf(D) ? 0.0 : dev[static_cast<std::size_t>(letter)] / D;
    }
    divisor_last = D;
  }
  // tail(n) = sum_{k=n+1}^{N} C_k/D_k + dev_max/D_N; degrees >= 2 make the
  // true remainder past N at most dev_max * (1/D_N)(1/2 + 1/4 + ...).
  std::vector<double> tail(static_cast<std::size_t>(N) + 1, 0.0);
  tail[static_cast<std::size_t>(N)] = std::isinf(divisor_last) ? 0.0 : dev_max / divisor_last;
  for (int n = N - 1; n >= 0; --n) {
    tail[static_cast<std::size_t>(n)] =
        tail[static_cast<std::size_t>(n) + 1] + term[static_cast<std::size_t>(n) + 1];
  }
  tail.resize(static_cast<std::size_t>(horizon) + 1);
  return tail;
}

HeightEstimate canonical_height_sequence(const SemigroupSystem& sys, int coordinate,
                                         const SequenceSpec& seq, const Rational& x0,
                                         double target_error, int max_depth) {
  if (!(target_error > 0.0)) fail(ErrorCode::InvalidArgument, "target error must be positive");
  if (max_depth < 1) fail(ErrorCode::InvalidArgument, "max depth must be >= 1");

  const std::vector<double> tail = chain_error_tails(sys, coordinate, seq, max_depth);
  std::vector<int> deg(sys.size() + 1, 0);
  for (std::size_t i = 1; i <= sys.size(); ++i) {
    deg[i] = sys.coord(static_cast<int>(i), coordinate).degree();
  }

  int depth = -1;
  for (int n = 1; n <= max_depth; ++n) {
    if (tail[static_cast<std::size_t>(n)] <= target_error) {
      depth = n;
      break;
    }
  }
  bool capped = depth < 0;
  if (capped) depth = max_depth;

  std::unordered_set<ChainKey, ChainKeyHash> seen;
  seen.insert(ChainKey{x0, chain_phase(seq, 0)});

  Rational x = x0;
  mpz_class degree_product = 1;
  long long digits = static_cast<long long>(x.digit_size());
  for (int k = 1; k <= depth; ++k) {
    int letter = seq.letter(static_cast<std::size_t>(k));
    x = sys.coord(letter, coordinate).evaluate(x);
    degree_product *= deg[static_cast<std::size_t>(letter)];
    digits += static_cast<long long>(x.digit_size());
    if (digits > sys.budget.max_digits) {
      fail(ErrorCode::BudgetExceeded, "digit budget exceeded at chain depth " + std::to_string(k));
    }
    if (!seen.insert(ChainKey{x, chain_phase(seq, static_cast<std::size_t>(k))}).second) {
      // The chain revisits a state with the same upcoming schedule: it is
      // trapped in a loop, heights stay bounded, and the limit is exactly 0.
      HeightEstimate out;
      out.depth = k;
      out.degree_product = degree_product;
      out.preperiodic = true;
      return out;
    }
  }

  HeightEstimate out;
  out.depth = depth;
  out.degree_product = degree_product;
  out.depth_capped = capped;
  out.error_bound = tail[static_cast<std::size_t>(depth)];
  const double h = naive_height_value(x);
  const double d_dbl = mpz_get_d(degree_product.get_mpz_t());
  if (h == 0.0) {
    out.estimate = 0.0;
  } else if (std::isinf(d_dbl)) {
    out.estimate = std::exp(std::log(h) - log_abs(degree_product));
  } else {
    out.estimate = h / d_dbl;
  }
  return out;
}

HeightEstimate canonical_height_eigensystem(const SemigroupSystem& sys, int coordinate,
                                            const Rational& x0, int depth,
                                            const Budget& budget) {
  const std::size_t s = sys.size();
  if (s == 0) fail(ErrorCode::ValidationError, "system needs at least one generator");
  if (depth < 0) fail(ErrorCode::InvalidArgument, "depth must be >= 0");

  long long K = 0;
  double dev_sum = 0.0;
  for (std::size_t j = 1; j <= s; ++j) {
    const Polynomial& g = sys.coord(static_cast<int>(j), coordinate);
    if (g.degree() < 2) fail(ErrorCode::DegreeTooLow, "eigensystem maps must have degree >= 2");
    K += g.degree();
    dev_sum += map_height_constant(g);
  }
  if (K <= static_cast<long long>(s)) {
    fail(ErrorCode::DegreeSumTooLow, "degree sum must exceed the number of maps");
  }
  // Word multiplicities are tracked in 64 bits.
  if (depth > 0 && static_cast<double>(depth) * std::log2(static_cast<double>(s)) > 62.0) {
    fail(ErrorCode::InvalidArgument, "depth too large for multiplicity tracking");
  }

  const double ratio = static_cast<double>(s) / static_cast<double>(K);
  auto level_error = [&](int n) {
    return (dev_sum / static_cast<double>(K)) * std::pow(ratio, n) / (1.0 - ratio);
  };

  std::unordered_map<Rational, unsigned long long, RationalHash> level;
  level.emplace(x0, 1ULL);
  std::unordered_set<Rational, RationalHash> visited{x0};

  long long words_used = 0;
  long long digits = static_cast<long long>(x0.digit_size());
  for (int lev = 1; lev <= depth; ++lev) {
    std::unordered_map<Rational, unsigned long long, RationalHash> next;
    bool grew = false;
    for (const auto& [pt, cnt] : level) {
      for (std::size_t j = 1; j <= s; ++j) {
        Rational y = sys.coord(static_cast<int>(j), coordinate).evaluate(pt);
        if (++words_used > budget.max_words) {
          fail(ErrorCode::BudgetExceeded, "word budget exceeded at level " + std::to_string(lev));
        }
        digits += static_cast<long long>(y.digit_size());
        if (digits > budget.max_digits) {
          fail(ErrorCode::BudgetExceeded, "digit budget exceeded at level " + std::to_string(lev));
        }
        if (visited.insert(y).second) grew = true;
        next[std::move(y)] += cnt;
      }
    }
    level = std::move(next);
    if (!grew) {
      // Once a level introduces no unseen point, every future level stays
      // inside the finite visited set, so heights are bounded and the
      // eigen-height is exactly 0.
      HeightEstimate out;
      out.depth = lev;
      mpz_class kp;
      mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(K), static_cast<unsigned long>(lev));
      out.degree_product = kp;
      out.preperiodic = true;
      return out;
    }
  }

  // Deterministic float summation: fixed order independent of hash layout.
  std::vector<std::pair<Rational, unsigned long long>> entries(level.begin(), level.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  double total = 0.0;
  for (const auto& [pt, cnt] : entries) {
    total += static_cast<double>(cnt) * naive_height_value(pt);
  }

  HeightEstimate out;
  out.depth = depth;
  mpz_class kp;
  mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(K), static_cast<unsigned long>(depth));
  out.degree_product = kp;
  out.estimate = total / std::pow(static_cast<double>(K), depth);
  out.error_bound = level_error(depth);
  return out;
}

}  // namespace orbitline
