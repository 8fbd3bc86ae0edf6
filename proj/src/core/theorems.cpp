#include "theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <unordered_map>
#include <unordered_set>

#include "errors.hpp"

namespace orbitline {

namespace {

constexpr long long kComposeDegreeCap = 1 << 14;

// Composes the coordinate maps along an inner-first word, abandoning the
// build when the digit budget is hit.
std::optional<Polynomial> compose_word(const SemigroupSystem& sys, int coordinate,
                                       const std::vector<int>& letters, long long max_digits) {
  Polynomial comp = sys.coord(letters[0], coordinate);
  for (std::size_t i = 1; i < letters.size(); ++i) {
    comp = sys.coord(letters[i], coordinate).compose(comp);
    if (static_cast<long long>(comp.digit_size()) > max_digits) return std::nullopt;
  }
  return comp;
}

}  // namespace

CertificateSearchResult search_equality_certificate(const SemigroupSystem& sys, int max_k,
                                                    const std::optional<LinearMap>& link) {
  if (max_k < 1) fail(ErrorCode::InvalidArgument, "max_k must be >= 1");
  const int s = static_cast<int>(sys.size());
  if (s == 0) fail(ErrorCode::ValidationError, "system needs at least one generator");

  CertificateSearchResult res;

  // Per-generator data for the cheap pruning chains.
  std::vector<long long> deg_f(static_cast<std::size_t>(s) + 1), deg_g(static_cast<std::size_t>(s) + 1);
  std::vector<double> llc_f(static_cast<std::size_t>(s) + 1), llc_g(static_cast<std::size_t>(s) + 1);
  std::vector<int> slc_f(static_cast<std::size_t>(s) + 1), slc_g(static_cast<std::size_t>(s) + 1);
  for (int i = 1; i <= s; ++i) {
    const PolyPair& gen = sys.generator(i);
    deg_f[static_cast<std::size_t>(i)] = gen.f.degree();
    deg_g[static_cast<std::size_t>(i)] = gen.g.degree();
    const Rational lf = gen.f.leading();
    const Rational lg = gen.g.leading();
    llc_f[static_cast<std::size_t>(i)] = log_abs(lf.num()) - log_abs(lf.den());
    llc_g[static_cast<std::size_t>(i)] = log_abs(lg.num()) - log_abs(lg.den());
    slc_f[static_cast<std::size_t>(i)] = lf.sign();
    slc_g[static_cast<std::size_t>(i)] = lg.sign();
  }
  double link_log = 0.0;
  int link_sign = 1;
  if (link.has_value()) {
    link_log = log_abs(link->alpha.num()) - log_abs(link->alpha.den());
    link_sign = link->alpha.sign();
  }

  // Chains along the current word (index 0 = empty word).
  std::vector<long long> chain_df{1}, chain_dg{1};
  std::vector<double> chain_lf{0.0}, chain_lg{0.0};
  std::vector<int> chain_sf{1}, chain_sg{1};
  std::vector<int> letters;

  auto saturating_mul = [](long long a, long long b) {
    if (a > (1LL << 62) / b) return (1LL << 62);
    return a * b;
  };

  bool aborted = false;
  std::function<bool(int)> dfs = [&](int k_target) -> bool {
    if (static_cast<int>(letters.size()) == k_target) {
      if (res.words_visited >= sys.budget.max_words) {
        res.budget_exhausted = true;
        aborted = true;
        return false;
      }
      ++res.words_visited;
      const long long df = chain_df.back();
      const long long dg = chain_dg.back();
      if (df != dg) return false;
      if (df > kComposeDegreeCap) {
        ++res.checks_skipped;
        return false;
      }
      // Leading coefficients must satisfy lc(F) = link.alpha * lc(G): prune
      // only on a clear mismatch so double rounding can never hide a hit.
      if (chain_sf.back() != link_sign * chain_sg.back()) return false;
      if (std::fabs(chain_lf.back() - (link_log + chain_lg.back())) > 1e-6) return false;

      auto fcomp = compose_word(sys, 0, letters, sys.budget.max_digits);
      auto gcomp = compose_word(sys, 1, letters, sys.budget.max_digits);
      if (!fcomp || !gcomp) {
        ++res.checks_skipped;
        return false;
      }
      Polynomial rhs = link.has_value() ? link->as_polynomial().compose(*gcomp) : *gcomp;
      if (*fcomp != rhs) return false;
      res.certificate = EqualityCertificate{
          Word{letters, ApplyOrder::InnerFirst}, k_target, link};
      return true;
    }
    for (int letter = 1; letter <= s; ++letter) {
      const std::size_t li = static_cast<std::size_t>(letter);
      letters.push_back(letter);
      chain_df.push_back(saturating_mul(chain_df.back(), deg_f[li]));
      chain_dg.push_back(saturating_mul(chain_dg.back(), deg_g[li]));
      chain_lf.push_back(llc_f[li] + static_cast<double>(deg_f[li]) * chain_lf.back());
      chain_lg.push_back(llc_g[li] + static_cast<double>(deg_g[li]) * chain_lg.back());
      chain_sf.push_back(slc_f[li] * (deg_f[li] % 2 == 0 ? 1 : chain_sf.back()));
      chain_sg.push_back(slc_g[li] * (deg_g[li] % 2 == 0 ? 1 : chain_sg.back()));
      const bool hit = dfs(k_target);
      letters.pop_back();
      chain_df.pop_back();
      chain_dg.pop_back();
      chain_lf.pop_back();
      chain_lg.pop_back();
      chain_sf.pop_back();
      chain_sg.pop_back();
      if (hit || aborted) return hit;
    }
    return false;
  };

  for (int k = 1; k <= max_k; ++k) {
    if (dfs(k)) {
      return res;
    }
    if (aborted) break;
    res.exhausted_k = k;
  }
  return res;
}

SemigroupSystem conjugate_system(const SemigroupSystem& sys, const LinearMap& l) {
  SemigroupSystem out = sys;
  for (PolyPair& gen : out.generators) {
    gen.g = conjugate(gen.g, l);
  }
  out.base.y = l.apply(sys.base.y);
  if (out.line.has_value()) {
    // X = a Y + b against (x, l(y)) should hold exactly when the original
    // line held against (x, y): substitute Y -> l^{-1}(Y).
    const Rational a = out.line->a / l.alpha;
    const Rational b = out.line->b - (out.line->a * l.beta) / l.alpha;
    out.line = Line{a, b};
  }
  return out;
}

CommonWordResult check_common_word(const std::vector<Polynomial>& gens,
                                   const SequenceSpec& phi, const SequenceSpec& psi,
                                   int m_max, int k_max, const Budget& budget) {
  if (gens.empty()) fail(ErrorCode::ValidationError, "generator list is empty");
  if (m_max < 0 || k_max < 1) fail(ErrorCode::InvalidArgument, "need m_max >= 0, k_max >= 1");
  const int n = static_cast<int>(gens.size());
  if (phi.max_index() > n || psi.max_index() > n) {
    fail(ErrorCode::BadIndex, "sequence references a missing generator");
  }

  for (int m = 0; m <= m_max; ++m) {
    Polynomial wp, wq;
    for (int k = 1; k <= k_max; ++k) {
      const Polynomial& fp = gens[static_cast<std::size_t>(phi.letter(static_cast<std::size_t>(m + k)) - 1)];
      const Polynomial& fq = gens[static_cast<std::size_t>(psi.letter(static_cast<std::size_t>(m + k)) - 1)];
      wp = k == 1 ? fp : fp.compose(wp);
      wq = k == 1 ? fq : fq.compose(wq);
      if (static_cast<long long>(wp.digit_size() + wq.digit_size()) > budget.max_digits) {
        fail(ErrorCode::BudgetExceeded, "digit budget exceeded composing windows");
      }
      if (wp == wq) return CommonWordResult{true, m, k};
    }
  }
  return CommonWordResult{};
}

const char* finiteness_outcome_name(FinitenessOutcome o) {
  switch (o) {
    case FinitenessOutcome::Certified: return "certified";
    case FinitenessOutcome::PreperiodicBase: return "preperiodic_base";
    case FinitenessOutcome::InconclusiveHeights: return "inconclusive_heights";
    case FinitenessOutcome::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

FinitenessReport degree_dominance_bound(const SemigroupSystem& sys, const SequenceSpec& seq,
                                        const Rational& x0, const Rational& y0,
                                        double target_error, int max_depth, int verify_depth) {
  if (verify_depth < 1) fail(ErrorCode::InvalidArgument, "verify_depth must be >= 1");
  FinitenessReport rep;
  rep.criterion = "degree_dominance";

  HeightEstimate hf = canonical_height_sequence(sys, 0, seq, x0, target_error, max_depth);
  if (hf.preperiodic) {
    rep.outcome = FinitenessOutcome::PreperiodicBase;
    rep.detail = "x0 chain is eventually periodic; the criterion is vacuous for it";
    return rep;
  }
  HeightEstimate hg = canonical_height_sequence(sys, 1, seq, y0, target_error, max_depth);

  rep.delta = hf.estimate - hf.error_bound;
  rep.epsilon = hg.preperiodic ? 0.0 : hg.estimate + hg.error_bound;
  if (rep.delta <= 0.0) {
    rep.outcome = FinitenessOutcome::InconclusiveHeights;
    rep.detail = "certified lower bound for the x0 limit height is not positive";
    return rep;
  }

  rep.ratio_monotone = true;
  bool degrees_always_equal = true;
  mpz_class df = 1, dg = 1;
  Rational xv = x0, yv = y0;
  bool eval_ok = true;
  long long digits = static_cast<long long>(xv.digit_size() + yv.digit_size());

  for (int k = 1; k <= verify_depth; ++k) {
    const int letter = seq.letter(static_cast<std::size_t>(k));
    const Polynomial& f = sys.coord(letter, 0);
    const Polynomial& g = sys.coord(letter, 1);
    df *= f.degree();
    dg *= g.degree();
    if (f.degree() < g.degree()) rep.ratio_monotone = false;
    if (f.degree() != g.degree()) degrees_always_equal = false;

    DominanceRow row;
    row.k = k;
    row.deg_f = df;
    row.deg_g = dg;
    // The dominant-term comparison D_f * delta > D_g * epsilon, in logs so
    // huge degree products cost nothing. epsilon = 0 only when the g chain
    // is exactly preperiodic, where any positive f side wins.
    row.separated = rep.epsilon == 0.0
                        ? true
                        : log_abs(df) + std::log(rep.delta) > log_abs(dg) + std::log(rep.epsilon);

    if (eval_ok) {
      xv = f.evaluate(xv);
      yv = g.evaluate(yv);
      digits += static_cast<long long>(xv.digit_size() + yv.digit_size());
      if (digits > sys.budget.max_digits) {
        eval_ok = false;
      } else {
        row.checked = true;
        row.hit = xv == yv;
      }
    }
    rep.rows.push_back(std::move(row));
  }

  // stop_depth must clear both every failed comparison and every exact hit
  // observed on the horizon: the report promises confirmed separation from
  // stop_depth on over the computed data.
  int last_bad = 0;
  for (const DominanceRow& row : rep.rows) {
    if (!row.separated || (row.checked && row.hit)) last_bad = row.k;
  }
  if (last_bad >= verify_depth) {
    rep.outcome = FinitenessOutcome::Inconclusive;
    rep.detail = degrees_always_equal
                     ? "degree products coincide at every depth; the criterion cannot fire"
                     : "separation never establishes on the computed horizon";
    return rep;
  }
  rep.stop_depth = last_bad + 1;
  rep.outcome = FinitenessOutcome::Certified;
  rep.detail = "chain coordinates differ at every computed depth >= stop_depth";
  return rep;
}

namespace {

// True when the reachable set of x under all coordinate maps stops growing
// within the given depth (budgets permitting).
bool orbit_closes(const SemigroupSystem& sys, int coordinate, const Rational& x, int depth) {
  std::unordered_set<Rational, RationalHash> visited{x};
  std::vector<Rational> frontier{x};
  long long words = 0;
  long long digits = static_cast<long long>(x.digit_size());
  for (int lev = 1; lev <= depth; ++lev) {
    std::vector<Rational> next;
    for (const Rational& p : frontier) {
      for (std::size_t j = 1; j <= sys.size(); ++j) {
        if (++words > sys.budget.max_words) return false;
        Rational y = sys.coord(static_cast<int>(j), coordinate).evaluate(p);
        digits += static_cast<long long>(y.digit_size());
        if (digits > sys.budget.max_digits) return false;
        if (visited.insert(y).second) next.push_back(std::move(y));
      }
    }
    if (next.empty()) return true;
    frontier = std::move(next);
  }
  return false;
}

}  // namespace

FinitenessReport height_sum_comparison(const SemigroupSystem& sys, const Rational& x0,
                                       const Rational& y0, int k_max, int detect_depth) {
  if (k_max < 1) fail(ErrorCode::InvalidArgument, "k_max must be >= 1");
  if (detect_depth < 1) fail(ErrorCode::InvalidArgument, "detect_depth must be >= 1");
  const long long s = static_cast<long long>(sys.size());
  if (s == 0) fail(ErrorCode::ValidationError, "system needs at least one generator");

  long long sum_f = 0, sum_g = 0;
  for (std::size_t i = 1; i <= sys.size(); ++i) {
    sum_f += sys.coord(static_cast<int>(i), 0).degree();
    sum_g += sys.coord(static_cast<int>(i), 1).degree();
  }
  FinitenessReport rep;
  rep.criterion = "height_sum";
  if (!(sum_f > sum_g && sum_g > s)) {
    fail(ErrorCode::HypothesisViolated,
         "need sum deg f > sum deg g > generator count (got " + std::to_string(sum_f) +
             ", " + std::to_string(sum_g) + ", " + std::to_string(s) + ")");
  }
  if (static_cast<double>(k_max) * std::log2(static_cast<double>(s) + 1.0) > 62.0) {
    fail(ErrorCode::InvalidArgument, "k_max too large for multiplicity tracking");
  }

  if (orbit_closes(sys, 0, x0, detect_depth)) {
    rep.outcome = FinitenessOutcome::PreperiodicBase;
    rep.detail = "x0 has a finite orbit under the f maps";
    return rep;
  }
  if (orbit_closes(sys, 1, y0, detect_depth)) {
    rep.outcome = FinitenessOutcome::PreperiodicBase;
    rep.detail = "y0 has a finite orbit under the g maps";
    return rep;
  }

  using Level = std::unordered_map<Rational, unsigned long long, RationalHash>;
  auto expand = [&](const Level& level, int coordinate, long long& words, long long& digits) {
    Level next;
    for (const auto& [pt, cnt] : level) {
      for (std::size_t j = 1; j <= sys.size(); ++j) {
        if (++words > sys.budget.max_words) {
          fail(ErrorCode::BudgetExceeded, "word budget exceeded in level sums");
        }
        Rational y = sys.coord(static_cast<int>(j), coordinate).evaluate(pt);
        digits += static_cast<long long>(y.digit_size());
        if (digits > sys.budget.max_digits) {
          fail(ErrorCode::BudgetExceeded, "digit budget exceeded in level sums");
        }
        next[std::move(y)] += cnt;
      }
    }
    return next;
  };
  auto level_sum = [](const Level& level) {
    std::vector<std::pair<Rational, unsigned long long>> entries(level.begin(), level.end());
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    double total = 0.0;
    for (const auto& [pt, cnt] : entries) {
      total += static_cast<double>(cnt) * naive_height_value(pt);
    }
    return total;
  };

  Level level_f{{x0, 1ULL}};
  Level level_g{{y0, 1ULL}};
  long long words = 0, digits = 0;
  for (int k = 1; k <= k_max; ++k) {
    level_f = expand(level_f, 0, words, digits);
    level_g = expand(level_g, 1, words, digits);
    rep.sums.push_back(HeightSumRow{k, level_sum(level_f), level_sum(level_g)});
  }

  int last_bad = 0;
  for (const HeightSumRow& row : rep.sums) {
    if (!(row.f_sum > row.g_sum)) last_bad = row.k;
  }
  if (last_bad >= k_max) {
    rep.outcome = FinitenessOutcome::Inconclusive;
    rep.detail = "f-side level sums never strictly dominate on the computed horizon";
    return rep;
  }
  rep.stop_depth = last_bad + 1;
  rep.outcome = FinitenessOutcome::Certified;
  rep.detail = "full-level containment in a line is impossible from stop_depth on";
  return rep;
}

namespace {

template <class I>
I to_fixed(const mpz_class& v);

template <>
mpz_class to_fixed<mpz_class>(const mpz_class& v) {
  return v;
}

template <>
__int128 to_fixed<__int128>(const mpz_class& v) {
  // Fits by the caller's feasibility precheck.
  mpz_class a = abs(v);
  const unsigned long long hi = mpz_class(a >> 64).get_ui();
  const unsigned long long lo = mpz_class(a & mpz_class("18446744073709551615")).get_ui();
  const unsigned __int128 mag = (static_cast<unsigned __int128>(hi) << 64) | lo;
  const __int128 out = static_cast<__int128>(mag);
  return v < 0 ? -out : out;
}

template <class I>
I eval_scaled(const std::vector<I>& c, long long x) {
  I acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * static_cast<long>(x) + c[i];
  }
  return acc;
}

// Radius beyond which the scaled polynomial is strictly monotone on the
// integers: every real root of its derivative lies strictly inside.
long long monotone_radius(const std::vector<mpz_class>& c) {
  const std::size_t d = c.size() - 1;
  std::vector<mpz_class> dc(d);
  for (std::size_t i = 1; i <= d; ++i) dc[i - 1] = c[i] * static_cast<long>(i);
  double best = 0.0;
  const double lead = std::fabs(mpz_get_d(dc.back().get_mpz_t()));
  for (std::size_t i = 0; i + 1 < dc.size(); ++i) {
    best = std::max(best, std::fabs(mpz_get_d(dc[i].get_mpz_t())) / lead);
  }
  return static_cast<long long>(std::ceil(1.0 + best)) + 1;
}

template <class I>
std::vector<std::pair<long long, long long>> sample_impl(const std::vector<mpz_class>& fc,
                                                         const std::vector<mpz_class>& gc,
                                                         long long bound) {
  std::vector<I> f(fc.size()), g(gc.size());
  for (std::size_t i = 0; i < fc.size(); ++i) f[i] = to_fixed<I>(fc[i]);
  for (std::size_t i = 0; i < gc.size(); ++i) g[i] = to_fixed<I>(gc[i]);

  const long long core = std::min(bound, monotone_radius(gc));
  std::map<I, std::vector<long long>> core_vals;
  for (long long y = -core; y <= core; ++y) {
    core_vals[eval_scaled(g, y)].push_back(y);
  }

  // Tail [core+1, bound] and its mirror are strictly monotone.
  const bool has_tail = bound > core;
  bool hi_increasing = true, lo_increasing = true;
  if (has_tail) {
    hi_increasing = eval_scaled(g, core + 1) < eval_scaled(g, bound);
    lo_increasing = eval_scaled(g, -bound) < eval_scaled(g, -core - 1);
  }
  auto bisect = [&](long long lo, long long hi, bool increasing, const I& v,
                    std::vector<long long>& ys) {
    while (lo <= hi) {
      const long long mid = lo + (hi - lo) / 2;
      const I gv = eval_scaled(g, mid);
      if (gv == v) {
        ys.push_back(mid);
        return;
      }
      const bool go_right = increasing ? gv < v : gv > v;
      if (go_right) {
        lo = mid + 1;
      } else {
        hi = mid - 1;
      }
    }
  };

  std::vector<std::pair<long long, long long>> out;
  for (long long x = -bound; x <= bound; ++x) {
    const I v = eval_scaled(f, x);
    std::vector<long long> ys;
    if (auto it = core_vals.find(v); it != core_vals.end()) {
      ys = it->second;
    }
    if (has_tail) {
      bisect(core + 1, bound, hi_increasing, v, ys);
      bisect(-bound, -core - 1, lo_increasing, v, ys);
    }
    std::sort(ys.begin(), ys.end());
    for (long long y : ys) out.emplace_back(x, y);
  }
  return out;
}

}  // namespace

std::vector<std::pair<long long, long long>> sample_integral_solutions(const Polynomial& F,
                                                                       const Polynomial& G,
                                                                       long long bound) {
  if (F.degree() < 1 || G.degree() < 1) {
    fail(ErrorCode::DegreeTooLow, "both polynomials must be nonconstant");
  }
  if (bound < 1 || bound > 1000000000LL) {
    fail(ErrorCode::InvalidArgument, "bound must be in [1, 10^9]");
  }

  // Clearing denominators with a shared factor preserves the solution set.
  mpz_class L = 1;
  for (const Polynomial* p : {&F, &G}) {
    for (const Rational& c : p->coeffs()) {
      if (!c.is_integer()) {
        mpz_class den = c.den();
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), den.get_mpz_t());
      }
    }
  }
  auto scale = [&](const Polynomial& p) {
    std::vector<mpz_class> out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Rational& c = p.coeff(static_cast<int>(i));
      out[i] = c.num() * (L / c.den());
    }
    return out;
  };
  const std::vector<mpz_class> fc = scale(F);
  const std::vector<mpz_class> gc = scale(G);

  auto fits_int128 = [&](const std::vector<mpz_class>& c) {
    mpz_class sum = 0;
    for (const mpz_class& v : c) sum += abs(v);
    if (sum == 0) return true;
    const double bits = log_abs(sum) / std::numbers::ln2 +
                        static_cast<double>(c.size() - 1) *
                            std::log2(static_cast<double>(bound) + 1.0);
    return bits < 124.0;
  };

  if (fits_int128(fc) && fits_int128(gc)) {
    return sample_impl<__int128>(fc, gc, bound);
  }
  return sample_impl<mpz_class>(fc, gc, bound);
}

bool generators_commute(const SemigroupSystem& sys) {
  for (std::size_t i = 1; i <= sys.size(); ++i) {
    for (std::size_t j = i + 1; j <= sys.size(); ++j) {
      const PolyPair& a = sys.generator(static_cast<int>(i));
      const PolyPair& b = sys.generator(static_cast<int>(j));
      if (a.f.compose(b.f) != b.f.compose(a.f)) return false;
      if (a.g.compose(b.g) != b.g.compose(a.g)) return false;
    }
  }
  return true;
}

}  // namespace orbitline
