#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "core/errors.hpp"
#include "core/heights.hpp"
#include "core/polynomial.hpp"
#include "core/system.hpp"
#include "core/words.hpp"
#include "support/helpers.hpp"

using orbitline::Budget;
using orbitline::canonical_height_eigensystem;
using orbitline::canonical_height_sequence;
using orbitline::chain_error_tails;
using orbitline::Error;
using orbitline::ErrorCode;
using orbitline::HeightEstimate;
using orbitline::HeightValue;
using orbitline::linear_shift_constant;
using orbitline::LinearMap;
using orbitline::map_height_constant;
using orbitline::naive_height;
using orbitline::naive_height_value;
using orbitline::Polynomial;
using orbitline::Rational;
using orbitline::SemigroupSystem;
using orbitline::SequenceSpec;
using testutil::P;
using testutil::Q;
using testutil::Xp;

namespace {

const double kLog2 = std::log(2.0);

// Rationals with numerator/denominator filling the full 64-bit range.
Rational random_wide_rational(std::mt19937_64& rng) {
  mpz_class n(static_cast<unsigned long>(rng()));
  mpz_class d(static_cast<unsigned long>(rng()) | 1UL);
  if (rng() & 1) n = -n;
  return Rational(n, d);
}

SemigroupSystem pair_system(std::vector<Polynomial> maps, const char* x0) {
  std::vector<std::pair<Polynomial, Polynomial>> gens;
  gens.reserve(maps.size());
  for (auto& m : maps) gens.emplace_back(m, m);
  return testutil::make_system(std::move(gens), x0, x0);
}

}  // namespace

TEST_CASE("naive height worked values and exact log arguments") {
  HeightValue h2 = naive_height(Q("2"));
  CHECK(h2.value == doctest::Approx(kLog2).epsilon(1e-15));
  CHECK(h2.num_abs == 2);
  CHECK(h2.den == 1);

  HeightValue h32 = naive_height(Q("3/2"));
  CHECK(h32.value == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(h32.num_abs == 3);
  CHECK(h32.den == 2);

  HeightValue h0 = naive_height(Rational(0));
  CHECK(h0.value == 0.0);

  CHECK(naive_height_value(Q("-7/9")) == doctest::Approx(std::log(9.0)));
  CHECK(naive_height_value(Q("1")) == 0.0);
  CHECK(naive_height_value(Q("-1")) == 0.0);
}

TEST_CASE("naive height is exactly multiplicative on powers") {
  std::mt19937_64 rng(20260819);
  for (int trial = 0; trial < 2000; ++trial) {
    Rational x = random_wide_rational(rng);
    for (unsigned long d = 2; d <= 6; ++d) {
      HeightValue base = naive_height(x);
      HeightValue pow = naive_height(x.pow(d));
      mpz_class expect_num, expect_den;
      mpz_pow_ui(expect_num.get_mpz_t(), base.num_abs.get_mpz_t(), d);
      mpz_pow_ui(expect_den.get_mpz_t(), base.den.get_mpz_t(), d);
      CHECK(pow.num_abs == expect_num);
      CHECK(pow.den == expect_den);
      double rel = std::abs(pow.value - double(d) * base.value) /
                   std::max(1.0, double(d) * base.value);
      CHECK(rel <= 1e-12);
    }
  }
}

TEST_CASE("map deviation constant is sound over wide random samples") {
  std::vector<Polynomial> maps = {
      Xp(2),
      P({"1", "0", "1"}),            // X^2 + 1
      P({"0", "0", "0", "3"}),       // 3X^3
      P({"0", "0", "0", "0", "-1", "7"}),  // 7X^5 - X^4
      P({"-2", "3", "0", "1/2"}),
      P({"1/3", "0", "0", "0", "9"}),
  };
  std::mt19937_64 rng(42);
  std::vector<Rational> probes;
  for (int i = 0; i < 10000; ++i) probes.push_back(random_wide_rational(rng));
  // adversarial small shapes: zeros of leading terms, tiny denominators
  for (const char* s : {"0", "1", "-1", "1/7", "-1/7", "1/2", "2/7", "-6/7", "1/3",
                        "7", "-7", "49/8", "1/49", "100/7", "1/1000000007"}) {
    probes.push_back(Q(s));
  }
  for (const Polynomial& p : maps) {
    double c = map_height_constant(p);
    CHECK(c >= 0.0);
    double d = p.degree();
    for (const Rational& x : probes) {
      double dev = std::abs(naive_height_value(p.evaluate(x)) - d * naive_height_value(x));
      CHECK(dev <= c + 1e-9);
    }
  }
}

TEST_CASE("map deviation constant on random polynomials") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> deg(1, 5);
    Polynomial p = testutil::random_polynomial(rng, deg(rng), 50, 20);
    double c = map_height_constant(p);
    double d = p.degree();
    for (int i = 0; i < 400; ++i) {
      Rational x = random_wide_rational(rng);
      double dev = std::abs(naive_height_value(p.evaluate(x)) - d * naive_height_value(x));
      CHECK(dev <= c + 1e-9);
    }
  }
  CHECK_THROWS_AS(map_height_constant(Polynomial::constant(Q("3"))), Error);
}

TEST_CASE("map constant worked bounds") {
  // 3X^3: deviation is exactly log 3 at x = 1.
  Polynomial p = P({"0", "0", "0", "3"});
  double c = map_height_constant(p);
  CHECK(c >= std::log(3.0));
  CHECK(std::abs(naive_height_value(p.evaluate(Q("1"))) - 3 * 0.0) ==
        doctest::Approx(std::log(3.0)));
  // X^2 + 1 must allow deviation >= log 2 (attained near 1).
  CHECK(map_height_constant(P({"1", "0", "1"})) >= kLog2);
}

TEST_CASE("linear shift constant is sound in both directions") {
  std::vector<LinearMap> shifts = {
      LinearMap(),                      // X
      LinearMap(Q("1"), Q("1")),        // X + 1
      LinearMap(Q("2"), Q("0")),        // 2X
      LinearMap(Q("-3/2"), Q("7/5")),
      LinearMap(Q("1/1000"), Q("999")),
  };
  std::mt19937_64 rng(44);
  for (const LinearMap& l : shifts) {
    double c = linear_shift_constant(l);
    CHECK(c >= 0.0);
    for (int i = 0; i < 4000; ++i) {
      Rational x = random_wide_rational(rng);
      double hx = naive_height_value(x);
      CHECK(std::abs(naive_height_value(l.apply(x)) - hx) <= c + 1e-9);
      CHECK(std::abs(naive_height_value(l.inverse().apply(x)) - hx) <= c + 1e-9);
    }
  }
  CHECK(linear_shift_constant(LinearMap(Q("1"), Q("1"))) >= kLog2);
  CHECK(linear_shift_constant(LinearMap(Q("2"), Q("0"))) >= kLog2);
}

TEST_CASE("sequence height: squaring chain converges to log 2") {
  SemigroupSystem sys = pair_system({Xp(2)}, "2");
  SequenceSpec seq{{}, {1}};
  HeightEstimate est = canonical_height_sequence(sys, 0, seq, Q("2"), 1e-6, 64);
  CHECK(std::abs(est.estimate - kLog2) <= 1e-12);  // true error is 0 for pure squaring
  CHECK(est.error_bound <= 1e-6);
  CHECK(est.error_bound >= 0.0);
  CHECK_FALSE(est.preperiodic);
  CHECK_FALSE(est.depth_capped);
  mpz_class expect;
  mpz_ui_pow_ui(expect.get_mpz_t(), 2, static_cast<unsigned long>(est.depth));
  CHECK(est.degree_product == expect);
}

TEST_CASE("sequence height: periodic orbit pins the value to exactly zero") {
  SemigroupSystem sys = pair_system({P({"-1", "0", "1"})}, "0");  // X^2 - 1
  SequenceSpec seq{{}, {1}};
  HeightEstimate est = canonical_height_sequence(sys, 0, seq, Q("0"), 1e-6, 64);
  CHECK(est.preperiodic);
  CHECK(est.estimate == 0.0);
  CHECK(est.error_bound == 0.0);
}

TEST_CASE("sequence height: alternating monomial chain") {
  SemigroupSystem sys = pair_system({Xp(2), Xp(3)}, "2");
  SequenceSpec seq{{}, {1, 2}};
  HeightEstimate est = canonical_height_sequence(sys, 0, seq, Q("2"), 1e-6, 64);
  CHECK(std::abs(est.estimate - kLog2) <= est.error_bound + 1e-12);
  CHECK(est.error_bound <= 1e-6);
}

TEST_CASE("sequence height: shift identity within combined reported bounds") {
  SemigroupSystem sys = pair_system({P({"1", "0", "1"}), P({"0", "-1", "0", "2"})}, "2");
  SequenceSpec seq{{2}, {1, 2}};
  std::vector<Rational> bases = {Q("2"), Q("-3"), Q("1/2"), Q("7/3"), Q("0")};
  for (const Rational& x : bases) {
    HeightEstimate full = canonical_height_sequence(sys, 0, seq, x, 1e-5, 64);
    int d1 = sys.coord(seq.letter(1), 0).degree();
    Rational x1 = sys.coord(seq.letter(1), 0).evaluate(x);
    HeightEstimate shifted = canonical_height_sequence(sys, 0, seq.shifted(1), x1, 1e-5, 64);
    double combined = shifted.error_bound + d1 * full.error_bound;
    CHECK(std::abs(shifted.estimate - d1 * full.estimate) <= combined + 1e-12);
  }
}

TEST_CASE("sequence height: error bound nonincreasing in depth, cap honest") {
  SemigroupSystem sys = pair_system({P({"1", "0", "1"})}, "3");
  SequenceSpec seq{{}, {1}};
  std::vector<double> tails = chain_error_tails(sys, 0, seq, 24);
  double prev = -1.0;
  for (int cap = 2; cap <= 12; cap += 2) {
    HeightEstimate est = canonical_height_sequence(sys, 0, seq, Q("3"), 1e-30, cap);
    CHECK(est.depth == cap);
    CHECK(est.depth_capped);
    CHECK(est.error_bound == doctest::Approx(tails[static_cast<std::size_t>(cap)]).epsilon(1e-12));
    if (prev >= 0.0) CHECK(est.error_bound <= prev + 1e-15);
    prev = est.error_bound;
  }
}

TEST_CASE("chain error tails decrease and bound the sequence estimates") {
  SemigroupSystem sys = pair_system({P({"1", "0", "1"}), Xp(3)}, "2");
  SequenceSpec seq{{1}, {2, 1}};
  std::vector<double> tails = chain_error_tails(sys, 0, seq, 20);
  REQUIRE(tails.size() >= 20);
  for (std::size_t n = 0; n + 1 < tails.size(); ++n) {
    CHECK(tails[n] >= tails[n + 1]);
    CHECK(tails[n] > 0.0);
  }
  // depth-n estimate differs from a much deeper one by at most tails[n]
  HeightEstimate coarse = canonical_height_sequence(sys, 0, seq, Q("2"), 1e-30, 6);
  HeightEstimate fine = canonical_height_sequence(sys, 0, seq, Q("2"), 1e-30, 12);
  CHECK(std::abs(coarse.estimate - fine.estimate) <=
        tails[static_cast<std::size_t>(coarse.depth)] + 1e-12);
}

TEST_CASE("sequence height: digit budget exhaustion throws") {
  SemigroupSystem sys = pair_system({Xp(3)}, "2");
  sys.budget.max_digits = 50;
  SequenceSpec seq{{}, {1}};
  CHECK_THROWS_AS(canonical_height_sequence(sys, 0, seq, Q("2"), 1e-9, 64), Error);
  try {
    canonical_height_sequence(sys, 0, seq, Q("2"), 1e-9, 64);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("eigensystem height: single squaring map degenerates to the chain") {
  SemigroupSystem sys = pair_system({Xp(2)}, "2");
  HeightEstimate est = canonical_height_eigensystem(sys, 0, Q("2"), 8, sys.budget);
  CHECK(std::abs(est.estimate - kLog2) <= 1e-12);
  CHECK(est.error_bound > 0.0);
}

TEST_CASE("eigensystem height: monomial pair at 2 averages to exactly log 2") {
  SemigroupSystem sys = pair_system({Xp(2), Xp(3)}, "2");
  HeightEstimate est = canonical_height_eigensystem(sys, 0, Q("2"), 6, sys.budget);
  CHECK(std::abs(est.estimate - kLog2) <= 1e-12);
  CHECK(est.error_bound > 0.0);
  CHECK(est.depth == 6);
  mpz_class expect;  // K^depth = 5^6
  mpz_ui_pow_ui(expect.get_mpz_t(), 5, 6);
  CHECK(est.degree_product == expect);
}

TEST_CASE("eigensystem height: closed reachable set pins the value to zero") {
  SemigroupSystem sys = pair_system({Xp(2), Xp(3)}, "0");
  HeightEstimate at0 = canonical_height_eigensystem(sys, 0, Q("0"), 6, sys.budget);
  CHECK(at0.preperiodic);
  CHECK(at0.estimate == 0.0);
  CHECK(at0.error_bound == 0.0);
  HeightEstimate at1 = canonical_height_eigensystem(sys, 0, Q("1"), 6, sys.budget);
  CHECK(at1.preperiodic);
  CHECK(at1.estimate == 0.0);
  HeightEstimate atm1 = canonical_height_eigensystem(sys, 0, Q("-1"), 6, sys.budget);
  CHECK(atm1.estimate == 0.0);
}

TEST_CASE("eigensystem equation holds within accumulated bounds") {
  SemigroupSystem sys = pair_system({P({"1", "0", "1"}), Xp(3)}, "2");
  int K = 5;  // deg sum
  for (const char* x0 : {"2", "-1/2", "5/3"}) {
    Rational x = Q(x0);
    HeightEstimate hx = canonical_height_eigensystem(sys, 0, x, 7, sys.budget);
    double lhs = 0.0;
    double err = K * hx.error_bound;
    for (int j = 1; j <= 2; ++j) {
      Rational gx = sys.coord(j, 0).evaluate(x);
      HeightEstimate hg = canonical_height_eigensystem(sys, 0, gx, 7, sys.budget);
      lhs += hg.estimate;
      err += hg.error_bound;
    }
    CHECK(std::abs(lhs - K * hx.estimate) <= err + 1e-12);
  }
}

TEST_CASE("eigensystem height: word budget exhaustion throws") {
  SemigroupSystem sys = pair_system({Xp(2), Xp(3)}, "2");
  Budget tiny;
  tiny.max_words = 10;
  CHECK_THROWS_AS(canonical_height_eigensystem(sys, 0, Q("2"), 8, tiny), Error);
}

TEST_CASE("estimites clamp: lower interval end never dips below zero meaningfully") {
  // Lemma-style nonnegativity: estimate + error_bound >= 0 and the clamped
  // lower end max(0, estimate - error) is a valid lower bound for a height.
  SemigroupSystem sys = pair_system({P({"-1", "0", "1"})}, "1/2");
  SequenceSpec seq{{}, {1}};
  HeightEstimate est = canonical_height_sequence(sys, 0, seq, Q("1/2"), 1e-6, 64);
  CHECK(est.estimate + est.error_bound >= 0.0);
  CHECK(est.estimate >= 0.0);
}
