#pragma once

// Small construction helpers shared by the test suites.

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "core/polynomial.hpp"
#include "core/rational.hpp"
#include "core/system.hpp"

namespace testutil {

using orbitline::LinearMap;
using orbitline::Point;
using orbitline::Polynomial;
using orbitline::Rational;
using orbitline::SemigroupSystem;

inline Rational Q(const std::string& s) { return Rational::parse(s); }

// Ascending coefficients, e.g. P({"1", "0", "1"}) = X^2 + 1.
inline Polynomial P(std::initializer_list<const char*> asc) {
  std::vector<Rational> c;
  c.reserve(asc.size());
  for (const char* s : asc) c.push_back(Rational::parse(s));
  return Polynomial(std::move(c));
}

inline Polynomial Xp(int d) { return Polynomial::monomial(d); }

inline SemigroupSystem make_system(std::vector<std::pair<Polynomial, Polynomial>> gens,
                                   const std::string& x0, const std::string& y0) {
  SemigroupSystem s;
  for (auto& [f, g] : gens) s.generators.push_back({std::move(f), std::move(g)});
  s.base = Point{Q(x0), Q(y0)};
  s.validate();
  return s;
}

// Uniform small rational with |num| <= n_max, 1 <= den <= d_max.
inline Rational random_rational(std::mt19937_64& rng, long n_max, long d_max) {
  std::uniform_int_distribution<long> num(-n_max, n_max);
  std::uniform_int_distribution<long> den(1, d_max);
  return Rational(num(rng), den(rng));
}

// Random polynomial of the exact degree with coefficients in the same box.
inline Polynomial random_polynomial(std::mt19937_64& rng, int degree, long n_max, long d_max) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = random_rational(rng, n_max, d_max);
  std::uniform_int_distribution<long> lead(1, n_max);
  std::uniform_int_distribution<int> flip(0, 1);
  long l = lead(rng);
  c[static_cast<std::size_t>(degree)] = Rational(flip(rng) ? l : -l, 1);
  return Polynomial(std::move(c));
}

inline LinearMap random_linear(std::mt19937_64& rng, long n_max, long d_max) {
  Rational alpha = random_rational(rng, n_max, d_max);
  if (alpha.is_zero()) alpha = Rational(1);
  return LinearMap(alpha, random_rational(rng, n_max, d_max));
}

}  // namespace testutil
