#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"
#include "words.hpp"

namespace orbitline {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }

  std::size_t hash() const {
    std::size_t h = x.hash();
    return h ^ (y.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }

  std::size_t digit_size() const { return x.digit_size() + y.digit_size(); }
};

struct PointHash {
  std::size_t operator()(const Point& p) const { return p.hash(); }
};

// The line x = a*y + b in the plane.
struct Line {
  Rational a{1};
  Rational b{0};

  bool contains(const Point& p) const { return p.x == a * p.y + b; }

  static Line diagonal() { return Line{Rational(1), Rational(0)}; }

  friend bool operator==(const Line& l, const Line& r) {
    return l.a == r.a && l.b == r.b;
  }
};

// One generator of the plane system: (x, y) -> (f(x), g(y)).
struct PolyPair {
  Polynomial f;
  Polynomial g;
};

// Size budgets for searches and orbit enumeration.
struct Budget {
  long long max_words = 100000;       // words/points explored
  long long max_digits = 10000000;    // total decimal digits stored
};

// A finite set of coordinate-wise generators acting on the plane, a base
// point, and optional line/sequence/budget data carried by input files.
struct SemigroupSystem {
  std::vector<PolyPair> generators;
  Point base;
  std::optional<Line> line;
  std::map<std::string, SequenceSpec> sequences;
  Budget budget;
  std::uint64_t rng_seed = 0;

  std::size_t size() const { return generators.size(); }

  const PolyPair& generator(int index_1based) const;           // bounds-checked
  const Polynomial& coord(int index_1based, int coordinate) const;  // 0 = f, 1 = g

  // Degree >= 2 for every coordinate of every generator, at least one
  // generator, sequence indices in range.
  void validate() const;
};

}  // namespace orbitline
