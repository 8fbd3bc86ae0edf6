#pragma once

#include <optional>
#include <vector>

#include "system.hpp"
#include "words.hpp"

namespace orbitline {

struct OrbitRecord {
  Point point;
  Word word;
  int depth = 0;
  bool on_line = false;
};

struct OrbitResult {
  std::vector<OrbitRecord> records;
  bool truncated = false;   // a budget stopped the enumeration early
  bool closed = false;      // frontier stopped producing new points
  long long words_visited = 0;
};

enum class SequenceOrbitMode { Forward, Coherent };

// Applies the word's generators coordinatewise in its stated order; the
// empty word returns the base point.
Point evaluate_word(const SemigroupSystem& sys, const Word& word, const Point& base);

// Breadth-first enumeration of all word evaluations up to max_depth, words
// in lexicographic order within each depth. With dedup, repeated points are
// collapsed (first occurrence kept) and a depth level that produces nothing
// new closes the orbit. Budgets truncate rather than throw.
OrbitResult enumerate_semigroup_orbit(const SemigroupSystem& sys, const Point& base,
                                      int max_depth, bool dedup,
                                      const std::optional<Line>& line);

// Chain of points selected by an eventually periodic sequence. Forward mode
// applies each new map outside the previous composite; coherent mode applies
// it inside, which requires re-evaluating the whole chain per step.
OrbitResult enumerate_sequence_orbit(const SemigroupSystem& sys, const SequenceSpec& seq,
                                     const Point& base, int n_max, SequenceOrbitMode mode,
                                     const std::optional<Line>& line);

// Keeps the records whose point lies on the line exactly.
std::vector<OrbitRecord> intersect_with_line(const std::vector<OrbitRecord>& records,
                                             const Line& line);

// Greedy pigeonhole extraction of the shared trailing maps of a word
// collection: reading from the outermost end, repeatedly keep the most
// frequent letter (ties to the lowest index) while at least min_support
// words still agree. Input words in any stated order are normalized to
// inner-first; the result lists the extracted maps outermost-first.
Word extract_coherent_suffix(const std::vector<Word>& hit_words, int min_support);

}  // namespace orbitline
