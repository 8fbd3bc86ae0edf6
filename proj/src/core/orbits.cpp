#include "orbits.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "errors.hpp"

namespace orbitline {

namespace {

Point apply_generator(const SemigroupSystem& sys, int letter, const Point& p) {
  const PolyPair& gen = sys.generator(letter);
  return Point{gen.f.evaluate(p.x), gen.g.evaluate(p.y)};
}

bool on_line(const std::optional<Line>& line, const Point& p) {
  return line.has_value() && line->contains(p);
}

}  // namespace

Point evaluate_word(const SemigroupSystem& sys, const Word& word, const Point& base) {
  Point p = base;
  if (word.order == ApplyOrder::InnerFirst) {
    for (int letter : word.letters) p = apply_generator(sys, letter, p);
  } else {
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
      p = apply_generator(sys, *it, p);
    }
  }
  return p;
}

OrbitResult enumerate_semigroup_orbit(const SemigroupSystem& sys, const Point& base,
                                      int max_depth, bool dedup,
                                      const std::optional<Line>& line) {
  if (max_depth < 0) fail(ErrorCode::InvalidArgument, "depth must be >= 0");
  OrbitResult out;

  struct Node {
    Point point;
    Word word;
  };

  std::unordered_set<Point, PointHash> seen;
  long long digits = static_cast<long long>(base.digit_size());

  std::vector<Node> frontier;
  frontier.push_back(Node{base, Word{{}, ApplyOrder::InnerFirst}});
  out.records.push_back(OrbitRecord{base, frontier[0].word, 0, on_line(line, base)});
  out.words_visited = 1;
  if (dedup) seen.insert(base);

  for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    bool grew = false;
    for (const Node& node : frontier) {
      for (int letter = 1; letter <= static_cast<int>(sys.size()); ++letter) {
        if (out.words_visited >= sys.budget.max_words) {
          out.truncated = true;
          return out;
        }
        Point child = apply_generator(sys, letter, node.point);
        ++out.words_visited;
        digits += static_cast<long long>(child.digit_size());
        if (digits > sys.budget.max_digits) {
          out.truncated = true;
          return out;
        }
        Word w = node.word;
        w.letters.push_back(letter);
        if (dedup) {
          if (!seen.insert(child).second) continue;
          grew = true;
        }
        out.records.push_back(OrbitRecord{child, w, depth, on_line(line, child)});
        next.push_back(Node{std::move(child), std::move(w)});
      }
    }
    frontier = std::move(next);
    if (dedup && !grew) {
      // Every image of the current frontier was already known, so the orbit
      // is a finite set: nothing new can appear at any later depth.
      out.closed = true;
      break;
    }
  }
  return out;
}

OrbitResult enumerate_sequence_orbit(const SemigroupSystem& sys, const SequenceSpec& seq,
                                     const Point& base, int n_max, SequenceOrbitMode mode,
                                     const std::optional<Line>& line) {
  if (n_max < 0) fail(ErrorCode::InvalidArgument, "n_max must be >= 0");
  if (seq.max_index() > static_cast<int>(sys.size())) {
    fail(ErrorCode::BadIndex, "sequence references a missing generator");
  }
  OrbitResult out;
  out.records.push_back(OrbitRecord{base, Word{{}, ApplyOrder::InnerFirst}, 0, on_line(line, base)});
  out.words_visited = 1;
  long long digits = static_cast<long long>(base.digit_size());

  if (mode == SequenceOrbitMode::Forward) {
    Point p = base;
    Word w{{}, ApplyOrder::InnerFirst};
    for (int n = 1; n <= n_max; ++n) {
      const int letter = seq.letter(static_cast<std::size_t>(n));
      p = apply_generator(sys, letter, p);
      w.letters.push_back(letter);
      ++out.words_visited;
      digits += static_cast<long long>(p.digit_size());
      if (digits > sys.budget.max_digits) {
        out.truncated = true;
        return out;
      }
      out.records.push_back(OrbitRecord{p, w, n, on_line(line, p)});
    }
    return out;
  }

  // Coherent: the n-th point applies letters s(n), ..., s(1) from the inside
  // out; each step changes the innermost map, so the chain is re-evaluated
  // from scratch.
  for (int n = 1; n <= n_max; ++n) {
    Point p = base;
    Word w{{}, ApplyOrder::OuterFirst};
    for (int i = n; i >= 1; --i) {
      p = apply_generator(sys, seq.letter(static_cast<std::size_t>(i)), p);
      ++out.words_visited;
    }
    for (int i = 1; i <= n; ++i) w.letters.push_back(seq.letter(static_cast<std::size_t>(i)));
    digits += static_cast<long long>(p.digit_size());
    if (digits > sys.budget.max_digits) {
      out.truncated = true;
      return out;
    }
    out.records.push_back(OrbitRecord{std::move(p), std::move(w), n, false});
    if (line.has_value()) {
      out.records.back().on_line = line->contains(out.records.back().point);
    }
  }
  return out;
}

std::vector<OrbitRecord> intersect_with_line(const std::vector<OrbitRecord>& records,
                                             const Line& line) {
  std::vector<OrbitRecord> out;
  for (const OrbitRecord& r : records) {
    if (line.contains(r.point)) {
      out.push_back(r);
      out.back().on_line = true;
    }
  }
  return out;
}

Word extract_coherent_suffix(const std::vector<Word>& hit_words, int min_support) {
  if (min_support < 2) fail(ErrorCode::InvalidArgument, "min_support must be >= 2");

  std::vector<std::vector<int>> words;  // inner-first letter lists
  words.reserve(hit_words.size());
  for (const Word& w : hit_words) {
    words.push_back(w.order == ApplyOrder::InnerFirst ? w.letters : w.reversed().letters);
  }

  std::vector<std::size_t> alive(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) alive[i] = i;

  std::vector<int> extracted;  // outermost map first
  for (std::size_t k = 0;; ++k) {
    std::map<int, int> counts;
    for (std::size_t idx : alive) {
      const auto& w = words[idx];
      if (w.size() >= k + 1) ++counts[w[w.size() - 1 - k]];
    }
    int best_letter = 0;
    int best_count = 0;
    for (const auto& [letter, count] : counts) {
      if (count > best_count) {  // std::map order makes ties pick the lowest letter
        best_letter = letter;
        best_count = count;
      }
    }
    if (best_count < min_support) {
      if (k == 0) {
        fail(ErrorCode::InsufficientSupport,
             "no letter reaches the support threshold at the outermost position");
      }
      break;
    }
    extracted.push_back(best_letter);
    std::vector<std::size_t> still;
    for (std::size_t idx : alive) {
      const auto& w = words[idx];
      if (w.size() >= k + 1 && w[w.size() - 1 - k] == best_letter) still.push_back(idx);
    }
    alive = std::move(still);
  }

  return Word{std::move(extracted), ApplyOrder::OuterFirst};
}

}  // namespace orbitline
