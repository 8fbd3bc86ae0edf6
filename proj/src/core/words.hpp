#pragma once

#include <cstddef>
#include <vector>

namespace orbitline {

// Order in which a word's letters act on a point. Letters always read
// left-to-right; the order says which end is the innermost map.
//
//   InnerFirst: letters[0] acts first, so the composite map is
//               f[letters.back()] ∘ ... ∘ f[letters[0]].
//   OuterFirst: letters[0] is the outermost map, so the composite is
//               f[letters[0]] ∘ ... ∘ f[letters.back()].
enum class ApplyOrder { InnerFirst, OuterFirst };

const char* apply_order_name(ApplyOrder order);

// Word over generator indices (1-based).
struct Word {
  std::vector<int> letters;
  ApplyOrder order = ApplyOrder::InnerFirst;

  std::size_t length() const { return letters.size(); }

  // Same composite map expressed in the other reading order.
  Word reversed() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters == b.letters && a.order == b.order;
  }
};

// Eventually periodic index sequence: preperiod followed by a repeating
// cycle. Indices are 1-based positions into a generator list.
struct SequenceSpec {
  std::vector<int> preperiod;
  std::vector<int> cycle;  // nonempty

  // Letter at 1-based position n.
  int letter(std::size_t n) const;

  // The sequence with its first m letters dropped.
  SequenceSpec shifted(std::size_t m) const;

  // Largest index mentioned (0 when both parts are empty).
  int max_index() const;

  friend bool operator==(const SequenceSpec& a, const SequenceSpec& b) {
    return a.preperiod == b.preperiod && a.cycle == b.cycle;
  }
};

}  // namespace orbitline
