#include "words.hpp"

#include <algorithm>

#include "errors.hpp"

namespace orbitline {

const char* apply_order_name(ApplyOrder order) {
  return order == ApplyOrder::InnerFirst ? "inner_first" : "outer_first";
}

Word Word::reversed() const {
  Word w;
  w.letters.assign(letters.rbegin(), letters.rend());
  w.order = order == ApplyOrder::InnerFirst ? ApplyOrder::OuterFirst
                                            : ApplyOrder::InnerFirst;
  return w;
}

int SequenceSpec::letter(std::size_t n) const {
  if (n == 0) fail(ErrorCode::BadIndex, "sequence positions are 1-based");
  if (cycle.empty()) fail(ErrorCode::ValidationError, "sequence cycle is empty");
  if (n <= preperiod.size()) return preperiod[n - 1];
  return cycle[(n - preperiod.size() - 1) % cycle.size()];
}

SequenceSpec SequenceSpec::shifted(std::size_t m) const {
  if (cycle.empty()) fail(ErrorCode::ValidationError, "sequence cycle is empty");
  SequenceSpec out;
  if (m < preperiod.size()) {
    out.preperiod.assign(preperiod.begin() + static_cast<long>(m), preperiod.end());
    out.cycle = cycle;
    return out;
  }
  std::size_t r = (m - preperiod.size()) % cycle.size();
  out.cycle.assign(cycle.begin() + static_cast<long>(r), cycle.end());
  out.cycle.insert(out.cycle.end(), cycle.begin(), cycle.begin() + static_cast<long>(r));
  return out;
}

int SequenceSpec::max_index() const {
  int m = 0;
  for (int i : preperiod) m = std::max(m, i);
  for (int i : cycle) m = std::max(m, i);
  return m;
}

}  // namespace orbitline
