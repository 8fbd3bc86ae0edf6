#include "system.hpp"

#include "errors.hpp"

namespace orbitline {

const PolyPair& SemigroupSystem::generator(int index_1based) const {
  if (index_1based < 1 || index_1based > static_cast<int>(generators.size())) {
    fail(ErrorCode::BadIndex,
         "generator index " + std::to_string(index_1based) + " out of range 1.." +
             std::to_string(generators.size()));
  }
  return generators[static_cast<std::size_t>(index_1based - 1)];
}

const Polynomial& SemigroupSystem::coord(int index_1based, int coordinate) const {
  const PolyPair& pair = generator(index_1based);
  if (coordinate == 0) return pair.f;
  if (coordinate == 1) return pair.g;
  fail(ErrorCode::BadIndex, "coordinate must be 0 (f) or 1 (g)");
}

void SemigroupSystem::validate() const {
  if (generators.empty()) {
    fail(ErrorCode::ValidationError, "system needs at least one generator");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].f.degree() < 2 || generators[i].g.degree() < 2) {
      fail(ErrorCode::ValidationError,
           "generator " + std::to_string(i + 1) +
               " must have degree >= 2 in both coordinates");
    }
  }
  for (const auto& [name, seq] : sequences) {
    if (seq.cycle.empty()) {
      fail(ErrorCode::ValidationError, "sequence \"" + name + "\" has an empty cycle");
    }
    for (int idx : seq.preperiod) {
      if (idx < 1 || idx > static_cast<int>(generators.size())) {
        fail(ErrorCode::ValidationError,
             "sequence \"" + name + "\" references generator " + std::to_string(idx));
      }
    }
    for (int idx : seq.cycle) {
      if (idx < 1 || idx > static_cast<int>(generators.size())) {
        fail(ErrorCode::ValidationError,
             "sequence \"" + name + "\" references generator " + std::to_string(idx));
      }
    }
  }
  if (budget.max_words <= 0 || budget.max_digits <= 0) {
    fail(ErrorCode::ValidationError, "budgets must be positive");
  }
}

}  // namespace orbitline
