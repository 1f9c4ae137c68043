#ifndef BIGRAMSEY_WORKED_EXAMPLES_HPP
#define BIGRAMSEY_WORKED_EXAMPLES_HPP

// Reference embeddings and types used by the verification report and tests.

#include <memory>
#include <vector>

#include "bigramsey/chains.hpp"
#include "bigramsey/typecalc.hpp"

namespace bigramsey::examples {

/// f : 9 -> w*4, truncated to levels {0..9}.
inline Embedding leveled_9_into_4() {
  auto c = std::make_shared<const Codomain>(Leveled{std::vector<FiniteChain>(4, FiniteChain::iota(10))});
  return Embedding{c, {{2, 0}, {3, 0}, {8, 0}, {1, 1}, {3, 1}, {5, 1}, {8, 1}, {3, 3}, {9, 3}}};
}

/// (tau, V) with n = 7, m = 5; tau puts 4 and 5 (both on level 4) in one block.
inline MultiplicativeType type_7_into_5() {
  return MultiplicativeType{{0, 2, 1, 0, 4}, {{3}, {1}, {0, 2, 6}, {4, 5}}};
}
inline FiniteChain values_7_into_5() { return FiniteChain{{13, 19, 25, 43}}; }

/// Strict (7, 4)-type whose word is 2302202.
inline MultiplicativeType strict_7_into_4() {
  return MultiplicativeType{{2, 0, 4, 1}, {{2}, {6}, {0}, {3}, {4}, {1}, {5}}};
}

/// f : 12 -> w^4, coordinates (a_0, a_1, a_2, a_3), last one dominant.
/// f(3) is (2,3,6,0); the value (1,3,6,0) would repeat f(2).
inline Embedding power_12_into_4() {
  auto c = std::make_shared<const Codomain>(Power{FiniteChain::iota(9), 4});
  return Embedding{c,
                   {{0, 1, 0, 0}, {3, 1, 0, 0}, {1, 3, 6, 0}, {2, 3, 6, 0},
                    {5, 7, 0, 2}, {0, 8, 1, 2}, {1, 1, 3, 2}, {4, 0, 2, 5},
                    {1, 1, 2, 5}, {3, 1, 2, 5}, {5, 1, 4, 5}, {7, 2, 4, 5}}};
}

/// val of power_12_into_4, top to bottom and left to right.
inline ValTuple power_12_into_4_val() {
  return {FiniteChain{{0, 2, 5}}, FiniteChain{{0, 6}}, FiniteChain{{0, 1, 3}}, FiniteChain{{2, 4}},
          FiniteChain{{1}},       FiniteChain{{3}},    FiniteChain{{7}},       FiniteChain{{8}},
          FiniteChain{{1}},       FiniteChain{{0, 1}}, FiniteChain{{1, 2}},    FiniteChain{{0, 3}},
          FiniteChain{{1, 2}},    FiniteChain{{5}},    FiniteChain{{0}},       FiniteChain{{1}},
          FiniteChain{{4}},       FiniteChain{{1, 3}}, FiniteChain{{5}},       FiniteChain{{7}}};
}

}  // namespace bigramsey::examples

#endif  // BIGRAMSEY_WORKED_EXAMPLES_HPP
