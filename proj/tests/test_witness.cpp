#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bigramsey/typecalc.hpp"
#include "bigramsey/witness.hpp"

using namespace bigramsey;

TEST_CASE("spread") {
  const auto levels = spread(FiniteChain::iota(6), 2);
  REQUIRE(levels.size() == 2);
  CHECK(levels[0] == FiniteChain({0, 2, 4}));
  CHECK(levels[1] == FiniteChain({1, 3, 5}));
  CHECK(spread(FiniteChain({3, 8}), 1) == std::vector<FiniteChain>{FiniteChain({3, 8})});
  CHECK_THROWS_AS(spread(FiniteChain::iota(2), 3), std::invalid_argument);
}

TEST_CASE("additive witness") {
  const auto c = std::make_shared<const Codomain>(SumTail{FiniteChain::iota(3), 2});
  const Coloring chi = chi_star_additive(2, 2);
  CHECK(chi.palette == 4);
  CHECK(chi.color_of(Embedding(c, {{0, 0}, {2, 0}})) == 0);
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const Coloring w = chi_star_additive(n, m);
      Natural palette = 0;
      for (std::size_t j = 0; j <= n; ++j) palette += binom(m, j);
      CHECK(Natural(w.palette) == palette);
      CHECK(realized_colors(w, SumTail{FiniteChain::iota(n), m}).size() == w.palette);
    }
  }
}

TEST_CASE("strict witness") {
  const Coloring chi = chi_star_strict(2, 2);
  CHECK(chi.palette == 4);
  // Two points with the same value on different levels: not strict, so color 0.
  const auto shared = std::make_shared<const Codomain>(Leveled{{FiniteChain::iota(3), FiniteChain::iota(3)}});
  for (const auto& f : enumerate_embeddings(2, *shared)) {
    if (!mult_type(f).is_strict()) CHECK(chi.color_of(f) == 0);
  }
  CHECK(realized_colors(chi_star_strict(1, 3), Leveled{spread(FiniteChain::iota(3), 3)}).size() == 3);

  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const Coloring w = chi_star_strict(n, m);
      const Leveled levels{spread(FiniteChain::iota(n * m), m)};
      CHECK(Natural(realized_colors(w, levels).size()) == nat_pow(m, n));
      // Non-strict exclusion: every embedding into spread levels has a strict type.
      for (const auto& f : enumerate_embeddings(n, levels)) CHECK(mult_type(f).is_strict());
    }
  }
}

TEST_CASE("colors depend only on the type") {
  const Coloring chi = chi_star_strict(3, 2);
  const Leveled a{spread(FiniteChain::iota(6), 2)};
  const Leveled b{{FiniteChain({1, 10, 11}), FiniteChain({4, 12, 30})}};
  const auto fa = enumerate_embeddings(3, a);
  const auto fb = enumerate_embeddings(3, b);
  REQUIRE(fa.size() == fb.size());
  for (std::size_t i = 0; i < fa.size(); ++i) {
    for (std::size_t j = 0; j < fb.size(); ++j) {
      if (mult_type(fa[i]) == mult_type(fb[j])) CHECK(chi.color_of(fa[i]) == chi.color_of(fb[j]));
    }
  }
}

TEST_CASE("product witness") {
  CHECK(chi_star_product(std::vector<std::size_t>{3}).palette == 1);
  CHECK(realized_product_colors(std::vector<std::size_t>{3}, FiniteChain::iota(4)).size() == 1);
  for (std::size_t u = 2; u <= 3; ++u) {
    CHECK(realized_product_colors(std::vector<std::size_t>{1, 1}, FiniteChain::iota(u)).size() == 3);
  }
  for (const auto& parts : std::vector<std::vector<std::size_t>>{{1, 1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    std::size_t total = 0;
    for (std::size_t x : parts) total += x;
    CHECK(realized_product_colors(parts, FiniteChain::iota(total)).size() ==
          enum_product_types(parts).size());
  }
  const Coloring chi = chi_star_product(std::vector<std::size_t>{1, 1});
  const auto wrong = std::make_shared<const Codomain>(Leveled{{FiniteChain::iota(2), FiniteChain::iota(2)}});
  CHECK_THROWS_AS(chi.color_of(Embedding(wrong, {{0, 0}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("parallel and serial realization agree") {
  const Coloring strict = chi_star_strict(3, 3);
  const Leveled levels{{FiniteChain::iota(4), FiniteChain::iota(3), FiniteChain({0, 5})}};
  CHECK(realized_colors(strict, levels) == realized_colors_serial(strict, levels));
  const Coloring add = chi_star_additive(3, 2);
  const SumTail tail{FiniteChain::iota(2), 2};
  CHECK(realized_colors(add, tail) == realized_colors_serial(add, tail));
  CHECK(realized_colors(add, SumTail{FiniteChain{}, 2}).empty());
  CHECK(realized_colors(add, SumTail{FiniteChain{}, 0}).empty());
}
