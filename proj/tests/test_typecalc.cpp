#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bigramsey/degrees.hpp"
#include "bigramsey/typecalc.hpp"
#include "bigramsey/worked_examples.hpp"

using namespace bigramsey;

namespace {

std::shared_ptr<const Codomain> share(Codomain c) { return std::make_shared<const Codomain>(std::move(c)); }

// Strictly increasing relabeling x -> 3x + 1 applied to a codomain and an embedding.
FiniteChain stretch(const FiniteChain& c) {
  std::vector<Label> xs;
  for (Label x : c.elements()) xs.push_back(3 * x + 1);
  return FiniteChain(std::move(xs));
}

}  // namespace

TEST_CASE("counters") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(2, 5) == 0);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(0, 0) == 1);
  const std::vector<int> ordered_bell{1, 3, 13, 75, 541};
  for (std::size_t s = 1; s <= 5; ++s) CHECK(fubini(s) == ordered_bell[s - 1]);
}

TEST_CASE("leveled 9 -> w*4 example") {
  const auto f = examples::leveled_9_into_4();
  const auto t = mult_type(f);
  CHECK(t.p == std::vector<std::size_t>{3, 4, 0, 2});
  CHECK(t.blocks == std::vector<std::vector<std::size_t>>{{3}, {0}, {1, 4, 7}, {5}, {2, 6}, {8}});
  CHECK(t.rank() == 6);
  CHECK(mult_val(f) == FiniteChain({1, 2, 3, 5, 8, 9}));
  CHECK(is_realizable(t));
  CHECK_FALSE(t.is_strict());
  CHECK(reconstruct_mult(t, mult_val(f), f.codomain_ptr()) == f);
}

TEST_CASE("7 -> w*5 read-off") {
  const auto t = examples::type_7_into_5();
  const auto pts = reconstruct_mult_points(t, examples::values_7_into_5());
  CHECK(pts == std::vector<Point>{{25, 1}, {19, 1}, {25, 2}, {13, 4}, {43, 4}, {43, 4}, {25, 4}});
  // Indices 4 and 5 share level 4 and a block, so no embedding has this type.
  CHECK_FALSE(is_realizable(t));
  CHECK_THROWS_AS(reconstruct_mult(t, examples::values_7_into_5()), std::invalid_argument);
}

TEST_CASE("strict types and words") {
  const auto t = examples::strict_7_into_4();
  CHECK(t.is_strict());
  CHECK(word_to_string(strict_to_word(t), 4) == "2302202");
  CHECK(word_to_strict(word_from_string("2302202"), 4) == t);
  CHECK(word_to_string({10, 0, 3}, 11) == "10,0,3");
  CHECK(word_from_string("10,0,3") == Word{10, 0, 3});
  CHECK_THROWS_AS(strict_to_word(mult_type(examples::leveled_9_into_4())), std::invalid_argument);

  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto listed = enum_strict(n, m);
      CHECK(Natural(listed.size()) == nat_pow(m, n));
      for (std::size_t i = 0; i < listed.size(); ++i) {
        std::size_t code = 0;
        for (std::size_t letter : strict_to_word(listed[i])) code = code * m + letter;
        CHECK(code == i);
      }
    }
  }
}

TEST_CASE("power 12 -> w^4 example") {
  const auto f = examples::power_12_into_4();
  const auto t = power_type(f);
  CHECK(t.height == 4);
  CHECK(t.leaves() == 12);
  CHECK(t.out_degrees() == std::vector<std::size_t>{3, 2, 3, 2, 1, 1, 1, 1, 1, 2, 2, 2, 2, 1, 1, 1, 1, 2, 1, 1});
  CHECK(power_val(f) == examples::power_12_into_4_val());
  CHECK(reconstruct_power(t, power_val(f), f.codomain_ptr()) == f);
  // Without a codomain the base is the union of labels; the images are the same.
  CHECK(reconstruct_power(t, power_val(f)).images() == f.images());
}

TEST_CASE("additive types") {
  const auto c = share(SumTail{FiniteChain::iota(3), 3});
  // Every type is realized once |U| >= n.
  for (std::size_t n = 0; n <= 3; ++n) {
    std::set<std::vector<std::size_t>> seen;
    for (const auto& f : enumerate_embeddings(n, *c)) {
      const auto t = additive_type(f);
      seen.insert(t.tau);
      CHECK(reconstruct_additive(t, additive_val(f), c) == f);
    }
    std::set<std::vector<std::size_t>> listed;
    for (const auto& t : enum_additive(n, 3)) listed.insert(t.tau);
    CHECK(seen == listed);
  }
  const auto first = enum_additive(2, 3);
  CHECK(first.front().tau.empty());
  CHECK(first.size() == 7);
}

TEST_CASE("enumerations agree with realized types") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const Leveled levels{std::vector<FiniteChain>(m, FiniteChain::iota(n))};
      std::set<std::pair<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>>> realized, listed;
      for (const auto& f : enumerate_embeddings(n, levels)) {
        const auto t = mult_type(f);
        CHECK(is_realizable(t));
        realized.emplace(t.p, t.blocks);
      }
      const auto all = enum_mult(n, m);
      for (const auto& t : all) listed.emplace(t.p, t.blocks);
      CHECK(listed.size() == all.size());
      CHECK(realized == listed);

      std::set<std::vector<std::size_t>> trees_seen, trees_listed;
      for (const auto& f : enumerate_embeddings(n, Power{FiniteChain::iota(n), m})) {
        trees_seen.insert(power_type(f).out_degrees());
      }
      const auto trees = enum_power(n, m);
      for (const auto& t : trees) trees_listed.insert(t.out_degrees());
      CHECK(trees_listed.size() == trees.size());
      CHECK(trees_seen == trees_listed);
    }
  }
  // Height-2 trees with n leaves are compositions of n.
  for (std::size_t n = 1; n <= 6; ++n) CHECK(enum_power(n, 2).size() == (std::size_t{1} << (n - 1)));
}

TEST_CASE("enum_mult ordering") {
  const auto all = enum_mult(2, 2);
  REQUIRE(!all.empty());
  CHECK(all.front().p == std::vector<std::size_t>{2, 0});
  CHECK(all.back().p == std::vector<std::size_t>{0, 2});
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto& a = all[i - 1];
    const auto& b = all[i];
    if (a.p == b.p) {
      CHECK((a.rank() < b.rank() || (a.rank() == b.rank() && a.block_index() < b.block_index())));
    } else {
      CHECK(a.p > b.p);
    }
  }
}

TEST_CASE("types are invariant under order isomorphism") {
  const Leveled base{{FiniteChain::iota(3), FiniteChain({0, 2, 3})}};
  Leveled moved;
  for (const auto& l : base.levels) moved.levels.push_back(stretch(l));
  const auto moved_c = share(moved);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& f : enumerate_embeddings(n, base)) {
      std::vector<Point> images;
      for (const auto& p : f.images()) images.push_back({3 * p[0] + 1, p[1]});
      const Embedding g(moved_c, images);
      CHECK(mult_type(g) == mult_type(f));
      CHECK(mult_val(g) == stretch(mult_val(f)));
    }
  }
  const Power pbase{FiniteChain::iota(3), 2};
  const auto pmoved = share(Power{stretch(pbase.base), 2});
  for (const auto& f : enumerate_embeddings(3, pbase)) {
    std::vector<Point> images;
    for (const auto& p : f.images()) images.push_back({3 * p[0] + 1, 3 * p[1] + 1});
    CHECK(power_type(Embedding(pmoved, images)) == power_type(f));
  }
}

TEST_CASE("product types: closed-form rank profile against enumeration") {
  const std::vector<std::vector<std::size_t>> cases{{1}, {2}, {1, 1}, {1, 1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1, 2}, {1, 1, 1, 1}};
  for (const auto& parts : cases) {
    const auto listed = enum_product_types(parts);
    const auto profile = product_type_rank_counts(parts);
    std::vector<Natural> by_rank(profile.size(), 0);
    for (const auto& t : listed) {
      CHECK(t.p == parts);
      REQUIRE(t.rank() < by_rank.size());
      by_rank[t.rank()] += 1;
    }
    CHECK(by_rank == profile);

    // product_bound on an arbitrary table equals the enumeration sum.
    DegreeTable table;
    for (std::size_t j = 0; j <= 8; ++j) table.push_back(Natural(j * j + 1));
    Natural oracle = 0;
    for (const auto& t : listed) oracle += table[t.rank()];
    CHECK(product_bound(parts, table) == oracle);
  }
  const DegreeTable ones(8, 1);
  CHECK(product_bound(std::vector<std::size_t>{1, 1}, ones) == 3);
  CHECK(product_bound(std::vector<std::size_t>{2}, ones) == 1);
  CHECK(product_bound(std::vector<std::size_t>{1, 1, 1}, ones) == 13);
}

TEST_CASE("type json") {
  const auto t = examples::strict_7_into_4();
  const auto j = to_json(t);
  CHECK(j["rank"] == 7);
  CHECK(j["p"] == nlohmann::json({2, 0, 4, 1}));
  CHECK(to_json(power_type(examples::power_12_into_4()))["height"] == 4);
}
