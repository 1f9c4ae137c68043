#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "bigramsey/natural.hpp"
#include "bigramsey/verify.hpp"

using namespace bigramsey;

namespace {

const CheckEntry* find(const Report& r, const std::string& name) {
  for (const auto& e : r.entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("finite degree oracle") {
  CHECK(finite_degree_oracle(4, 2, 2) == 2);
  CHECK(finite_degree_oracle(3, 3, 5) == 1);
  CHECK(finite_degree_oracle(5, 2, 3) == 3);
  CHECK(finite_degree_oracle(2, 3, 2) == 1);  // no embeddings at all
  for (std::size_t c = 0; c <= 5; ++c) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t k = 1; k <= 2; ++k) {
        CHECK(finite_degree_oracle(c, n, k) == finite_degree_oracle_serial(c, n, k));
      }
    }
  }
  CHECK_THROWS_AS(finite_degree_oracle(8, 2, 3), ResourceError);
  CHECK_THROWS_AS(finite_degree_oracle(3, 1, 0), std::invalid_argument);
}

TEST_CASE("finite convention report") {
  const Report r = check_finite_convention(5, 3, 3);
  CHECK(r.ok());
  CHECK(r.count(CheckStatus::fail) == 0);
  CHECK(!r.entries.empty());
}

TEST_CASE("type counts") {
  const Report r = check_type_counts(4, 4);
  CHECK(r.ok());
  const auto* strict = find(r, "|Stp|(n=3, m=2)");
  REQUIRE(strict != nullptr);
  CHECK(strict->actual == "8");
  const auto* ones = find(r, "|Q|(1,1,1)");
  REQUIRE(ones != nullptr);
  CHECK(ones->actual == "13");
  const auto* two = find(r, "|Q| vs ordered Bell number(2)");
  REQUIRE(two != nullptr);
  CHECK(two->status == CheckStatus::flagged);
  CHECK(two->expected == "3");
  CHECK(two->actual == "1");
  CHECK(r.count(CheckStatus::flagged) >= 1);
  CHECK_THROWS_AS(check_type_counts(7, 2), ResourceError);
}

TEST_CASE("round trips") {
  const Report r = check_roundtrips();
  std::ostringstream os;
  print(os, r);
  INFO(os.str());
  CHECK(r.ok());
  CHECK(r.count(CheckStatus::flagged) == 1);  // the non-realizable 7 -> w*5 type
  CHECK_THROWS_AS(check_roundtrips(RoundtripCaps{5, 3, 3, 6, 4}), ResourceError);
}

TEST_CASE("report rendering is deterministic") {
  Report r;
  r.add("a", "1", "1");
  r.flag("b", "3", "1");
  r.add("c", "2", "5");
  CHECK_FALSE(r.ok());
  CHECK(r.count(CheckStatus::pass) == 1);
  const auto j = to_json(r);
  CHECK(j["failed"] == 1);
  CHECK(j["flagged"] == 1);
  CHECK(j.dump() == to_json(r).dump());
  std::ostringstream os;
  print(os, r);
  CHECK(os.str().find("[flagged] b: expected 3, got 1") != std::string::npos);
}
