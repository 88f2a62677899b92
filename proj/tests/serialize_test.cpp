#include "tropgw/local_gw.hpp"
#include "tropgw/serialize.hpp"

#include <doctest.h>

using namespace tropgw;

TEST_CASE("rationals as strings") {
  CHECK(to_json(make_rational(7, 24)) == "7/24");
  CHECK(to_json(Rational(3)) == "3");
  CHECK(rational_from_json(Json("-5/10")) == make_rational(-1, 2));
  CHECK(rational_from_json(Json(4)) == 4);
}

TEST_CASE("completed cycle json") {
  CHECK(to_json(completion_coefficients(1).expansion).dump() == R"({"2":"1"})");
}

TEST_CASE("cover round trip and determinism") {
  const auto covers =
      enumerate_descendant_covers(DescendantProblem{{1, 1, 1, 1}, {1, 1, 1, 1}, {3, 3}, false, std::nullopt});
  REQUIRE(!covers.empty());
  for (const auto& c : covers) {
    const auto j = to_json(c.cover);
    const auto back = cover_from_json(j);
    CHECK(canonical_key(back) == canonical_key(c.cover));
    CHECK(to_json(back).dump() == j.dump());
    const auto dot = to_dot(c.cover);
    CHECK(dot.find("digraph") == 0);
  }
  CHECK(to_json(covers).dump() == to_json(enumerate_descendant_covers(DescendantProblem{
                                             {1, 1, 1, 1}, {1, 1, 1, 1}, {3, 3}, false, std::nullopt}))
                                      .dump());
  CHECK_THROWS_AS(cover_from_json(Json::object()), std::invalid_argument);
}

TEST_CASE("feynman diagram dot") {
  const std::vector<HeisenbergMonomial> product{{{1, 1}, 1}, {{-1, -1}, 1}};
  const auto r = wick_expectation(product);
  CHECK(r.value == 2);
  REQUIRE(r.diagrams.size() == 2);
  CHECK(to_dot(r.diagrams[0], product).find("m0 -> m1") != std::string::npos);
  CHECK(to_json(r.diagrams[0])["weight"] == "1");
}
