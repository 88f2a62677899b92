#include "tropgw/local_gw.hpp"

#include <doctest.h>

using namespace tropgw;

TEST_CASE("worked vertex multiplicities") {
  CHECK(vertex_multiplicity(1, {1, 1}, {2}) == make_rational(5, 24));
  CHECK(vertex_multiplicity(1, {1}, {1}) == make_rational(1, 24));
  CHECK(genus_one_closed_form({3}, {3}) == make_rational(17, 24));
  CHECK(vertex_multiplicity(1, {3}, {3}) == make_rational(17, 24));
  CHECK_THROWS_AS(vertex_multiplicity(0, {2}, {1}), std::invalid_argument);
}

TEST_CASE("genus zero and one identities up to size 6") {
  for (int d = 1; d <= 6; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      for (const auto& nu : enumerate_partitions(d)) {
        CHECK(vertex_multiplicity(0, mu, nu) == 1);
        CHECK(vertex_multiplicity(1, mu, nu) == genus_one_closed_form(mu, nu));
        CHECK(vertex_multiplicity(2, mu, nu) == vertex_multiplicity(2, nu, mu));
      }
    }
  }
}

TEST_CASE("one-point invariants") {
  CHECK(one_point_invariant({1}, 0) == 1);
  CHECK(one_point_invariant({1}, 1) == 0);
  CHECK(one_point_invariant({2}, 1) == make_rational(1, 2));
}

TEST_CASE("completed cycles") {
  CHECK(completion_coefficients(1).expansion == WElement::basis({2}));
  CHECK(completion_coefficients(0).expansion == WElement::basis({1}));
  const WElement three = WElement::basis({3}) + WElement::basis({1, 1}) + WElement::basis({1}, make_rational(1, 12));
  CHECK(completion_coefficients(2).expansion == three);
  const WElement four = WElement::basis({4}) + WElement::basis({2, 1}, 2) + WElement::basis({2}, make_rational(5, 4));
  CHECK(completion_coefficients(3).expansion == four);
  for (int k = 0; k <= 6; ++k) {
    const auto cc = completion_coefficients(k);
    CHECK(cc.expansion.coefficient(Partition{k + 1}) == 1);
    for (const auto& [lambda, c] : cc.expansion.terms()) {
      CHECK(sgn(c) > 0);
      CHECK(lambda.size() <= k + 1);
    }
  }
}

TEST_CASE("linear-system route") {
  CHECK(solve_completion_by_correspondence(1, 3) == WElement::basis({2}));
  for (int k = 0; k <= 3; ++k) {
    CHECK(solve_completion_by_correspondence(k, k + 2) == completion_coefficients(k).expansion);
  }
}
