#include "tropgw/partition.hpp"

#include <doctest.h>

#include <set>

using namespace tropgw;

TEST_CASE("partition normalizes and validates") {
  CHECK(Partition{1, 2, 1}.parts() == std::vector<int>{2, 1, 1});
  CHECK(Partition{1, 2, 1}.size() == 4);
  CHECK(Partition().size() == 0);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("automorphism and centralizer counts") {
  CHECK(aut_count(Partition{1, 1, 2}) == 2);
  CHECK(aut_count(Partition()) == 1);
  CHECK(aut_count(Partition{1, 1, 1, 1}) == 24);
  CHECK(centralizer_size(Partition{2}) == 2);
  CHECK(centralizer_size(Partition{1, 1}) == 2);
  CHECK(centralizer_size(Partition{1, 1, 2}) == 4);
  CHECK(centralizer_rational(Partition{3, 3, 1}) == 18);
}

TEST_CASE("partition enumeration") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
  CHECK(enumerate_partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(enumerate_partitions(4, 2) == std::vector<Partition>{{4}, {3, 1}, {2, 2}});
  const std::vector<std::size_t> p = {1,  1,  2,   3,   5,   7,   11,  15,  22,  30, 42,
                                      56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
  for (int d = 0; d <= 20; ++d) {
    const auto all = enumerate_partitions(d);
    CHECK(all.size() == p[static_cast<std::size_t>(d)]);
    CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& mu : all) CHECK(mu.size() == d);
  }
}

TEST_CASE("tilde extension") {
  auto a = tilde_extend(Partition{2}, 4);
  REQUIRE(a);
  CHECK(a->extended == Partition{2, 1, 1});
  CHECK(a->weight == 1);
  auto b = tilde_extend(Partition{1}, 3);
  REQUIRE(b);
  CHECK(b->extended == Partition{1, 1, 1});
  CHECK(b->weight == 3);
  auto c = tilde_extend(Partition{3}, 3);
  REQUIRE(c);
  CHECK(c->extended == Partition{3});
  CHECK(c->weight == 1);
  CHECK_FALSE(tilde_extend(Partition{3}, 2).has_value());
}

TEST_CASE("sub-multisets") {
  const auto subs = sub_partitions(Partition{2, 1, 1});
  CHECK(subs.size() == 6);  // 2 choices for the 2, 3 for the ones
  CHECK(Partition{2, 1, 1}.without(Partition{1}) == Partition{2, 1});
  CHECK_THROWS_AS((Partition{2, 1}.without(Partition{3})), std::invalid_argument);
}

TEST_CASE("text format") {
  CHECK(to_string(Partition{1, 2, 1}) == "2,1,1");
  CHECK(to_string(Partition()) == "");
  CHECK(parse_partition("1,2,1") == Partition{2, 1, 1});
  CHECK(parse_partition("") == Partition());
  CHECK_THROWS_AS(parse_partition("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,0"), std::invalid_argument);
  CHECK(parse_profile_list("2;1,1") == std::vector<Partition>{{2}, {1, 1}});
  for (int d = 0; d <= 6; ++d)
    for (const auto& mu : enumerate_partitions(d)) CHECK(parse_partition(to_string(mu)) == mu);
}

TEST_CASE("W elements drop zero terms") {
  WElement w = WElement::basis(Partition{2}) + WElement::basis(Partition{1}, Rational(1, 3));
  CHECK(w.terms().size() == 2);
  w += WElement::basis(Partition{1}, Rational(-1, 3));
  CHECK(w == WElement::basis(Partition{2}));
  CHECK((Rational(0) * w).is_zero());
  CHECK(w.coefficient(Partition{5}) == 0);
}
