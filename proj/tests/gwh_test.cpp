#include "tropgw/gwh.hpp"
#include "tropgw/perm_hurwitz.hpp"
#include "tropgw/trop_covers.hpp"

#include <doctest.h>

#include <set>

using namespace tropgw;

namespace {

DescendantProblem disconnected(Partition mu, Partition nu, std::vector<int> ks) {
  return DescendantProblem{std::move(mu), std::move(nu), std::move(ks), false, std::nullopt};
}

}  // namespace

TEST_CASE("local expansion reproduces vertex data") {
  const auto x = local_expand(VertexData{0, {2}, {1, 1}});
  CHECK(x.total == make_rational(1, 2));
  for (int d = 1; d <= 4; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      for (const auto& nu : enumerate_partitions(d)) {
        for (int g = 0; g <= 2; ++g) {
          // local_expand throws on a mismatch
          const auto e = local_expand(VertexData{g, mu, nu});
          for (const auto& t : e.terms) {
            CHECK(t.marked_profile.length() > 0);
            for (const auto& v : t.vertices) CHECK(v.marked.length() > 0);
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(local_expand(VertexData{0, {2}, {1}}), std::invalid_argument);
}

TEST_CASE("attaching vertical ends at a k=3 vertex") {
  const auto e = local_expand(VertexData{1, {2, 2}, {4}});
  REQUIRE(e.terms.size() == 3);
  int lowered = 0;
  for (const auto& t : e.terms)
    if (t.genus == 0) ++lowered;
  CHECK(lowered == 2);

  // splitting into two components, each with a marked end
  const auto split = local_expand(VertexData{0, {2, 1, 1}, {2, 2}});
  bool two_components = false;
  for (const auto& t : split.terms) {
    if (t.vertices.size() == 2) two_components = true;
    for (const auto& v : t.vertices) CHECK(v.marked.length() > 0);
  }
  CHECK(two_components);
}

TEST_CASE("surgery on the degree-four example") {
  const auto covers = enumerate_descendant_covers(disconnected({1, 1, 1, 1}, {1, 1, 1, 1}, {3, 3}));
  bool seen_aut4 = false, seen_small = false;
  for (const auto& c : covers) {
    const auto s = tgwh_surgery(c.cover, {3, 3});
    CHECK(s.total == c.multiplicity.total);
    for (const auto& entry : s.entries) {
      if (entry.multiplicity.automorphisms == 4 && entry.contribution == make_rational(2, 36)) seen_aut4 = true;
      if (entry.contribution == make_rational(4, 576)) seen_small = true;
    }
  }
  CHECK(seen_aut4);
  CHECK(seen_small);
}

TEST_CASE("surgery totals match cover multiplicities") {
  for (int d = 1; d <= 3; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      for (const auto& nu : enumerate_partitions(d)) {
        for (int k = 0; k <= 4; ++k) {
          for (const auto& c : enumerate_descendant_covers(disconnected(mu, nu, {k}))) {
            CHECK(tgwh_surgery(c.cover, {k}).total == c.multiplicity.total);
          }
        }
      }
    }
  }
}

TEST_CASE("collapse inverts the surgery and the surgery is injective") {
  const std::vector<std::pair<std::pair<Partition, Partition>, std::vector<int>>> cases{
      {{{1, 1, 1, 1}, {1, 1, 1, 1}}, {3, 3}},
      {{{2, 1}, {1, 1, 1}}, {1, 2}},
      {{{2}, {1, 1}}, {1}},
      {{{3}, {2, 1}}, {2, 2}},
  };
  for (const auto& [ends, ks] : cases) {
    std::set<std::string> images;
    std::size_t produced = 0;
    for (const auto& c : enumerate_descendant_covers(disconnected(ends.first, ends.second, ks))) {
      const auto s = tgwh_surgery(c.cover, ks);
      for (const auto& entry : s.entries) {
        CHECK(canonical_key(collapse_surgery_cover(entry.cover, ks)) == canonical_key(c.cover));
        images.insert(canonical_key(entry.cover));
        ++produced;
      }
    }
    CHECK(images.size() == produced);
  }
}

TEST_CASE("substitution agrees with tropical counting") {
  CHECK(substitute_and_evaluate({2}, {2}, {2}) == make_rational(7, 24));
  CHECK(substitute_and_evaluate({1}, {1}, {0}) == 1);
  CHECK(substitute_and_evaluate({2}, {1, 1}, {1}) == make_rational(1, 2));
  CHECK(substitute_and_evaluate({1, 1, 1, 1}, {1, 1, 1, 1}, {3, 3}) ==
        descendant_invariant(disconnected({1, 1, 1, 1}, {1, 1, 1, 1}, {3, 3})));
  for (int d = 1; d <= 3; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      for (const auto& nu : enumerate_partitions(d)) {
        for (int k1 = 0; k1 <= 3; ++k1) {
          for (int k2 = 0; k2 <= 3; ++k2) {
            CHECK(substitute_and_evaluate(mu, nu, {k1, k2}) == descendant_invariant(disconnected(mu, nu, {k1, k2})));
          }
        }
      }
    }
  }
}
