#include "tropgw/perm_hurwitz.hpp"
#include "tropgw/trop_covers.hpp"

#include <doctest.h>

using namespace tropgw;

namespace {

DescendantProblem disconnected(Partition mu, Partition nu, std::vector<int> ks) {
  return DescendantProblem{std::move(mu), std::move(nu), std::move(ks), false, std::nullopt};
}

}  // namespace

TEST_CASE("single-vertex descendant covers") {
  CHECK(descendant_invariant(disconnected({2}, {1, 1}, {1})) == make_rational(1, 2));
  CHECK(descendant_invariant(disconnected({1}, {1}, {0})) == 1);
  CHECK(descendant_invariant(disconnected({2}, {2}, {2})) == make_rational(7, 24));
  CHECK(descendant_invariant(disconnected({2}, {2}, {1})) == 0);
  CHECK(descendant_invariant(disconnected({1, 1}, {1, 1}, {0})) == 1);
  CHECK(descendant_invariant(disconnected({2, 1}, {2, 1}, {0})) == make_rational(3, 2));
  const auto covers = enumerate_descendant_covers(disconnected({2}, {1, 1}, {1}));
  REQUIRE(covers.size() == 1);
  CHECK(covers[0].multiplicity.automorphisms == 2);
}

TEST_CASE("covers without insertions are lines") {
  for (const auto& mu : enumerate_partitions(4)) {
    CHECK(descendant_invariant(disconnected(mu, mu, {})) == 1 / centralizer_rational(mu));
  }
}

TEST_CASE("degree-four example covers") {
  const auto covers = enumerate_descendant_covers(disconnected({1, 1, 1, 1}, {1, 1, 1, 1}, {3, 3}));
  bool found_a = false, found_b = false;
  for (const auto& c : covers) {
    const auto& v = c.cover.vertices;
    if (v.size() != 2) continue;
    if (c.multiplicity.total == make_rational(4, 576)) found_a = true;
    bool line = false;
    for (const auto& e : c.cover.edges) line = line || (e.from == kLeftEnd && e.to == kRightEnd);
    if (c.multiplicity.total == make_rational(2, 36) && line) found_b = true;
  }
  CHECK(found_a);
  CHECK(found_b);
  for (const auto& c : covers) {
    CHECK(c.cover.genus == 0);
    for (std::size_t i = 0; i < c.cover.vertices.size(); ++i) {
      const auto star = vertex_star(c.cover, static_cast<int>(i));
      CHECK(star.in.size() == star.out.size());
      CHECK(star.in.length() + star.out.length() == 5 - 2 * c.cover.vertices[i].genus);
    }
  }
}

TEST_CASE("reversal symmetry") {
  const std::vector<std::vector<int>> ks{{1, 2}, {0, 3}, {2, 2}};
  for (const auto& k : ks) {
    const std::vector<int> rk(k.rbegin(), k.rend());
    CHECK(descendant_invariant(disconnected({2, 1}, {3}, k)) == descendant_invariant(disconnected({3}, {2, 1}, rk)));
  }
}

TEST_CASE("caterpillar covers match brute force") {
  CHECK(tropical_hurwitz(HurwitzTarget{HurwitzTarget::Shape::Caterpillar, {{2}, {2}}, false, std::nullopt}, 2) ==
        make_rational(1, 2));
  for (int d = 1; d <= 3; ++d) {
    const auto parts = enumerate_partitions(d);
    for (std::size_t n = 0; n <= 4; ++n) {
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        std::vector<Partition> prof;
        for (auto i : idx) prof.push_back(parts[i]);
        const HurwitzProblem p{d, 0, prof, false, std::nullopt};
        CHECK(tropical_hurwitz(HurwitzTarget{HurwitzTarget::Shape::Caterpillar, prof, false, std::nullopt}, d) ==
              hurwitz_class_algebra(p));
        const HurwitzProblem pc{d, 0, prof, true, std::nullopt};
        CHECK(tropical_hurwitz(HurwitzTarget{HurwitzTarget::Shape::Caterpillar, prof, true, std::nullopt}, d) ==
              hurwitz_bruteforce(pc));
        std::size_t i = 0;
        while (i < n && ++idx[i] == parts.size()) idx[i++] = 0;
        if (i == n) break;
      }
    }
  }
}

TEST_CASE("cycle covers match brute force") {
  CHECK(tropical_hurwitz(HurwitzTarget{HurwitzTarget::Shape::Cycle, {}, false, std::nullopt}, 2) == 2);
  for (int d = 1; d <= 3; ++d) {
    const auto parts = enumerate_partitions(d);
    for (std::size_t n = 0; n <= 2; ++n) {
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        std::vector<Partition> prof;
        for (auto i : idx) prof.push_back(parts[i]);
        const HurwitzProblem p{d, 1, prof, false, std::nullopt};
        CHECK(tropical_hurwitz(HurwitzTarget{HurwitzTarget::Shape::Cycle, prof, false, std::nullopt}, d) ==
              hurwitz_class_algebra(p));
        std::size_t i = 0;
        while (i < n && ++idx[i] == parts.size()) idx[i++] = 0;
        if (i == n) break;
      }
    }
  }
}

TEST_CASE("splitting identity") {
  const std::vector<std::pair<std::pair<Partition, Partition>, std::vector<int>>> cases{
      {{{2}, {2}}, {1, 1}}, {{{2}, {1, 1}}, {1}}, {{{1}, {1}}, {0, 0, 0}}, {{{2, 1}, {3}}, {1, 2}}};
  for (const auto& [ends, ks] : cases) {
    for (const auto& c : split_at_point(ends.first, ends.second, ks)) CHECK(c.holds());
  }
}

TEST_CASE("automorphisms and canonical keys") {
  TropicalCover a;
  a.degree = 2;
  a.vertices = {{0, 0}, {0, 0}};
  a.edges = {{kLeftEnd, 0, 1, 1, false}, {kLeftEnd, 1, 1, 1, false}, {0, kRightEnd, 1, 1, false}, {1, kRightEnd, 1, 1, false}};
  a.vertical_ends = {{0, 1, 1, true}, {1, 1, 1, true}};
  CHECK(automorphism_count(a) == 2);
  CHECK(cover_genus(a) == -1);
  CHECK_FALSE(cover_connected(a));
  TropicalCover b = a;
  std::swap(b.vertices[0], b.vertices[1]);
  CHECK(canonical_key(a) == canonical_key(b));
}
