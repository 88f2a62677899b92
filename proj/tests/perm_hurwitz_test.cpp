#include "tropgw/perm_hurwitz.hpp"

#include <doctest.h>

using namespace tropgw;

namespace {

Rational brute(int d, int h, std::vector<Partition> prof, bool connected) {
  return hurwitz_bruteforce(HurwitzProblem{d, h, std::move(prof), connected, std::nullopt});
}

}  // namespace

TEST_CASE("degree two worked values") {
  CHECK(brute(2, 0, {{2}, {2}}, true) == make_rational(1, 2));
  CHECK(brute(2, 0, {{2}, {2}}, false) == make_rational(1, 2));
  CHECK(brute(2, 0, {{1, 1}, {1, 1}}, true) == 0);
  CHECK(brute(2, 0, {{1, 1}, {1, 1}}, false) == make_rational(1, 2));
  CHECK(brute(2, 1, {}, false) == 2);
}

TEST_CASE("Riemann-Hurwitz genus") {
  std::vector<Partition> four_transpositions{{2, 1}, {2, 1}, {2, 1}, {2, 1}};
  CHECK(riemann_hurwitz_genus(3, 0, four_transpositions) == 0);
  std::vector<Partition> odd{{2, 1}};
  CHECK_FALSE(riemann_hurwitz_genus(3, 0, odd).has_value());
  CHECK(riemann_hurwitz_genus(2, 1, {}) == 1);
}

TEST_CASE("genus-zero simple Hurwitz numbers match Hurwitz's formula") {
  // H = r!/|Aut mu| * d^{l-3} * prod mu_i^mu_i / mu_i!, r = d + l - 2 simple points
  for (int d = 1; d <= 5; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      const int r = d + mu.length() - 2;
      if (r < 1) continue;
      std::vector<int> t(static_cast<std::size_t>(d - 1), 1);
      t[0] = 2;
      std::vector<Partition> prof{mu};
      for (int i = 0; i < r; ++i) prof.emplace_back(t);
      Rational expected = Rational(factorial(static_cast<unsigned>(r))) / Rational(static_cast<unsigned long>(aut_count(mu)));
      for (int i = 0; i < mu.length() - 3; ++i) expected *= d;
      for (int i = mu.length(); i < 3; ++i) expected /= d;
      for (int m : mu) {
        Rational f = 1;
        for (int i = 0; i < m; ++i) f *= m;
        expected *= f / Rational(factorial(static_cast<unsigned>(m)));
      }
      CHECK(brute(d, 0, prof, true) == expected);
    }
  }
}

TEST_CASE("class algebra") {
  auto c2 = ClassAlgebraElement::class_sum({2});
  CHECK(c2 * c2 == ClassAlgebraElement::class_sum({1, 1}));
  auto k = ClassAlgebraElement::genus_adding(2);
  auto expected = ClassAlgebraElement(2);
  expected.set_coefficient({1, 1}, 4);
  CHECK(k == expected);
  CHECK(conjugacy_class_size({2, 1}) == 3);
  CHECK(conjugacy_class_size({3, 2, 1, 1}) == 420);
}

TEST_CASE("brute force agrees with class algebra for d <= 4, h <= 1") {
  for (int d = 1; d <= 4; ++d) {
    const auto parts = enumerate_partitions(d);
    for (int h = 0; h <= 1; ++h) {
      for (std::size_t n = 0; n <= (h == 0 ? 3u : 1u); ++n) {
        std::vector<std::size_t> idx(n, 0);
        while (true) {
          std::vector<Partition> prof;
          for (auto i : idx) prof.push_back(parts[i]);
          HurwitzProblem p{d, h, prof, false, std::nullopt};
          CHECK(hurwitz_bruteforce(p) == hurwitz_class_algebra(p));
          p.connected = true;
          CHECK(hurwitz_bruteforce(p) == connected_from_disconnected(d, h, prof));
          CHECK(disconnected_from_connected(d, h, prof) == hurwitz_class_algebra(HurwitzProblem{d, h, prof, false, std::nullopt}));
          std::size_t i = 0;
          while (i < n && ++idx[i] == parts.size()) idx[i++] = 0;
          if (i == n) break;
        }
      }
    }
  }
}

TEST_CASE("local Hurwitz numbers") {
  std::vector<Partition> a{{2}, {2}, {1, 1}};
  CHECK(local_hurwitz(0, 0, a) == 1);
  std::vector<Partition> b{{3}, {2, 1}, {2, 1}};
  CHECK(local_hurwitz(0, 0, b) == 1);
  std::vector<Partition> c{{1}, {1}, {1}};
  CHECK(local_hurwitz(0, 0, c) == 1);
}

TEST_CASE("extended Hurwitz conventions") {
  std::vector<Partition> empty_profiles{Partition{}, Partition{}};
  CHECK(eval_hurwitz_extended(0, empty_profiles) == 1);
  std::vector<Partition> oversize{{3}, {2}};
  CHECK(eval_hurwitz_extended(2, oversize) == 0);
  // (2) padded to (2,1) at d=3 with weight C(0+1,1) = 1
  std::vector<Partition> padded{{2}, {2, 1}, {3}, {3}};
  std::vector<Partition> full{{2, 1}, {2, 1}, {3}, {3}};
  CHECK(eval_hurwitz_extended(3, padded) == eval_hurwitz_extended(3, full));
  // (1) padded to (1,1) at d=2 with weight C(1+1,1) = 2
  std::vector<Partition> one{{1}, {2}, {2}};
  std::vector<Partition> ones{{1, 1}, {2}, {2}};
  CHECK(eval_hurwitz_extended(2, one) == 2 * eval_hurwitz_extended(2, ones));
  std::vector<WElement> w{WElement::basis({1}, 3) + WElement::basis({1, 1}), WElement::basis({2}), WElement::basis({2})};
  CHECK(eval_hurwitz_extended(2, w) == 7 * eval_hurwitz_extended(2, ones));
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(brute(3, 0, {{2}}, false), std::invalid_argument);
  CHECK_THROWS_AS(brute(8, 0, {}, false), std::invalid_argument);
}
