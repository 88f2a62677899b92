#include "tropgw/fock.hpp"
#include "tropgw/perm_hurwitz.hpp"
#include "tropgw/trop_covers.hpp"

#include <doctest.h>

#include <random>

using namespace tropgw;

TEST_CASE("Heisenberg action and pairing") {
  CHECK(apply(HeisenbergMonomial{{2}}, FockVector::basis({2})) == FockVector::vacuum() + FockVector::vacuum());
  CHECK(apply(HeisenbergMonomial{{1, 1}}, FockVector::basis({1, 1})) == 2 * FockVector::vacuum());
  CHECK(apply(HeisenbergMonomial{{-3}}, FockVector::vacuum()) == FockVector::basis({3}));
  CHECK(inner_product(FockVector::basis({2, 1, 1}), FockVector::basis({2, 1, 1})) == 4);
  CHECK(inner_product(FockVector::basis({2}), FockVector::basis({1, 1})) == 0);
  CHECK(inner_product(FockVector::vacuum(), FockVector::vacuum()) == 1);
  CHECK_THROWS_AS(apply(HeisenbergMonomial{{0}}, FockVector::vacuum()), std::invalid_argument);
}

TEST_CASE("cut-join") {
  GradedVector v;
  v.emplace(0, FockVector::basis({2}));
  const auto r = tropgw::apply(cut_join(2), v);
  CHECK(r.at(0) == FockVector::basis({1, 1}));
  CHECK(double_hurwitz({1, 1}, {2}, 1) == make_rational(1, 2));
  CHECK(double_hurwitz({2, 1}, {2, 1}, 0) == 1 / centralizer_rational({2, 1}));
  for (int d = 1; d <= 3; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      for (const auto& nu : enumerate_partitions(d)) {
        for (int r = 0; r <= 3; ++r) {
          std::vector<Partition> prof{mu, nu};
          std::vector<int> t(static_cast<std::size_t>(d), 1);
          if (d >= 2) {
            t.pop_back();
            t[0] = 2;
          } else if (r > 0) {
            CHECK(double_hurwitz(mu, nu, r) == 0);
            continue;
          }
          for (int i = 0; i < r; ++i) prof.emplace_back(t);
          CHECK(double_hurwitz(mu, nu, r) == hurwitz_class_algebra(HurwitzProblem{d, 0, prof, false, std::nullopt}));
        }
      }
    }
  }
}

TEST_CASE("M_k terms") {
  const auto m1 = build_Mk(1, 2, 0);
  CHECK(m1.coefficient(1, {-1, -1, 2}) == make_rational(1, 2));
  CHECK(m1.coefficient(0, {-2, 1, 1}) == make_rational(1, 2));
  for (int k = 0; k <= 3; ++k) {
    const auto m = build_Mk(k, 3, 2);
    for (const auto& [u, monomials] : m.terms()) {
      for (const auto& [x, c] : monomials) {
        int sum = 0, neg = 0;
        for (int xi : x) {
          sum += xi;
          neg += xi < 0;
        }
        CHECK(sum == 0);
        const int g = u + 1 - neg;
        CHECK(static_cast<int>(x.size()) == k + 2 - 2 * g);
        CHECK(std::is_sorted(x.begin(), x.end()));
      }
    }
  }
  CHECK_THROWS_AS(build_Mk(-1, 2, 0), std::invalid_argument);
}

TEST_CASE("vertex-operator form agrees with the direct construction") {
  for (int k = 0; k <= 3; ++k) CHECK(build_Mk_vertex_form(k, 3, 1) == build_Mk(k, 3, 1));
}

TEST_CASE("matrix elements equal tropical invariants") {
  CHECK(matrix_element({1}, {1}, {0}) == 1);
  CHECK(matrix_element({2}, {1, 1}, {1}) == make_rational(1, 2));
  CHECK(matrix_element({1, 1}, {1, 1}, {0}) == 1);
  CHECK(matrix_element({2}, {2}, {2}) == make_rational(7, 24));
  const std::vector<std::vector<int>> ks{{0, 1}, {1, 1}, {2, 0}, {1, 2}};
  for (int d = 1; d <= 3; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      for (const auto& nu : enumerate_partitions(d)) {
        for (const auto& k : ks) {
          if (!descendant_genus(mu, nu, k)) continue;
          CHECK(matrix_element(mu, nu, k) ==
                descendant_invariant(DescendantProblem{mu, nu, k, false, std::nullopt}));
        }
      }
    }
  }
}

TEST_CASE("Wick expansion") {
  CHECK(wick_expectation({{{2}}, {{-2}}}).value == 2);
  CHECK(wick_expectation({{{1, 1}}, {{-1, -1}}}).value == 2);
  CHECK(wick_expectation({{{1, 1}}, {{-1, -1}}}).diagrams.size() == 2);
  const std::vector<HeisenbergMonomial> fragment{
      {{1, 1, 1, 1}}, {{-1, -1, -1, 2, 1}}, {{-2, -1, 1, 1, 1}}, {{-1, -1, -1, -1}}};
  const auto w = wick_expectation(fragment);
  CHECK(!w.diagrams.empty());
  CHECK(w.value == vacuum_expectation(fragment));
  CHECK_THROWS_AS(wick_expectation({{{-1}}, {{1}}}), std::invalid_argument);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<HeisenbergMonomial> p;
    std::uniform_int_distribution<int> idx(-3, 3), len(1, 3);
    for (int m = 0; m < 3; ++m) {
      HeisenbergMonomial mono;
      for (int i = len(rng); i > 0; --i) {
        int x = 0;
        while (x == 0) x = idx(rng);
        mono.factors.push_back(x);
      }
      p.push_back(mono);
    }
    CHECK(wick_expectation(p, false).value == vacuum_expectation(p));
  }
}

TEST_CASE("adjointness") {
  const FockVector x = FockVector::basis({2, 1}) + FockVector::basis({3}, 2);
  const FockVector y = FockVector::basis({1, 1, 1}) + FockVector::basis({2, 1}, make_rational(1, 3));
  const HeisenbergMonomial a{{-1, 2, 1, -1}};
  const HeisenbergMonomial adj{{1, -1, -2, 1}};
  CHECK(inner_product(x, apply(a, y)) == inner_product(apply(adj, x), y));
}

TEST_CASE("expression evaluation") {
  CHECK(evaluate_expression("a(2) a(-2)").at(0) == 2);
  CHECK(evaluate_expression("bra 1,1 F2 ket 2").at(0) == 2);
  CHECK(evaluate_expression("bra 1,1 F2^2 ket 1,1").at(0) == evaluate_expression("bra 1,1 F2 F2 ket 1,1").at(0));
  CHECK(evaluate_expression("bra 2 M(1) ket 1,1").at(0) == 2);
  CHECK_THROWS_AS(evaluate_expression("bra 2 Q ket 2"), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_expression("a(x)"), std::invalid_argument);
}
