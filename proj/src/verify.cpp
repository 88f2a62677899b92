#include "tropgw/verify.hpp"

#include "tropgw/fock.hpp"
#include "tropgw/gwh.hpp"
#include "tropgw/local_gw.hpp"
#include "tropgw/perm_hurwitz.hpp"
#include "tropgw/trop_covers.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tropgw {

namespace {

// Collects mismatches; the first one becomes the detail line.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++count_;
    if (!ok && first_failure_.empty()) first_failure_ = what();
    if (!ok) ++failures_;
  }
  CheckResult finish(std::string name, std::chrono::steady_clock::time_point start) const {
    CheckResult r;
    r.name = std::move(name);
    r.passed = failures_ == 0 && count_ > 0;
    std::ostringstream d;
    d << count_ << " comparisons";
    if (failures_ > 0) d << ", " << failures_ << " failed; first: " << first_failure_;
    r.detail = d.str();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

 private:
  std::size_t count_ = 0, failures_ = 0;
  std::string first_failure_;
};

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    return body();
  } catch (const std::exception& ex) {
    CheckResult r;
    r.name = name;
    r.detail = std::string("exception: ") + ex.what();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
}

std::string show(const std::vector<Partition>& prof) {
  std::string s;
  for (std::size_t i = 0; i < prof.size(); ++i) s += (i ? ";" : "") + to_string(prof[i]);
  return s;
}

std::string show(const std::vector<int>& ks) {
  std::string s;
  for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + std::to_string(ks[i]);
  return s;
}

// Non-decreasing index sequences of length n into `count` items.
void for_each_multiset(std::size_t count, std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t lo) {
    if (pos == n) {
      fn(idx);
      return;
    }
    for (std::size_t i = lo; i < count; ++i) {
      idx[pos] = i;
      rec(pos + 1, i);
    }
  };
  rec(0, 0);
}

// Insertion tuples of length n with sum fixed by the genus, for genus <= max_genus.
std::vector<std::vector<int>> insertion_tuples(const Partition& mu, const Partition& nu, int n, int max_genus) {
  std::vector<std::vector<int>> out;
  const int base = mu.length() + nu.length() - 2;
  std::vector<int> ks(static_cast<std::size_t>(n), 0);
  for (int g = -(mu.length() + nu.length()); g <= max_genus; ++g) {
    const int total = 2 * g + base;
    if (total < 0) continue;
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        ks[static_cast<std::size_t>(i)] = left;
        out.push_back(ks);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        ks[static_cast<std::size_t>(i)] = k;
        rec(i + 1, left - k);
      }
    };
    if (n == 0) {
      if (total == 0) out.emplace_back();
    } else {
      rec(0, total);
    }
  }
  return out;
}

DescendantProblem disconnected(const Partition& mu, const Partition& nu, const std::vector<int>& ks) {
  return DescendantProblem{mu, nu, ks, false, std::nullopt};
}

}  // namespace

CheckResult check_hurwitz_oracles(Budget budget) {
  const std::string name = "1 hurwitz: bruteforce = class algebra = tropical";
  return guarded(name, [&] {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    const int max_d = budget == Budget::Full ? 5 : 3;
    for (int h = 0; h <= 1; ++h) {
      for (int d = 1; d <= (h == 0 ? max_d : 3); ++d) {
        const auto parts = enumerate_partitions(d);
        const std::size_t max_n = h == 0 ? 4 : 2;
        for (std::size_t n = 0; n <= max_n; ++n) {
          for_each_multiset(parts.size(), n, [&](const std::vector<std::size_t>& idx) {
            std::vector<Partition> prof;
            for (auto i : idx) prof.push_back(parts[i]);
            const auto shape = h == 0 ? HurwitzTarget::Shape::Caterpillar : HurwitzTarget::Shape::Cycle;
            const HurwitzProblem dis{d, h, prof, false, std::nullopt};
            const auto brute = hurwitz_bruteforce(dis);
            const auto algebra = hurwitz_class_algebra(dis);
            const auto trop = tropical_hurwitz(HurwitzTarget{shape, prof, false, std::nullopt}, d);
            t.expect(brute == algebra && algebra == trop, [&] {
              return "d=" + std::to_string(d) + " h=" + std::to_string(h) + " profiles " + show(prof) + ": " +
                     to_string(brute) + " / " + to_string(algebra) + " / " + to_string(trop);
            });
            const HurwitzProblem con{d, h, prof, true, std::nullopt};
            const auto cbrute = hurwitz_bruteforce(con);
            const auto calgebra = connected_from_disconnected(d, h, prof);
            const auto ctrop = tropical_hurwitz(HurwitzTarget{shape, prof, true, std::nullopt}, d);
            t.expect(cbrute == calgebra && calgebra == ctrop, [&] {
              return "connected d=" + std::to_string(d) + " h=" + std::to_string(h) + " profiles " + show(prof) +
                     ": " + to_string(cbrute) + " / " + to_string(calgebra) + " / " + to_string(ctrop);
            });
          });
        }
      }
    }
    return t.finish(name, start);
  });
}

CheckResult check_vertex_multiplicities(Budget budget) {
  const std::string name = "2 vertex multiplicities: genus 0 and 1 closed forms";
  return guarded(name, [&] {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    t.expect(vertex_multiplicity(1, {1, 1}, {2}) == make_rational(5, 24), [] { return std::string("spot value 5/24"); });
    const int max_d = budget == Budget::Full ? 8 : 5;
    for (int d = 1; d <= max_d; ++d) {
      const auto parts = enumerate_partitions(d);
      for (const auto& mu : parts) {
        for (const auto& nu : parts) {
          const auto m0 = vertex_multiplicity(0, mu, nu);
          t.expect(m0 == 1, [&] { return "g=0 " + to_string(mu) + "|" + to_string(nu) + " -> " + to_string(m0); });
          const auto m1 = vertex_multiplicity(1, mu, nu);
          Rational squares = -1;
          for (int p : mu) squares += p * p;
          for (int p : nu) squares += p * p;
          squares /= 24;
          t.expect(m1 == squares && m1 == genus_one_closed_form(mu, nu),
                   [&] { return "g=1 " + to_string(mu) + "|" + to_string(nu) + " -> " + to_string(m1); });
        }
      }
    }
    return t.finish(name, start);
  });
}

CheckResult check_descendant_three_way(Budget budget) {
  const std::string name = "3 descendants: tropical = fock = substitution";
  return guarded(name, [&] {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    const int max_d = budget == Budget::Full ? 4 : 3;
    for (int d = 1; d <= max_d; ++d) {
      const auto parts = enumerate_partitions(d);
      for (const auto& mu : parts) {
        for (const auto& nu : parts) {
          for (int n = 0; n <= 2; ++n) {
            for (const auto& ks : insertion_tuples(mu, nu, n, 2)) {
              const auto trop = descendant_invariant(disconnected(mu, nu, ks));
              const auto fock = matrix_element(mu, nu, ks);
              const auto subst = substitute_and_evaluate(mu, nu, ks);
              t.expect(trop == fock && fock == subst, [&] {
                return to_string(mu) + "|" + show(ks) + "|" + to_string(nu) + ": " + to_string(trop) + " / " +
                       to_string(fock) + " / " + to_string(subst);
              });
            }
          }
        }
      }
    }
    // the degree-four example with its individual covers
    const Partition ones{1, 1, 1, 1};
    const auto covers = enumerate_descendant_covers(disconnected(ones, ones, {3, 3}));
    bool small = false, forked = false;
    Rational sum = 0;
    for (const auto& c : covers) {
      sum += c.multiplicity.total;
      if (c.multiplicity.total == Rational(4) / (Rational(factorial(4)) * Rational(factorial(4)))) small = true;
      if (c.multiplicity.total == Rational(2) / (Rational(factorial(3)) * Rational(factorial(3)))) forked = true;
    }
    t.expect(small, [] { return std::string("no cover of multiplicity 4/4!^2"); });
    t.expect(forked, [] { return std::string("no cover of multiplicity 2/(3!)^2"); });
    t.expect(sum == matrix_element(ones, ones, {3, 3}) && sum == substitute_and_evaluate(ones, ones, {3, 3}),
             [] { return std::string("degree-four example totals differ"); });
    return t.finish(name, start);
  });
}

CheckResult check_surgery_refinement(Budget budget) {
  const std::string name = "4 surgery degree equals cover multiplicity";
  return guarded(name, [&] {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    const Partition ones{1, 1, 1, 1};
    for (const auto& c : enumerate_descendant_covers(disconnected(ones, ones, {3, 3}))) {
      const auto s = tgwh_surgery(c.cover, {3, 3});
      t.expect(s.total == c.multiplicity.total, [&] {
        return "degree-four cover " + canonical_key(c.cover) + ": " + to_string(s.total) + " vs " +
               to_string(c.multiplicity.total);
      });
    }
    const int max_d = 3;
    for (int d = 1; d <= max_d; ++d) {
      const auto parts = enumerate_partitions(d);
      for (const auto& mu : parts) {
        for (const auto& nu : parts) {
          for (const auto& ks : insertion_tuples(mu, nu, 1, budget == Budget::Full ? 3 : 2)) {
            for (const auto& c : enumerate_descendant_covers(disconnected(mu, nu, ks))) {
              const auto s = tgwh_surgery(c.cover, ks);
              t.expect(s.total == c.multiplicity.total, [&] {
                return to_string(mu) + "|" + show(ks) + "|" + to_string(nu) + ": " + to_string(s.total) + " vs " +
                       to_string(c.multiplicity.total);
              });
            }
          }
        }
      }
    }
    return t.finish(name, start);
  });
}

CheckResult check_operator_identities(Budget budget) {
  const std::string name = "5 vertex form = M_k and wick = direct action";
  return guarded(name, [&] {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    const int max_D = budget == Budget::Full ? 5 : 3;
    for (int k = 0; k <= 4; ++k) {
      for (int D = 1; D <= max_D; ++D) {
        for (int G = 0; G <= 2; ++G) {
          t.expect(build_Mk_vertex_form(k, D, G) == build_Mk(k, D, G), [&] {
            return "k=" + std::to_string(k) + " D=" + std::to_string(D) + " G=" + std::to_string(G);
          });
        }
      }
    }
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> index(-3, 3), monomials(1, 4);
    int nonzero = 0;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<HeisenbergMonomial> product;
      // rejection-sample until the indices cancel, otherwise the value is trivially zero
      for (int sum = 1; sum != 0;) {
        const int total = std::uniform_int_distribution<int>(2, 6)(rng);
        const int m = std::min(monomials(rng), total);
        product.assign(static_cast<std::size_t>(m), HeisenbergMonomial{});
        sum = 0;
        for (int f = 0; f < total; ++f) {
          int x = 0;
          while (x == 0) x = index(rng);
          sum += x;
          product[static_cast<std::size_t>(f < m ? f : std::uniform_int_distribution<int>(0, m - 1)(rng))]
              .factors.push_back(x);
        }
      }
      for (auto& mono : product) mono.scalar = make_rational(std::uniform_int_distribution<int>(1, 5)(rng), 1);
      const auto wick = wick_expectation(product, false).value;
      const auto direct = vacuum_expectation(product);
      if (sgn(direct) != 0) ++nonzero;
      t.expect(wick == direct, [&] {
        std::string s = "trial " + std::to_string(trial) + ":";
        for (const auto& mono : product) s += " [" + show(mono.factors) + "]";
        return s + " " + to_string(wick) + " vs " + to_string(direct);
      });
    }
    t.expect(nonzero >= 10, [&] { return "only " + std::to_string(nonzero) + " random products were nonzero"; });
    return t.finish(name, start);
  });
}

CheckResult check_splitting(Budget budget) {
  const std::string name = "6 splitting identity at every cut";
  return guarded(name, [&] {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    const int max_d = budget == Budget::Full ? 4 : 3;
    for (int d = 1; d <= max_d; ++d) {
      const auto parts = enumerate_partitions(d);
      for (const auto& mu : parts) {
        for (const auto& nu : parts) {
          for (int n = 0; n <= 3; ++n) {
            for (const auto& ks : insertion_tuples(mu, nu, n, budget == Budget::Full ? 2 : 1)) {
              for (const auto& s : split_at_point(mu, nu, ks)) {
                t.expect(s.holds(), [&] {
                  return to_string(mu) + "|" + show(ks) + "|" + to_string(nu) + " cut " + std::to_string(s.split) +
                         ": " + to_string(s.direct) + " vs " + to_string(s.glued);
                });
              }
            }
          }
        }
      }
    }
    return t.finish(name, start);
  });
}

CheckResult check_cut_join(Budget budget) {
  const std::string name = "7 cut-join matrix elements = double hurwitz numbers";
  return guarded(name, [&] {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    const int max_d = budget == Budget::Full ? 5 : 3;
    for (int d = 1; d <= max_d; ++d) {
      const auto parts = enumerate_partitions(d);
      std::vector<int> transposition(static_cast<std::size_t>(d), 1);
      if (d >= 2) {
        transposition.pop_back();
        transposition[0] = 2;
      }
      for (const auto& mu : parts) {
        for (const auto& nu : parts) {
          for (int r = 0; r <= 6; ++r) {
            const auto fock = double_hurwitz(mu, nu, r);
            Rational brute = 0;
            if (d >= 2 || r == 0) {
              std::vector<Partition> prof{mu, nu};
              for (int i = 0; i < r; ++i) prof.emplace_back(transposition);
              brute = hurwitz_bruteforce(HurwitzProblem{d, 0, prof, false, std::nullopt});
            }
            t.expect(fock == brute, [&] {
              return to_string(mu) + "|" + to_string(nu) + " r=" + std::to_string(r) + ": " + to_string(fock) +
                     " vs " + to_string(brute);
            });
          }
        }
      }
    }
    return t.finish(name, start);
  });
}

CheckResult check_completion_routes(Budget) {
  const std::string name = "8 completion coefficients: formula = linear system";
  return guarded(name, [&] {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    t.expect(completion_coefficients(1).expansion == WElement::basis({2}),
             [] { return "k=1 gives " + to_string(completion_coefficients(1).expansion); });
    for (int k = 0; k <= 4; ++k) {
      const auto formula = completion_coefficients(k).expansion;
      const auto system = solve_completion_by_correspondence(k, k + 2);
      WElement solved;
      for (const auto& [lambda, c] : system.terms()) {
        if (lambda.size() >= 1) solved.add_term(lambda, c);
      }
      t.expect(formula == solved, [&] {
        return "k=" + std::to_string(k) + ": " + to_string(formula) + " vs " + to_string(solved);
      });
    }
    return t.finish(name, start);
  });
}

std::vector<CheckResult> run_acceptance(Budget budget, const std::function<void(const CheckResult&)>& on_result) {
  const std::vector<std::function<CheckResult(Budget)>> suites{
      check_hurwitz_oracles,     check_vertex_multiplicities, check_descendant_three_way, check_surgery_refinement,
      check_operator_identities, check_splitting,             check_cut_join,             check_completion_routes};
  std::vector<CheckResult> out;
  for (const auto& suite : suites) {
    out.push_back(suite(budget));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace tropgw
