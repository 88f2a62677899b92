#include "tropgw/fock.hpp"

#include "tropgw/local_gw.hpp"
#include "tropgw/series.hpp"
#include "tropgw/trop_covers.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tropgw {

FockVector FockVector::basis(const Partition& mu, const Rational& c) {
  FockVector v;
  v.add_term(mu, c);
  return v;
}

Rational FockVector::coefficient(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FockVector::add_term(const Partition& mu, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [mu, c] : other.terms_) add_term(mu, c);
  return *this;
}

FockVector operator*(const Rational& c, const FockVector& v) {
  FockVector r;
  for (const auto& [mu, x] : v.terms_) r.add_term(mu, c * x);
  return r;
}

namespace {

FockVector apply_factor(int n, const FockVector& v) {
  FockVector r;
  if (n < 0) {
    const Partition part{-n};
    for (const auto& [mu, c] : v.terms()) r.add_term(mu.joined(part), c);
  } else {
    const Partition part{n};
    for (const auto& [mu, c] : v.terms()) {
      const int k = mu.count(n);
      if (k > 0) r.add_term(mu.without(part), c * Rational(static_cast<long>(n) * k));
    }
  }
  return r;
}

}  // namespace

FockVector apply(const HeisenbergMonomial& m, const FockVector& v) {
  FockVector r = v;
  for (auto it = m.factors.rbegin(); it != m.factors.rend() && !r.is_zero(); ++it) {
    if (*it == 0) throw std::invalid_argument("a_0 is not part of the Heisenberg algebra used here");
    r = apply_factor(*it, r);
  }
  return m.scalar * r;
}

Rational inner_product(const FockVector& x, const FockVector& y) {
  Rational total = 0;
  for (const auto& [mu, c] : x.terms()) {
    const Rational d = y.coefficient(mu);
    if (sgn(d) != 0) total += c * d * centralizer_rational(mu);
  }
  return total;
}

void GradedOperator::add_term(int u_power, const std::vector<int>& factors, const Rational& c) {
  if (sgn(c) == 0) return;
  auto& slot = terms_[u_power];
  auto [it, inserted] = slot.emplace(factors, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) slot.erase(it);
  }
  if (slot.empty()) terms_.erase(u_power);
}

Rational GradedOperator::coefficient(int u_power, const std::vector<int>& factors) const {
  auto it = terms_.find(u_power);
  if (it == terms_.end()) return 0;
  auto jt = it->second.find(factors);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

std::size_t GradedOperator::size() const {
  std::size_t n = 0;
  for (const auto& [u, m] : terms_) n += m.size();
  return n;
}

GradedVector apply(const GradedOperator& op, const GradedVector& v) {
  GradedVector out;
  for (const auto& [u, monomials] : op.terms()) {
    for (const auto& [factors, c] : monomials) {
      for (const auto& [w, vec] : v) {
        FockVector r = apply(HeisenbergMonomial{factors, c}, vec);
        if (r.is_zero()) continue;
        auto& slot = out[u + w];
        slot += r;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

GradedOperator cut_join(int degree_cap) {
  GradedOperator f;
  const Rational half = make_rational(1, 2);
  for (int i = 1; i < degree_cap; ++i) {
    for (int j = 1; i + j <= degree_cap; ++j) {
      f.add_term(0, {-std::max(i, j), -std::min(i, j), i + j}, half);
      f.add_term(0, {-(i + j), std::min(i, j), std::max(i, j)}, half);
    }
  }
  return f;
}

Rational double_hurwitz(const Partition& mu, const Partition& nu, int r) {
  if (mu.size() != nu.size()) throw std::invalid_argument("|mu| != |nu|");
  if (r < 0) throw std::invalid_argument("the number of simple branch points must be non-negative");
  const auto f = cut_join(mu.size());
  GradedVector v;
  v.emplace(0, FockVector::basis(nu));
  for (int i = 0; i < r; ++i) v = tropgw::apply(f, v);
  auto it = v.find(0);
  if (it == v.end()) return 0;
  return inner_product(FockVector::basis(mu), it->second) / (centralizer_rational(mu) * centralizer_rational(nu));
}

namespace {

std::vector<int> tuple_of(const Partition& negative, const Partition& positive) {
  std::vector<int> x;
  for (int p : negative) x.push_back(-p);
  for (int p : positive) x.push_back(p);
  std::sort(x.begin(), x.end());
  return x;
}

void check_caps(int k, int degree_cap, int genus_cap) {
  if (k < 0) throw std::invalid_argument("M_k needs k >= 0");
  if (degree_cap < 0 || genus_cap < 0) throw std::invalid_argument("caps must be non-negative");
}

}  // namespace

GradedOperator build_Mk(int k, int degree_cap, int genus_cap) {
  check_caps(k, degree_cap, genus_cap);
  GradedOperator op;
  for (int g = 0; g <= genus_cap; ++g) {
    const int length = k + 2 - 2 * g;
    if (length < 2) break;
    for (int d = 1; d <= degree_cap; ++d) {
      for (const auto& mu : enumerate_partitions(d, length - 1)) {
        for (const auto& nu : enumerate_partitions(d, length - mu.length())) {
          if (mu.length() + nu.length() != length) continue;
          const Rational c = vertex_multiplicity(g, mu, nu) /
                             Rational(Integer(static_cast<unsigned long>(aut_count(mu))) *
                                      Integer(static_cast<unsigned long>(aut_count(nu))));
          op.add_term(mu.length() - 1 + g, tuple_of(mu, nu), c);
        }
      }
    }
  }
  return op;
}

GradedOperator build_Mk_vertex_form(int k, int degree_cap, int genus_cap) {
  check_caps(k, degree_cap, genus_cap);
  GradedOperator op;
  const std::size_t order = static_cast<std::size_t>(2 * genus_cap);
  const FormalSeries s = series_sinh_ratio(order);
  const FormalSeries s_inv = series_invert(s);
  for (int g = 0; g <= genus_cap; ++g) {
    const int length = k + 2 - 2 * g;
    if (length <= 0) break;  // empty products are excluded
    const Rational inv_fact = 1 / Rational(factorial(static_cast<unsigned>(length)));
    std::vector<int> x;
    // ordered tuples with sum 0 (the w^0 coefficient) and degree <= cap
    std::function<void(int, int, int, const FormalSeries&)> grow = [&](int sum, int neg, int pos, const FormalSeries& prod) {
      const int remaining = length - static_cast<int>(x.size());
      if (remaining == 0) {
        if (sum != 0) return;
        const FormalSeries term = prod * s_inv;
        const Rational c = term[static_cast<std::size_t>(2 * g)] * inv_fact;
        int creations = 0;
        for (int xi : x) creations += xi < 0;
        std::vector<int> sorted = x;
        std::sort(sorted.begin(), sorted.end());
        op.add_term(g - 1 + creations, sorted, c);
        return;
      }
      for (int xi = -degree_cap; xi <= degree_cap; ++xi) {
        if (xi == 0) continue;
        const int n2 = neg + (xi < 0 ? -xi : 0), p2 = pos + (xi > 0 ? xi : 0);
        if (n2 > degree_cap || p2 > degree_cap) continue;
        const int s2 = sum + xi;
        if (std::abs(s2) > degree_cap * (remaining - 1)) continue;
        x.push_back(xi);
        grow(s2, n2, p2, prod * series_scale_argument(s, xi));
        x.pop_back();
      }
    };
    grow(0, 0, 0, FormalSeries::constant('z', order, 1));
  }
  return op;
}

namespace {

const GradedOperator& cached_Mk(int k, int degree_cap) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, GradedOperator> memo;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(k, degree_cap);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, build_Mk(k, degree_cap, k / 2)).first;
  return it->second;
}

}  // namespace

Rational matrix_element(const Partition& mu, const Partition& nu, const std::vector<int>& insertions) {
  if (mu.size() != nu.size()) throw std::invalid_argument("|mu| != |nu|");
  const auto g = descendant_genus(mu, nu, insertions);
  if (!g) throw std::invalid_argument("sum k_i = 2g + l(mu) + l(nu) - 2 has no integral solution g");
  GradedVector v;
  v.emplace(0, FockVector::basis(nu));
  for (auto it = insertions.rbegin(); it != insertions.rend(); ++it) v = tropgw::apply(cached_Mk(*it, mu.size()), v);
  auto it = v.find(*g + mu.length() - 1);
  if (it == v.end()) return 0;
  return inner_product(FockVector::basis(mu), it->second) / (centralizer_rational(mu) * centralizer_rational(nu));
}

WickResult wick_expectation(const std::vector<HeisenbergMonomial>& product, bool check_shape) {
  const int n = static_cast<int>(product.size());
  if (check_shape) {
    if (n < 2) throw std::invalid_argument("a Feynman product needs boundary monomials on both sides");
    for (int f : product.front().factors)
      if (f <= 0) throw std::invalid_argument("the left boundary monomial must have positive indices only");
    for (int f : product.back().factors)
      if (f >= 0) throw std::invalid_argument("the right boundary monomial must have negative indices only");
  }
  struct Germ {
    int monomial, factor, index;
  };
  std::vector<Germ> germs;
  Rational scalar = 1;
  for (int m = 0; m < n; ++m) {
    scalar *= product[static_cast<std::size_t>(m)].scalar;
    const auto& fs = product[static_cast<std::size_t>(m)].factors;
    for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
      if (fs[static_cast<std::size_t>(f)] == 0) throw std::invalid_argument("a_0 is not allowed");
      germs.push_back(Germ{m, f, fs[static_cast<std::size_t>(f)]});
    }
  }
  WickResult result;
  std::vector<bool> used(germs.size(), false);
  FeynmanDiagram current;
  std::function<void(std::size_t)> match = [&](std::size_t i) {
    while (i < germs.size() && used[i]) ++i;
    if (i == germs.size()) {
      result.diagrams.push_back(current);
      return;
    }
    if (germs[i].index < 0) return;  // a creation factor with nothing to its left to absorb it
    used[i] = true;
    for (std::size_t j = i + 1; j < germs.size(); ++j) {
      if (used[j] || germs[j].index != -germs[i].index) continue;
      used[j] = true;
      const int w = germs[i].index;
      current.contractions.push_back(
          WickContraction{germs[i].monomial, germs[i].factor, germs[j].monomial, germs[j].factor, w});
      const Integer saved = current.weight, saved_internal = current.internal_weight;
      current.weight *= w;
      if (germs[i].monomial != 0 && germs[j].monomial != n - 1) current.internal_weight *= w;
      match(i + 1);
      current.weight = saved;
      current.internal_weight = saved_internal;
      current.contractions.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  match(0);
  for (const auto& d : result.diagrams) {
    result.value += scalar * Rational(d.weight);
    result.internal_value += scalar * Rational(d.internal_weight);
  }
  return result;
}

Rational vacuum_expectation(const std::vector<HeisenbergMonomial>& product) {
  FockVector v = FockVector::vacuum();
  for (auto it = product.rbegin(); it != product.rend() && !v.is_zero(); ++it) v = tropgw::apply(*it, v);
  return v.coefficient(Partition{});
}

namespace {

[[noreturn]] void parse_error(std::size_t index, const std::string& token, const std::string& why) {
  throw std::invalid_argument("token " + std::to_string(index + 1) + " '" + token + "': " + why);
}

int parse_int_arg(std::size_t index, const std::string& token, std::size_t prefix) {
  if (token.size() < prefix + 2 || token.back() != ')') parse_error(index, token, "expected a closing parenthesis");
  const std::string body = token.substr(prefix, token.size() - prefix - 1);
  try {
    std::size_t used = 0;
    const int v = std::stoi(body, &used);
    if (used != body.size()) parse_error(index, token, "not an integer");
    return v;
  } catch (const std::logic_error&) {
    parse_error(index, token, "not an integer");
  }
}

}  // namespace

std::map<int, Rational> evaluate_expression(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);

  struct Item {
    enum Kind { Heisenberg, CutJoin, M } kind;
    int arg;
  };
  std::vector<Item> items;
  Partition bra, ket;
  int shift = 0;  // degree the annihilation-free factors can add
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string tok = tokens[i];
    if (tok == "bra" || tok == "ket") {
      if (i + 1 == tokens.size()) parse_error(i, tok, "missing partition");
      Partition p;
      try {
        p = tokens[i + 1] == "-" ? Partition{} : parse_partition(tokens[i + 1]);
      } catch (const std::invalid_argument& e) {
        parse_error(i + 1, tokens[i + 1], e.what());
      }
      (tok == "bra" ? bra : ket) = p;
      ++i;
      continue;
    }
    int power = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      const std::string exp = tok.substr(caret + 1);
      tok = tok.substr(0, caret);
      try {
        std::size_t used = 0;
        power = std::stoi(exp, &used);
        if (used != exp.size() || power < 0) throw std::invalid_argument("bad");
      } catch (const std::logic_error&) {
        parse_error(i, tokens[i], "the exponent must be a non-negative integer");
      }
      if (tok.empty()) {
        if (items.empty()) parse_error(i, tokens[i], "an exponent needs a preceding operator");
        const Item last = items.back();
        for (int r = 1; r < power; ++r) items.push_back(last);
        if (power == 0) items.pop_back();
        continue;
      }
    }
    Item item{};
    if (tok == "F2") {
      item = Item{Item::CutJoin, 0};
    } else if (tok.rfind("a(", 0) == 0) {
      item = Item{Item::Heisenberg, parse_int_arg(i, tok, 2)};
      if (item.arg == 0) parse_error(i, tok, "a(0) is not allowed");
      shift += std::abs(item.arg) * power;
    } else if (tok.rfind("M(", 0) == 0) {
      item = Item{Item::M, parse_int_arg(i, tok, 2)};
      if (item.arg < 0) parse_error(i, tok, "M(k) needs k >= 0");
    } else {
      parse_error(i, tok, "unknown token");
    }
    for (int r = 0; r < power; ++r) items.push_back(item);
  }
  const int cap = std::max(bra.size(), ket.size()) + shift;
  GradedVector v;
  v.emplace(0, FockVector::basis(ket));
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    switch (it->kind) {
      case Item::Heisenberg: {
        GradedOperator op;
        op.add_term(0, {it->arg}, 1);
        v = tropgw::apply(op, v);
        break;
      }
      case Item::CutJoin:
        v = tropgw::apply(cut_join(cap), v);
        break;
      case Item::M:
        v = tropgw::apply(cached_Mk(it->arg, cap), v);
        break;
    }
  }
  std::map<int, Rational> out;
  for (const auto& [u, vec] : v) {
    const Rational x = inner_product(FockVector::basis(bra), vec);
    if (sgn(x) != 0) out[u] = x;
  }
  return out;
}

std::string to_string(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [mu, c] : v.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*b(" + to_string(mu) + ")";
  }
  return s;
}

}  // namespace tropgw
