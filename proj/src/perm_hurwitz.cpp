#include "tropgw/perm_hurwitz.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tropgw {

namespace {

using Perm = std::array<std::uint8_t, 8>;

Partition cycle_type(const Perm& p, int d) {
  std::array<bool, 8> seen{};
  std::vector<int> parts;
  for (int i = 0; i < d; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

// All of S_d in lexicographic order, with class labels and (for d <= 6) a
// full multiplication table. Immutable once built.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int d) : d_(d), classes_(enumerate_partitions(d)) {
    Perm p{};
    std::iota(p.begin(), p.begin() + d, 0);
    do {
      perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + d));
    const auto n = perms_.size();
    class_of_.resize(n);
    members_.resize(classes_.size());
    inverse_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto type = cycle_type(perms_[i], d);
      const auto c = static_cast<std::size_t>(
          std::lower_bound(classes_.begin(), classes_.end(), type) - classes_.begin());
      class_of_[i] = static_cast<int>(c);
      members_[c].push_back(static_cast<int>(i));
      Perm inv{};
      for (int k = 0; k < d; ++k) inv[perms_[i][static_cast<std::size_t>(k)]] = static_cast<std::uint8_t>(k);
      inverse_[i] = rank(inv);
    }
    if (d <= 6) {
      table_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = compose(static_cast<int>(a), static_cast<int>(b));
    }
  }

  int degree() const { return d_; }
  std::size_t order() const { return perms_.size(); }
  const Perm& perm(int i) const { return perms_[static_cast<std::size_t>(i)]; }
  int identity() const { return 0; }
  int inverse(int i) const { return inverse_[static_cast<std::size_t>(i)]; }
  int class_of(int i) const { return class_of_[static_cast<std::size_t>(i)]; }
  const std::vector<Partition>& classes() const { return classes_; }
  const std::vector<int>& members(std::size_t c) const { return members_[c]; }
  int class_index(const Partition& mu) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), mu);
    if (it == classes_.end() || *it != mu) {
      throw std::invalid_argument("(" + to_string(mu) + ") is not a partition of " + std::to_string(d_));
    }
    return static_cast<int>(it - classes_.begin());
  }

  // (a*b)(i) = a(b(i))
  int mul(int a, int b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * perms_.size() + static_cast<std::size_t>(b)];
    return compose(a, b);
  }

  int rank(const Perm& p) const {
    int r = 0;
    for (int i = 0; i < d_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < d_; ++j) smaller += p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)];
      r = r * (d_ - i) + smaller;
    }
    return r;
  }

 private:
  int compose(int a, int b) const {
    Perm c{};
    const auto& pa = perms_[static_cast<std::size_t>(a)];
    const auto& pb = perms_[static_cast<std::size_t>(b)];
    for (int i = 0; i < d_; ++i) c[static_cast<std::size_t>(i)] = pa[pb[static_cast<std::size_t>(i)]];
    return rank(c);
  }

  int d_;
  std::vector<Partition> classes_;
  std::vector<Perm> perms_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> members_;
  std::vector<int> inverse_;
  std::vector<int> table_;
};

const SymmetricGroup& symmetric_group(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<SymmetricGroup>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<SymmetricGroup>(d);
  return *slot;
}

// c[l][m][n]: coefficient of C_n in C_l * C_m.
struct StructureConstants {
  std::vector<Partition> classes;
  std::vector<std::int64_t> c;
  std::size_t k = 0;
  std::int64_t at(std::size_t l, std::size_t m, std::size_t n) const { return c[(l * k + m) * k + n]; }
};

const StructureConstants& structure_constants(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<StructureConstants>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return *it->second;
  }
  auto sc = std::make_unique<StructureConstants>();
  const auto& g = symmetric_group(d);
  sc->classes = g.classes();
  sc->k = sc->classes.size();
  sc->c.assign(sc->k * sc->k * sc->k, 0);
  for (std::size_t n = 0; n < sc->k; ++n) {
    const int z = g.members(n).front();
    for (int a = 0; a < static_cast<int>(g.order()); ++a) {
      const int b = g.mul(g.inverse(a), z);  // a*b = z
      const auto l = static_cast<std::size_t>(g.class_of(a));
      const auto m = static_cast<std::size_t>(g.class_of(b));
      ++sc->c[(l * sc->k + m) * sc->k + n];
    }
  }
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::move(sc);
  return *slot;
}

void check_profiles(int d, std::span<const Partition> profiles) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  for (const auto& mu : profiles) {
    if (mu.size() != d) {
      throw std::invalid_argument("profile (" + to_string(mu) + ") is not a partition of d=" +
                                  std::to_string(d) + "; tilde-extend it first");
    }
  }
}

struct UnionFind {
  std::array<std::uint8_t, 8> parent{};
  explicit UnionFind(int d) {
    for (int i = 0; i < d; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[parent[static_cast<std::size_t>(x)]];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void join(const Perm& p, int d) {
    for (int i = 0; i < d; ++i) {
      const int a = find(i), b = find(p[static_cast<std::size_t>(i)]);
      if (a != b) parent[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    }
  }
  bool transitive(int d) {
    const int r = find(0);
    for (int i = 1; i < d; ++i)
      if (find(i) != r) return false;
    return true;
  }
};

// Counts transitive tuples by depth-first search over class members; the
// last profile's permutation is forced and checked by membership.
std::uint64_t count_transitive_tuples(int d, int h, std::span<const Partition> profiles) {
  const auto& g = symmetric_group(d);
  std::vector<int> cls;
  for (const auto& mu : profiles) cls.push_back(g.class_index(mu));
  const int n = static_cast<int>(cls.size());
  const int order = static_cast<int>(g.order());
  std::uint64_t count = 0;

  std::function<void(int, int, UnionFind)> profile_level = [&](int i, int product, UnionFind uf) {
    if (n == 0) {
      if (product == g.identity() && uf.transitive(d)) ++count;
      return;
    }
    if (i == n - 1) {
      const int last = g.inverse(product);
      if (g.class_of(last) != cls[static_cast<std::size_t>(i)]) return;
      uf.join(g.perm(last), d);
      if (uf.transitive(d)) ++count;
      return;
    }
    for (int s : g.members(static_cast<std::size_t>(cls[static_cast<std::size_t>(i)]))) {
      UnionFind next = uf;
      next.join(g.perm(s), d);
      profile_level(i + 1, g.mul(product, s), next);
    }
  };

  std::function<void(int, int, UnionFind)> handle_level = [&](int j, int product, UnionFind uf) {
    if (j == h) {
      profile_level(0, product, uf);
      return;
    }
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        const int comm = g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b)));
        UnionFind next = uf;
        next.join(g.perm(a), d);
        next.join(g.perm(b), d);
        handle_level(j + 1, g.mul(product, comm), next);
      }
    }
  };

  handle_level(0, g.identity(), UnionFind(d));
  return count;
}

// Counts all tuples by propagating an element-wise distribution over S_d.
Integer count_all_tuples(int d, int h, std::span<const Partition> profiles) {
  const auto& g = symmetric_group(d);
  const auto order = g.order();
  std::vector<Integer> dist(order, 0);
  dist[static_cast<std::size_t>(g.identity())] = 1;
  auto convolve = [&](const std::vector<std::pair<int, Integer>>& step) {
    std::vector<Integer> next(order, 0);
    for (std::size_t x = 0; x < order; ++x) {
      if (dist[x] == 0) continue;
      for (const auto& [s, w] : step) next[static_cast<std::size_t>(g.mul(static_cast<int>(x), s))] += dist[x] * w;
    }
    dist = std::move(next);
  };
  if (h > 0) {
    std::vector<Integer> comm(order, 0);
    for (int a = 0; a < static_cast<int>(order); ++a)
      for (int b = 0; b < static_cast<int>(order); ++b)
        ++comm[static_cast<std::size_t>(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))))];
    std::vector<std::pair<int, Integer>> step;
    for (std::size_t x = 0; x < order; ++x)
      if (comm[x] != 0) step.emplace_back(static_cast<int>(x), comm[x]);
    for (int j = 0; j < h; ++j) convolve(step);
  }
  for (const auto& mu : profiles) {
    std::vector<std::pair<int, Integer>> step;
    for (int s : g.members(static_cast<std::size_t>(g.class_index(mu)))) step.emplace_back(s, 1);
    convolve(step);
  }
  return dist[static_cast<std::size_t>(g.identity())];
}

Rational over_factorial(const Integer& n, int d) {
  Rational r(n, factorial(static_cast<unsigned>(d)));
  r.canonicalize();
  return r;
}

bool genus_matches(int d, int h, std::span<const Partition> profiles, std::optional<int> wanted) {
  const auto g = riemann_hurwitz_genus(d, h, profiles);
  if (!g) return false;
  return !wanted || *wanted == *g;
}

}  // namespace

std::optional<int> riemann_hurwitz_genus(int d, int h, std::span<const Partition> profiles) {
  int ramification = 0;
  for (const auto& mu : profiles) ramification += mu.size() - mu.length();
  const int two_minus_2g = d * (2 - 2 * h) - ramification;
  if ((two_minus_2g % 2 + 2) % 2 != 0) return std::nullopt;
  return 1 - two_minus_2g / 2;
}

std::uint64_t conjugacy_class_size(const Partition& mu) {
  const auto& g = symmetric_group(mu.size());
  return g.members(static_cast<std::size_t>(g.class_index(mu))).size();
}

Rational hurwitz_bruteforce(const HurwitzProblem& p) {
  check_profiles(p.degree, p.profiles);
  if (p.degree > kMaxBruteForceDegree) {
    throw std::invalid_argument("brute force supports d <= " + std::to_string(kMaxBruteForceDegree));
  }
  if (p.target_genus < 0) throw std::invalid_argument("target genus must be non-negative");
  if (!genus_matches(p.degree, p.target_genus, p.profiles, p.source_genus)) return 0;
  const Integer tuples = p.connected
                             ? Integer(static_cast<unsigned long>(count_transitive_tuples(p.degree, p.target_genus, p.profiles)))
                             : count_all_tuples(p.degree, p.target_genus, p.profiles);
  return over_factorial(tuples, p.degree);
}

// ---------------------------------------------------------------------------
// Class algebra

ClassAlgebraElement::ClassAlgebraElement(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxClassAlgebraDegree) {
    throw std::invalid_argument("class algebra supports 1 <= d <= " + std::to_string(kMaxClassAlgebraDegree));
  }
  coeffs_.assign(structure_constants(degree).k, Rational(0));
}

ClassAlgebraElement ClassAlgebraElement::class_sum(const Partition& mu) {
  ClassAlgebraElement e(mu.size());
  e.set_coefficient(mu, 1);
  return e;
}

ClassAlgebraElement ClassAlgebraElement::identity(int degree) {
  return class_sum(Partition::ones(degree));
}

ClassAlgebraElement ClassAlgebraElement::genus_adding(int degree) {
  ClassAlgebraElement k(degree);
  for (const auto& mu : enumerate_partitions(degree)) {
    const auto c = ClassAlgebraElement::class_sum(mu);
    ClassAlgebraElement sq = c * c;
    for (auto& x : sq.coeffs_) x *= centralizer_rational(mu);
    k = k + sq;
  }
  return k;
}

Rational ClassAlgebraElement::coefficient(const Partition& mu) const {
  const auto& cl = structure_constants(degree_).classes;
  auto it = std::lower_bound(cl.begin(), cl.end(), mu);
  if (it == cl.end() || *it != mu) throw std::invalid_argument("partition of the wrong degree");
  return coeffs_[static_cast<std::size_t>(it - cl.begin())];
}

void ClassAlgebraElement::set_coefficient(const Partition& mu, const Rational& c) {
  const auto& cl = structure_constants(degree_).classes;
  auto it = std::lower_bound(cl.begin(), cl.end(), mu);
  if (it == cl.end() || *it != mu) throw std::invalid_argument("partition of the wrong degree");
  coeffs_[static_cast<std::size_t>(it - cl.begin())] = c;
}

std::vector<std::pair<Partition, Rational>> ClassAlgebraElement::terms() const {
  const auto& cl = structure_constants(degree_).classes;
  std::vector<std::pair<Partition, Rational>> out;
  for (std::size_t i = 0; i < cl.size(); ++i)
    if (sgn(coeffs_[i]) != 0) out.emplace_back(cl[i], coeffs_[i]);
  return out;
}

ClassAlgebraElement operator*(const ClassAlgebraElement& a, const ClassAlgebraElement& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("class algebra degree mismatch");
  const auto& sc = structure_constants(a.degree_);
  ClassAlgebraElement r(a.degree_);
  for (std::size_t l = 0; l < sc.k; ++l) {
    if (sgn(a.coeffs_[l]) == 0) continue;
    for (std::size_t m = 0; m < sc.k; ++m) {
      if (sgn(b.coeffs_[m]) == 0) continue;
      const Rational ab = a.coeffs_[l] * b.coeffs_[m];
      for (std::size_t n = 0; n < sc.k; ++n) {
        if (const auto c = sc.at(l, m, n); c != 0) r.coeffs_[n] += ab * Rational(static_cast<long>(c));
      }
    }
  }
  return r;
}

ClassAlgebraElement operator+(const ClassAlgebraElement& a, const ClassAlgebraElement& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("class algebra degree mismatch");
  ClassAlgebraElement r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

ClassAlgebraElement class_algebra_product(std::span<const ClassAlgebraElement> elements) {
  if (elements.empty()) throw std::invalid_argument("empty class algebra product");
  ClassAlgebraElement r = elements.front();
  for (std::size_t i = 1; i < elements.size(); ++i) r = r * elements[i];
  return r;
}

Rational hurwitz_class_algebra(const HurwitzProblem& p) {
  check_profiles(p.degree, p.profiles);
  if (p.connected) throw std::invalid_argument("class algebra route computes disconnected counts");
  if (!genus_matches(p.degree, p.target_genus, p.profiles, p.source_genus)) return 0;
  ClassAlgebraElement acc = ClassAlgebraElement::identity(p.degree);
  if (p.target_genus > 0) {
    const auto k = ClassAlgebraElement::genus_adding(p.degree);
    for (int j = 0; j < p.target_genus; ++j) acc = acc * k;
  }
  for (const auto& mu : p.profiles) acc = acc * ClassAlgebraElement::class_sum(mu);
  return acc.coefficient(Partition::ones(p.degree)) / Rational(factorial(static_cast<unsigned>(p.degree)));
}

// ---------------------------------------------------------------------------
// Connected <-> disconnected

namespace {

using ProfileKey = std::pair<int, std::vector<Partition>>;

// Labeled counts: all(d) = d! H^bullet, transitive(d) = d! H.
// all(d; mu) = sum_{m=1}^{d} C(d-1, m-1) sum_{nu_i c mu_i, |nu_i|=m} transitive(m; nu) all(d-m; mu - nu)
template <typename AllFn, typename TransFn>
Integer orbit_recursion_rest(int d, std::span<const Partition> profiles, int max_m, AllFn&& all, TransFn&& trans) {
  Integer total = 0;
  const std::size_t n = profiles.size();
  for (int m = 1; m <= max_m; ++m) {
    std::vector<std::vector<Partition>> choices(n);
    bool feasible = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& s : sub_partitions(profiles[i]))
        if (s.size() == m) choices[i].push_back(s);
      if (choices[i].empty()) feasible = false;
    }
    if (!feasible) continue;
    const Integer ways = binomial(static_cast<unsigned>(d - 1), static_cast<unsigned>(m - 1));
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::vector<Partition> inner(n), outer(n);
      for (std::size_t i = 0; i < n; ++i) {
        inner[i] = choices[i][idx[i]];
        outer[i] = profiles[i].without(inner[i]);
      }
      const Integer t = trans(m, inner);
      if (t != 0) total += ways * t * all(d - m, outer);
      std::size_t i = 0;
      while (i < n && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == n) break;
    }
  }
  return total;
}

}  // namespace

Rational connected_from_disconnected(int d, int h, std::span<const Partition> profiles) {
  check_profiles(d, profiles);
  std::map<ProfileKey, Integer> memo;
  auto all = [h](int deg, const std::vector<Partition>& prof) -> Integer {
    if (deg == 0) return 1;
    HurwitzProblem p{deg, h, prof, false, std::nullopt};
    const Rational v = hurwitz_class_algebra(p) * Rational(factorial(static_cast<unsigned>(deg)));
    return v.get_num();
  };
  std::function<Integer(int, const std::vector<Partition>&)> trans =
      [&](int deg, const std::vector<Partition>& prof) -> Integer {
    ProfileKey key{deg, prof};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer t = all(deg, prof) - orbit_recursion_rest(deg, prof, deg - 1, all, trans);
    memo.emplace(std::move(key), t);
    return t;
  };
  std::vector<Partition> prof(profiles.begin(), profiles.end());
  return over_factorial(trans(d, prof), d);
}

Rational disconnected_from_connected(int d, int h, std::span<const Partition> profiles) {
  check_profiles(d, profiles);
  auto trans = [h](int deg, const std::vector<Partition>& prof) -> Integer {
    HurwitzProblem p{deg, h, prof, true, std::nullopt};
    return Rational(hurwitz_bruteforce(p) * Rational(factorial(static_cast<unsigned>(deg)))).get_num();
  };
  std::function<Integer(int, const std::vector<Partition>&)> all =
      [&](int deg, const std::vector<Partition>& prof) -> Integer {
    if (deg == 0) return 1;
    return orbit_recursion_rest(deg, prof, deg, all, trans);
  };
  std::vector<Partition> prof(profiles.begin(), profiles.end());
  return over_factorial(all(d, prof), d);
}

Rational local_hurwitz(int g, int h, std::span<const Partition> profiles) {
  if (profiles.empty()) throw std::invalid_argument("local Hurwitz number needs at least one profile");
  const int d = profiles.front().size();
  for (const auto& mu : profiles) {
    if (mu.size() != d) throw std::invalid_argument("local Hurwitz profiles have different sizes");
  }
  static std::mutex mutex;
  static std::map<std::tuple<int, int, std::vector<Partition>>, Rational> memo;
  auto key = std::make_tuple(g, h, std::vector<Partition>(profiles.begin(), profiles.end()));
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  HurwitzProblem p{d, h, std::get<2>(key), true, g};
  Rational value = hurwitz_bruteforce(p);
  for (const auto& mu : profiles) value *= static_cast<unsigned long>(aut_count(mu));
  std::lock_guard lock(mutex);
  memo.emplace(std::move(key), value);
  return value;
}

Rational eval_hurwitz_extended(int d, std::span<const Partition> profiles, int h) {
  if (d < 0) return 0;
  if (d == 0) {
    for (const auto& mu : profiles)
      if (!mu.empty()) return 0;
    return 1;
  }
  Rational weight = 1;
  std::vector<Partition> extended;
  for (const auto& mu : profiles) {
    auto t = tilde_extend(mu, d);
    if (!t) return 0;
    weight *= t->weight;
    extended.push_back(std::move(t->extended));
  }
  return weight * hurwitz_class_algebra(HurwitzProblem{d, h, std::move(extended), false, std::nullopt});
}

Rational eval_hurwitz_extended(int d, std::span<const WElement> conditions, int h) {
  const std::size_t n = conditions.size();
  std::vector<std::vector<std::pair<Partition, Rational>>> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [mu, c] : conditions[i].terms())
      if (mu.size() <= d) terms[i].emplace_back(mu, c);
    if (terms[i].empty()) return 0;
  }
  Rational total = 0;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Rational coeff = 1;
    std::vector<Partition> prof(n);
    for (std::size_t i = 0; i < n; ++i) {
      prof[i] = terms[i][idx[i]].first;
      coeff *= terms[i][idx[i]].second;
    }
    total += coeff * eval_hurwitz_extended(d, prof, h);
    std::size_t i = 0;
    while (i < n && ++idx[i] == terms[i].size()) idx[i++] = 0;
    if (i == n) break;
  }
  return total;
}

}  // namespace tropgw
