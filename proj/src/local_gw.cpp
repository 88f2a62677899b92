#include "tropgw/local_gw.hpp"

#include "tropgw/perm_hurwitz.hpp"
#include "tropgw/series.hpp"
#include "tropgw/trop_covers.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace tropgw {

namespace {

std::size_t even_order(int genus) { return static_cast<std::size_t>(2 * genus); }

}  // namespace

Rational vertex_multiplicity(int genus, const Partition& left, const Partition& right) {
  if (left.size() != right.size() || left.size() == 0) {
    throw std::invalid_argument("vertex profiles (" + to_string(left) + ") and (" + to_string(right) +
                                ") must have equal positive size");
  }
  if (genus < 0) return 0;
  static std::mutex mutex;
  static std::map<std::tuple<int, Partition, Partition>, Rational> memo;
  auto key = std::make_tuple(genus, left, right);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const auto order = even_order(genus);
  const auto s = series_sinh_ratio(order);
  FormalSeries acc = series_invert(s);
  for (const auto* mu : {&left, &right})
    for (int part : *mu) acc = acc * series_scale_argument(s, part);
  Rational value = acc[order];
  std::lock_guard lock(mutex);
  memo.emplace(std::move(key), value);
  return value;
}

Rational vertex_multiplicity(const VertexData& v) { return vertex_multiplicity(v.genus, v.left, v.right); }

Rational genus_one_closed_form(const Partition& left, const Partition& right) {
  if (left.size() != right.size()) throw std::invalid_argument("vertex profiles must have equal size");
  long sum = -1;
  for (const auto* mu : {&left, &right})
    for (int part : *mu) sum += static_cast<long>(part) * part;
  return make_rational(sum, 24);
}

Rational one_point_invariant(const Partition& mu, int k) {
  if (mu.empty() || k < 0) return 0;
  const int two_g = k + 2 - mu.length() - mu.size();
  if (two_g < 0 || two_g % 2 != 0) return 0;
  const int d = mu.size();
  return vertex_multiplicity(two_g / 2, mu, Partition::ones(d)) /
         Rational(Integer(static_cast<unsigned long>(aut_count(mu))) * factorial(static_cast<unsigned>(d)));
}

CompletedCycle completion_coefficients(int k) {
  if (k < 0) throw std::invalid_argument("descendant power must be non-negative");
  static std::mutex mutex;
  static std::map<int, CompletedCycle> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
  }
  CompletedCycle cc{k, {}};
  const Rational kf(factorial(static_cast<unsigned>(k)));
  for (int size = 1; size <= k + 1; ++size) {
    for (const auto& lambda : enumerate_partitions(size)) {
      const Rational v = one_point_invariant(lambda, k);
      if (sgn(v) != 0) cc.expansion.add_term(lambda, kf * centralizer_rational(lambda) * v);
    }
  }
  std::lock_guard lock(mutex);
  memo.emplace(k, cc);
  return cc;
}

WElement solve_completion_by_correspondence(int k, int d_max) {
  if (k < 0) throw std::invalid_argument("descendant power must be non-negative");
  if (d_max < 1 || d_max > kMaxClassAlgebraDegree) {
    throw std::invalid_argument("d_max must lie in [1, " + std::to_string(kMaxClassAlgebraDegree) + "]");
  }
  std::vector<Partition> unknowns;
  for (int size = 0; size <= k + 1; ++size)
    for (auto& lambda : enumerate_partitions(size)) unknowns.push_back(std::move(lambda));
  const std::size_t cols = unknowns.size();
  const Rational kf(factorial(static_cast<unsigned>(k)));

  // Augmented rows [coefficients | rhs].
  std::vector<std::vector<Rational>> rows;
  for (int d = 1; d <= d_max; ++d) {
    const auto parts = enumerate_partitions(d);
    for (const auto& mu : parts) {
      for (const auto& nu : parts) {
        std::vector<Rational> row(cols + 1, Rational(0));
        for (std::size_t j = 0; j < cols; ++j) {
          const std::vector<Partition> prof{mu, unknowns[j], nu};
          row[j] = eval_hurwitz_extended(d, prof) / kf;
        }
        row[cols] = descendant_invariant(DescendantProblem{mu, nu, {k}, false, std::nullopt});
        rows.push_back(std::move(row));
      }
    }
  }

  // Reduced row echelon form.
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = 1 / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t j = c; j <= cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (sgn(rows[r][cols]) != 0) throw std::runtime_error("completion system is inconsistent");
  }
  if (rank < cols) {
    throw std::runtime_error("completion system is underdetermined (rank " + std::to_string(rank) + " of " +
                             std::to_string(cols) + "); raise d_max");
  }
  WElement out;
  for (std::size_t r = 0; r < cols; ++r) {
    // row r has its pivot in column r once the system has full column rank
    out.add_term(unknowns[r], rows[r][cols]);
  }
  return out;
}

}  // namespace tropgw
