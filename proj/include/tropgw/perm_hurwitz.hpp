#pragma once

#include "tropgw/partition.hpp"
#include "tropgw/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tropgw {

/// Largest degree handled by monodromy enumeration.
inline constexpr int kMaxBruteForceDegree = 7;
/// Largest degree for which class-algebra structure constants are built.
inline constexpr int kMaxClassAlgebraDegree = 8;

struct HurwitzProblem {
  int degree = 1;
  int target_genus = 0;
  std::vector<Partition> profiles;
  bool connected = false;
  /// When set, the count is 0 unless the Riemann-Hurwitz genus equals this.
  std::optional<int> source_genus;
};

/// Source genus forced by Riemann-Hurwitz,
///   2 - 2g = d(2 - 2h) - sum_{i,j} (mu_ij - 1),
/// or nullopt when the right-hand side is odd. For disconnected sources
/// this is the Euler-characteristic genus 2 - 2g = sum_c (2 - 2g_c).
std::optional<int> riemann_hurwitz_genus(int d, int h, std::span<const Partition> profiles);

/// Counts tuples (a_1, b_1, ..., a_h, b_h, s_1, ..., s_n) in S_d with
/// prod [a_i, b_i] * prod s_k = id and s_k of cycle type mu_k, divided by d!.
/// Connected problems keep only transitive tuples.
Rational hurwitz_bruteforce(const HurwitzProblem& p);

/// Number of permutations of S_d with cycle type mu, by enumeration.
std::uint64_t conjugacy_class_size(const Partition& mu);

/// Element of the center of Q[S_d] in the conjugacy class basis {C_mu}.
class ClassAlgebraElement {
 public:
  explicit ClassAlgebraElement(int degree);
  static ClassAlgebraElement class_sum(const Partition& mu);
  static ClassAlgebraElement identity(int degree);
  /// K = sum_mu z(mu) C_mu^2; multiplying by it adds one to the target genus.
  static ClassAlgebraElement genus_adding(int degree);

  int degree() const { return degree_; }
  Rational coefficient(const Partition& mu) const;
  void set_coefficient(const Partition& mu, const Rational& c);
  /// Nonzero coefficients keyed by partition, canonical order.
  std::vector<std::pair<Partition, Rational>> terms() const;

  friend ClassAlgebraElement operator*(const ClassAlgebraElement& a, const ClassAlgebraElement& b);
  friend ClassAlgebraElement operator+(const ClassAlgebraElement& a, const ClassAlgebraElement& b);
  friend bool operator==(const ClassAlgebraElement& a, const ClassAlgebraElement& b) = default;

 private:
  int degree_;
  std::vector<Rational> coeffs_;  // indexed like enumerate_partitions(degree_)
};

ClassAlgebraElement class_algebra_product(std::span<const ClassAlgebraElement> elements);

/// Disconnected Hurwitz number as coeff of C_e in K^h C_mu1 ... C_mun over d!.
Rational hurwitz_class_algebra(const HurwitzProblem& p);

/// Connected count from class-algebra disconnected counts, by inclusion-
/// exclusion over the orbit containing sheet 1.
Rational connected_from_disconnected(int d, int h, std::span<const Partition> profiles);
/// Disconnected count assembled from brute-force connected counts.
Rational disconnected_from_connected(int d, int h, std::span<const Partition> profiles);

/// H(v) = H_{g->h}(mu_1..mu_n) * prod |Aut(mu_i)|, connected count. Memoized.
Rational local_hurwitz(int g, int h, std::span<const Partition> profiles);

/// Disconnected Hurwitz count with the conventions for undersized and
/// oversized conditions: H_0(empty,...) = 1, oversize -> 0, undersize ->
/// tilde extension with binomial weight.
Rational eval_hurwitz_extended(int d, std::span<const Partition> profiles, int h = 0);
/// Multilinear extension to W-element arguments.
Rational eval_hurwitz_extended(int d, std::span<const WElement> conditions, int h = 0);

}  // namespace tropgw
