#pragma once

#include "tropgw/partition.hpp"
#include "tropgw/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace tropgw {

/// Vector in the polynomial realization: b_mu is the monomial p_mu1 ... p_mum
/// and the vacuum is the empty partition.
class FockVector {
 public:
  FockVector() = default;
  static FockVector basis(const Partition& mu, const Rational& c = 1);
  static FockVector vacuum() { return basis(Partition{}); }

  const std::map<Partition, Rational>& terms() const { return terms_; }
  Rational coefficient(const Partition& mu) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Partition& mu, const Rational& c);

  FockVector& operator+=(const FockVector& other);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator*(const Rational& c, const FockVector& v);
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Partition, Rational> terms_;
};

/// scalar * a_{f_0} a_{f_1} ... ; applied rightmost factor first.
struct HeisenbergMonomial {
  std::vector<int> factors;
  Rational scalar = 1;
};

/// a_n multiplies by p_{-n} for n < 0 and acts as n d/dp_n for n > 0.
/// Throws std::invalid_argument on a zero index.
FockVector apply(const HeisenbergMonomial& m, const FockVector& v);
/// <b_mu | b_nu> = z(mu) delta.
Rational inner_product(const FockVector& x, const FockVector& y);

/// Operator with a grading by powers of u; every monomial keeps creation
/// factors (negative indices) left of annihilation factors.
class GradedOperator {
 public:
  using Monomials = std::map<std::vector<int>, Rational>;

  void add_term(int u_power, const std::vector<int>& factors, const Rational& c);
  const std::map<int, Monomials>& terms() const { return terms_; }
  Rational coefficient(int u_power, const std::vector<int>& factors) const;
  std::size_t size() const;

  friend bool operator==(const GradedOperator& a, const GradedOperator& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, Monomials> terms_;
};

/// Fock vector with a grading by powers of u.
using GradedVector = std::map<int, FockVector>;

GradedVector apply(const GradedOperator& op, const GradedVector& v);

/// 1/2 sum_{i,j >= 1} (a_{-i} a_{-j} a_{i+j} + a_{-(i+j)} a_i a_j), truncated
/// to i + j <= degree_cap.
GradedOperator cut_join(int degree_cap);

/// (1/z(mu) z(nu)) <b_mu | F2^r | b_nu>; throws on |mu| != |nu|.
Rational double_hurwitz(const Partition& mu, const Partition& nu, int r);

/// M_k restricted to |mu| = |nu| <= degree_cap and genus <= genus_cap: for a
/// vertex of genus g with creation part mu and annihilation part nu,
///   m_v(g, mu, nu) / (|Aut mu| |Aut nu|) u^{l(mu) - 1 + g} a_{-mu} a_{nu}.
/// Throws std::invalid_argument for k < 0.
GradedOperator build_Mk(int k, int degree_cap, int genus_cap);

/// M_k assembled from the vertex-operator form
///   Coeff_{z^0} (1/S(z)) sum_g z^{-2g} u^{g-1} (1/L!) Coeff_{w^0} :(sum_x S(xz) a^_x w^x)^L:,
/// L = k + 2 - 2g, with a^_x = u a_x for x < 0, by expanding ordered tuples.
GradedOperator build_Mk_vertex_form(int k, int degree_cap, int genus_cap);

/// Coeff_{u^{g + l(mu) - 1}} <b_mu | M_k1 ... M_kn | b_nu> / (z(mu) z(nu)),
/// g forced by the insertions. Throws std::invalid_argument on |mu| != |nu|
/// or when the insertions do not give an integral genus.
Rational matrix_element(const Partition& mu, const Partition& nu, const std::vector<int>& insertions);

struct WickContraction {
  int left_monomial, left_factor;    // the positive-index factor
  int right_monomial, right_factor;  // the later negative-index factor
  int weight;
};

struct FeynmanDiagram {
  std::vector<WickContraction> contractions;
  Integer weight = 1;           // product of all contraction weights
  Integer internal_weight = 1;  // contractions between inner monomials only
};

struct WickResult {
  Rational value = 0;           // sum of scalar * weight over diagrams
  Rational internal_value = 0;  // same with internal weights
  std::vector<FeynmanDiagram> diagrams;
};

/// Vacuum expectation of a product of monomials as a sum over pairings of
/// each positive factor with a later factor of opposite index. The first and
/// last monomials are the boundary; with `check_shape` the first must be all
/// positive and the last all negative (else std::invalid_argument).
WickResult wick_expectation(const std::vector<HeisenbergMonomial>& product, bool check_shape = true);

/// <v_0 | m_0 m_1 ... | v_0> by direct action.
Rational vacuum_expectation(const std::vector<HeisenbergMonomial>& product);

/// Parses and evaluates an operator expression such as
///   "bra 2 M(1) ket 1,1", "bra 1,1 F2^2 ket 2", "a(2) a(-2)".
/// Tokens: a(n), F2, M(k), bra <partition>, ket <partition>, ^r on the
/// preceding operator. Returns the pairing per power of u. Throws
/// std::invalid_argument naming the offending token position.
std::map<int, Rational> evaluate_expression(const std::string& text);

std::string to_string(const FockVector& v);

}  // namespace tropgw
