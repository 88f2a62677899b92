#pragma once

#include "tropgw/partition.hpp"
#include "tropgw/rational.hpp"

namespace tropgw {

/// Star of a vertex: genus and the weights of its left and right flags.
struct VertexData {
  int genus = 0;
  Partition left;
  Partition right;

  /// Descendant power forced by the valence, k = 2g - 2 + l(left) + l(right).
  int descendant_power() const { return 2 * genus - 2 + left.length() + right.length(); }
};

/// z^{2g} coefficient of prod S(mu_i z) prod S(nu_i z) / S(z). Memoized.
/// Throws std::invalid_argument when |mu| != |nu| or |mu| == 0.
Rational vertex_multiplicity(const VertexData& v);
Rational vertex_multiplicity(int genus, const Partition& left, const Partition& right);

/// (sum mu_i^2 + sum nu_i^2 - 1) / 24.
Rational genus_one_closed_form(const Partition& left, const Partition& right);

/// Connected invariant <mu | tau_k(pt)> relative to one point; 0 when the
/// dimension count has no non-negative integral genus.
Rational one_point_invariant(const Partition& mu, int k);

struct CompletedCycle {
  int k = 0;
  WElement expansion;  // (k+1) + lower-order corrections
};

/// Completed cycle of tau_k(pt), i.e. the image of k! tau_k. The empty-
/// partition term vanishes for covers of positive degree and is omitted.
CompletedCycle completion_coefficients(int k);

/// Solves for the completed cycle of tau_k from the linear system
///   <mu | tau_k | nu>^bullet = (1/k!) sum_lambda rho_lambda H~^bullet_d(mu, lambda, nu)
/// over all d <= d_max and all mu, nu of d, with the left-hand sides taken
/// from tropical enumeration. Unknowns are all lambda with |lambda| <= k+1,
/// the empty partition included. Throws std::runtime_error when the system
/// is inconsistent or underdetermined.
WElement solve_completion_by_correspondence(int k, int d_max);

}  // namespace tropgw
