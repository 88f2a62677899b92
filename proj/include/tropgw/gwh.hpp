#pragma once

#include "tropgw/local_gw.hpp"
#include "tropgw/partition.hpp"
#include "tropgw/rational.hpp"
#include "tropgw/trop_covers.hpp"

#include <vector>

namespace tropgw {

/// One source vertex of a cover of the tripod: left and right flags, marked
/// vertical ends, and `unmarked` weight-1 vertical ends.
struct TripodVertex {
  int genus = 0;
  Partition left;
  Partition right;
  Partition marked;
  int unmarked = 0;
  friend auto operator<=>(const TripodVertex&, const TripodVertex&) = default;
};

struct TripodCover {
  std::vector<TripodVertex> vertices;  // sorted; one connected component each
  Partition marked_profile;            // mu_X
  int genus = 0;                       // g_X, Euler-characteristic convention
  Rational coefficient;                // rho_{k+1, mu_X} / k!
  Rational hurwitz;                    // prod H(v) / |Aut X|
  Rational weight;                     // coefficient * hurwitz
};

struct LocalExpansion {
  std::vector<TripodCover> terms;
  Rational total;  // equals m_v / (|Aut left| |Aut right|)
};

/// Expands the star of a vertex with descendant power k into tripod covers.
/// Throws std::invalid_argument on inconsistent data and std::logic_error if
/// the weighted total misses the vertex multiplicity.
LocalExpansion local_expand(const VertexData& star);

struct SurgeryEntry {
  TropicalCover cover;           // caterpillar cover; fibers are the insertion points
  Rational coefficient;          // prod_i rho_{k_i+1, mu_i} / k_i!
  CoverMultiplicity multiplicity;
  Rational contribution;         // coefficient * multiplicity.total
};

struct SurgeryResult {
  std::vector<SurgeryEntry> entries;
  Rational total;
};

/// Replaces every vertex of a descendant cover by its local expansions and
/// attaches w unmarked weight-1 vertical ends wherever an edge of weight w
/// passes over an insertion point. Isomorphic results are merged.
SurgeryResult tgwh_surgery(const TropicalCover& cover, const std::vector<int>& insertions);

/// Inverse direction on a single surgery output: merges the vertices with
/// marked ends in each fiber, smooths the others, and drops vertical ends.
TropicalCover collapse_surgery_cover(const TropicalCover& caterpillar_cover, const std::vector<int>& insertions);

/// sum over completed-cycle terms of prod (rho/k!) H~^bullet_d(mu, lambda_1..lambda_n, nu).
Rational substitute_and_evaluate(const Partition& mu, const Partition& nu, const std::vector<int>& insertions);

}  // namespace tropgw
