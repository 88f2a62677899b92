#pragma once

#include "tropgw/partition.hpp"
#include "tropgw/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropgw {

/// Attachment codes for unbounded edges.
inline constexpr int kLeftEnd = -1;
inline constexpr int kRightEnd = -2;

struct CoverVertex {
  int position = 0;  // index of the target point (fiber) the vertex maps to
  int genus = 0;
  friend auto operator<=>(const CoverVertex&, const CoverVertex&) = default;
};

/// `multiplicity` parallel edges of equal weight with equal endpoints.
struct EdgeClass {
  int from = kLeftEnd;  // vertex id or kLeftEnd
  int to = kRightEnd;   // vertex id or kRightEnd
  int weight = 1;
  int multiplicity = 1;
  bool wraps = false;   // crosses the base point of a cycle target
  bool bounded() const { return from >= 0 && to >= 0; }
  friend auto operator<=>(const EdgeClass&, const EdgeClass&) = default;
};

/// Vertical ends (caterpillar and cycle targets) grouped like edge classes.
struct VerticalEnd {
  int vertex = 0;
  int weight = 1;
  int multiplicity = 1;
  bool marked = true;
  friend auto operator<=>(const VerticalEnd&, const VerticalEnd&) = default;
};

struct TropicalCover {
  int degree = 0;
  int genus = 0;  // Euler-characteristic genus, may be negative when disconnected
  std::vector<CoverVertex> vertices;
  std::vector<EdgeClass> edges;
  std::vector<VerticalEnd> vertical_ends;
};

struct CoverMultiplicity {
  Rational automorphisms = 1;  // |Aut|
  Rational vertex_factor = 1;
  Integer edge_factor = 1;     // product of bounded edge weights
  Rational total = 0;          // vertex_factor * edge_factor / automorphisms
};

struct WeightedCover {
  TropicalCover cover;
  CoverMultiplicity multiplicity;
};

/// Source genus forced by sum k_i = 2g + l(mu) + l(nu) - 2, or nullopt.
std::optional<int> descendant_genus(const Partition& mu, const Partition& nu, const std::vector<int>& insertions);

struct DescendantProblem {
  Partition left;
  Partition right;
  std::vector<int> insertions;
  bool connected = false;
  /// When set and different from the forced genus, there are no covers.
  std::optional<int> genus;
};

/// Covers of the line with one vertex over each insertion point, by a
/// left-to-right sweep. Throws std::invalid_argument on |mu| != |nu| or a
/// negative insertion.
std::vector<WeightedCover> enumerate_descendant_covers(const DescendantProblem& p);
Rational descendant_invariant(const DescendantProblem& p);

struct HurwitzTarget {
  enum class Shape { Caterpillar, Cycle };
  Shape shape = Shape::Caterpillar;
  /// Caterpillar: first and last are the horizontal ends, the rest are
  /// vertical ends in order. Cycle: one vertical end per target vertex.
  /// Missing conditions are filled with the trivial profile.
  std::vector<Partition> profiles;
  bool connected = false;
  std::optional<int> genus;
};

/// Tropical Hurwitz covers, one representative per isomorphism class.
std::vector<WeightedCover> enumerate_hurwitz_covers(const HurwitzTarget& target, int degree);
Rational tropical_hurwitz(const HurwitzTarget& target, int degree);

/// In-flags, vertical ends and out-flags at a vertex of a Hurwitz cover.
struct VertexStar {
  Partition in;
  Partition vertical;
  Partition out;
};
VertexStar vertex_star(const TropicalCover& cover, int vertex);

/// prod H(v) * prod_{bounded} w / |Aut| for a caterpillar or cycle cover.
CoverMultiplicity hurwitz_cover_multiplicity(const TropicalCover& cover);

/// Canonical string of a cover up to relabeling vertices within a fiber.
std::string canonical_key(const TropicalCover& cover);
/// Structure-preserving vertex permutations times the factorials of all
/// edge-class and vertical-end-class multiplicities.
Integer automorphism_count(const TropicalCover& cover);
/// Euler-characteristic genus from vertex genera and bounded edges.
int cover_genus(const TropicalCover& cover);
bool cover_connected(const TropicalCover& cover);

struct SplitCheck {
  int split = 0;  // number of insertions left of the cut
  Rational direct;
  Rational glued;
  bool holds() const { return direct == glued; }
};

/// Degeneration identity at every cut between insertions (and before the
/// first and after the last):
///   <mu|..|nu>^bullet = sum_eta z(eta) <mu|left|eta>^bullet <eta|right|nu>^bullet.
std::vector<SplitCheck> split_at_point(const Partition& mu, const Partition& nu, const std::vector<int>& insertions);

}  // namespace tropgw
