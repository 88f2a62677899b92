#pragma once

#include "tropgw/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropgw {

/// Integer partition, stored weakly decreasing. The empty partition is the
/// unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws std::invalid_argument on a non-positive part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// Number of parts equal to `value`.
  int count(int value) const;
  /// Partition with the parts of both operands.
  Partition joined(const Partition& other) const;
  /// Removes one copy of each part of `sub`; throws if `sub` is not contained.
  Partition without(const Partition& sub) const;
  bool contains(const Partition& sub) const;

  /// Canonical order: by size, then reverse-lexicographic within a size.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// |Aut(mu)| = prod_j k_j! over the multiplicities k_j of distinct parts.
std::uint64_t aut_count(const Partition& mu);
/// z(mu) = |Aut(mu)| * prod mu_i, the centralizer order of cycle type mu.
std::uint64_t centralizer_size(const Partition& mu);
Rational centralizer_rational(const Partition& mu);

/// All partitions of d (optionally with at most max_length parts), in
/// reverse-lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_length = std::nullopt);

/// All sub-multisets of mu's parts (each distinct sub-multiset once).
std::vector<Partition> sub_partitions(const Partition& mu);

struct TildeExtension {
  Partition extended;   // mu plus (d - |mu|) parts equal to 1
  Rational weight;      // C(j + k, k), j = #1-parts of mu, k = d - |mu|
};

/// Pads mu with ones up to size d. Returns nullopt for the oversize case
/// |mu| > d, which the Hurwitz conventions map to a zero contribution.
std::optional<TildeExtension> tilde_extend(const Partition& mu, int d);

/// "2,1,1"; the empty partition is "".
std::string to_string(const Partition& mu);
/// Inverse of to_string; parts may come in any order.
Partition parse_partition(const std::string& text);
/// "2;1,1" -> {(2), (1,1)}.
std::vector<Partition> parse_profile_list(const std::string& text);

/// Finite rational combination of partitions (the space of ramification
/// conditions). Zero coefficients are never stored.
class WElement {
 public:
  WElement() = default;
  static WElement basis(const Partition& mu, const Rational& c = 1);

  const std::map<Partition, Rational>& terms() const { return terms_; }
  Rational coefficient(const Partition& mu) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& mu, const Rational& c);
  WElement& operator+=(const WElement& other);
  friend WElement operator+(WElement a, const WElement& b) { return a += b; }
  friend WElement operator*(const Rational& c, const WElement& a);
  friend bool operator==(const WElement& a, const WElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Partition, Rational> terms_;
};

std::string to_string(const WElement& w);

}  // namespace tropgw
