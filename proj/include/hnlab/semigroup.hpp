#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hnlab {

using Integer = std::int64_t;

/// Gap listings beyond this Frobenius number are refused unless the caller
/// raises the limit explicitly.
inline constexpr Integer kDefaultMaxFrobenius = 1'000'000;

/// Apéry tables are dense arrays indexed by residue, so the modulus is capped.
inline constexpr Integer kMaxMultiplicity = 10'000'000;

/// Keeps every Apéry element below 2^63 when combined with kMaxMultiplicity.
inline constexpr Integer kMaxGenerator = 100'000'000'000;

struct GapProfile {
  Integer frobenius = -1;  // -1 encodes S = N
  std::vector<Integer> gaps;
  Integer genus = 0;
  Integer n_below = 0;  // elements of S strictly below the Frobenius number
};

struct TraitReport {
  Integer multiplicity = 1;
  std::size_t embedding_dimension = 1;
  bool symmetric = true;
  bool irreducible = true;
  std::vector<Integer> pseudo_frobenius;
  std::size_t type = 0;
  bool almost_symmetric = true;
};

/// A numerical semigroup <m_1, ..., m_r>, stored as its minimal system of
/// generators together with the Apéry set with respect to the multiplicity.
///
/// Instances are immutable once built. Two semigroups compare equal exactly
/// when they are the same subset of N.
class NumericalSemigroup {
 public:
  /// Canonicalizes an arbitrary generating list. Throws EmptyInput on an empty
  /// list, InvalidArgument on a non-positive entry and NonCofinite when the
  /// gcd of the list is not 1.
  static NumericalSemigroup from_generators(std::span<const Integer> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Integer> gens);

  static NumericalSemigroup naturals();

  const std::vector<Integer>& minimal_generators() const noexcept { return gens_; }

  /// Least element of S in each residue class modulo the multiplicity;
  /// apery()[i] is congruent to i.
  const std::vector<Integer>& apery() const noexcept { return apery_; }

  Integer multiplicity() const noexcept { return gens_.front(); }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }
  bool is_naturals() const noexcept { return gens_.front() == 1; }

  /// O(1) via the Apéry set: n is in S iff n >= apery[n mod m].
  bool contains(Integer n) const noexcept;

  /// Frobenius number max(apery) - m, without listing gaps.
  Integer frobenius() const noexcept;

  /// Genus by Selmer's formula, without listing gaps.
  Integer genus() const noexcept;

  /// True when every element of `other` lies in this semigroup.
  bool includes(const NumericalSemigroup& other) const noexcept;

  friend bool operator==(const NumericalSemigroup& lhs,
                         const NumericalSemigroup& rhs) noexcept {
    return lhs.gens_ == rhs.gens_;
  }
  friend std::strong_ordering operator<=>(const NumericalSemigroup& lhs,
                                          const NumericalSemigroup& rhs) noexcept {
    return lhs.gens_ <=> rhs.gens_;
  }

 private:
  NumericalSemigroup(std::vector<Integer> gens, std::vector<Integer> apery)
      : gens_(std::move(gens)), apery_(std::move(apery)) {}

  std::vector<Integer> gens_;
  std::vector<Integer> apery_;
};

/// Apéry set of S with respect to a nonzero element n of S. Throws NotMember
/// when n is not in S.
std::vector<Integer> apery_set(const NumericalSemigroup& s, Integer n);

/// Throws LimitExceeded when the Frobenius number exceeds `max_frobenius`.
GapProfile profile(const NumericalSemigroup& s,
                   Integer max_frobenius = kDefaultMaxFrobenius);

bool is_symmetric(const NumericalSemigroup& s) noexcept;

TraitReport traits(const NumericalSemigroup& s,
                   Integer max_frobenius = kDefaultMaxFrobenius);

}  // namespace hnlab
