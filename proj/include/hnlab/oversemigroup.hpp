#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnlab/semigroup.hpp"

namespace hnlab {

using Triple = std::array<Integer, 3>;

struct CoverQuery {
  NumericalSemigroup base;
  Integer target_mult = 0;
};

struct CoverVerdict {
  bool covered = false;
  std::optional<NumericalSemigroup> witness;
  /// Candidate oversemigroups examined before the search stopped.
  std::uint64_t search_count = 0;
};

struct DeltaReport {
  Integer bound = 0;
  std::vector<Triple> flagged;   // sorted
  std::vector<Triple> expected;  // the exceptional triples with m3 <= bound
  std::size_t triples_examined = 0;
  std::uint64_t search_count = 0;

  bool matches() const { return flagged == expected; }
};

struct WitnessFamily {
  std::string name;
  Integer expected_frobenius = 0;
  NumericalSemigroup semigroup;
};

/// The four triples <3,4,5>, <3,5,7>, <4,5,7>, <4,7,9>: the only embedding
/// dimension three semigroups not contained in a symmetric semigroup of the
/// same multiplicity.
std::span<const Triple> exceptional_triples() noexcept;

/// Every numerical semigroup U containing S with mult(U) = m, S included,
/// sorted. Only m = mult(S) is supported (UnsupportedMultiplicity otherwise).
/// The search window is bounded by F(S), which must not exceed max_frobenius.
std::vector<NumericalSemigroup> oversemigroups_with_multiplicity(
    const NumericalSemigroup& s, Integer m,
    Integer max_frobenius = kDefaultMaxFrobenius);

/// Decides whether some symmetric semigroup of multiplicity q.target_mult
/// contains q.base, stopping at the first one found. Candidates are visited
/// by deciding the gaps of the base in increasing order, "leave out" before
/// "adjoin", so the witness is the first hit in that order.
CoverVerdict symmetric_cover(const CoverQuery& q,
                             Integer max_frobenius = kDefaultMaxFrobenius);

/// Runs symmetric_cover over every triple 3 <= m1 < m2 < m3 <= bound with
/// gcd 1 and embedding dimension 3. `jobs` > 1 spreads triples over threads;
/// the report is identical for any job count.
DeltaReport verify_delta(Integer bound, unsigned jobs = 1);

/// The four symmetric families used for multiplicity m1 >= 5, each checked
/// for symmetry and its closed-form Frobenius number before being returned
/// (InvariantViolation otherwise).
std::vector<WitnessFamily> witness_families(Integer m1);

}  // namespace hnlab
