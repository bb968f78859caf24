#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hnlab/binomial.hpp"
#include "hnlab/semigroup.hpp"

namespace hnlab {

/// (sigma_p, l_p) of one minimal prime: its multiplicity factor and the local
/// length of I at p.
struct CaseComponent {
  Integer sigma = 1;
  Integer length = 1;

  friend bool operator==(const CaseComponent&, const CaseComponent&) = default;
  friend auto operator<=>(const CaseComponent&, const CaseComponent&) = default;
};

/// Shape of a minimal primary decomposition in a ring of multiplicity e,
/// subject to e = sum sigma_p * l_p.
struct CaseRecord {
  Integer e = 1;
  std::vector<CaseComponent> components;
  std::string label;
  bool extrapolated = false;  // e > 3: generated mechanically, no letter label
};

/// Largest e accepted by enumerate_cases.
inline constexpr Integer kMaxCaseMultiplicity = 6;

/// Every multiset of (sigma, l) pairs with sum sigma * l = e, for 1 <= e <= 6.
/// For e <= 3 the records carry the letter labels (a), (b.1)-(b.3),
/// (c.1)-(c.5) in that order; larger e use "(e=N, #k)".
std::vector<CaseRecord> enumerate_cases(Integer e);

/// Puts components in display order: sigma * l descending, then sigma
/// descending.
std::vector<CaseComponent> canonical_components(std::vector<CaseComponent> components);

/// Label of the enumerated record with these components, if any.
std::optional<std::string> case_label(Integer e, const std::vector<CaseComponent>& components);

/// "{(2,1),(1,1)}"
std::string format_components(const std::vector<CaseComponent>& components);

struct ConsistencyReport {
  Integer m1 = 0;
  Integer e = 0;
  std::vector<Integer> component_multiplicity;  // e(R/p) = m1 * sigma_p
  Integer total = 0;                            // sum e(R/p) * l_p
  Integer expected_total = 0;                   // e(R/I) = m1 * e
  bool ok = false;
};

/// Throws InconsistentRecord when sum sigma * l differs from e, and
/// InvalidArgument when m1 < 3 or a component is not positive.
ConsistencyReport check_consistency(const CaseRecord& r, Integer m1);

/// Positive weights for the variables (X, Y, Z, W) of a monomial map
/// X -> t^w1, ..., W -> t^w4.
struct WeightAssignment {
  std::vector<Integer> weights;

  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

/// A binomial lies in the kernel of a monomial map iff both monomials have the
/// same weight. Throws DimensionMismatch when the arities differ and
/// InvalidArgument on a non-positive weight.
bool binomial_weight_vanishes(const WeightAssignment& w, const Binomial& b);

}  // namespace hnlab
