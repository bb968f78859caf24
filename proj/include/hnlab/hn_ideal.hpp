#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hnlab/binomial.hpp"
#include "hnlab/oversemigroup.hpp"
#include "hnlab/semigroup.hpp"

namespace hnlab {

/// Exponent data (a, b) of the 2x3 matrix
///
///     ( x^a1  y^a2  z^a3 )
///     ( y^b2  z^b3  x^b1 )
///
/// with every entry a positive integer; c = a + b.
struct ExponentPair {
  Triple a{1, 1, 1};
  Triple b{1, 1, 1};

  Triple c() const { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
  friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;
};

/// Throws InvalidArgument when some entry of a or b is below 1.
void validate(const ExponentPair& e);

/// m1 = c2 c3 - a2 b3, m2 = c1 c3 - a3 b1, m3 = c1 c2 - a1 b2.
Triple multipliers(const ExponentPair& e);

/// The same triple through the expanded forms
/// m1 = a2 a3 + a3 b2 + b2 b3, m2 = a1 a3 + a1 b3 + b1 b3, m3 = a1 a2 + a2 b1 + b1 b2.
Triple multipliers_expanded(const ExponentPair& e);

/// The ideal I = (v1, v2, D) of 2x2 minors over the variables (x, y, z):
///   v1 = x^c1 - y^b2 z^a3,  v2 = y^c2 - x^a1 z^b3,  D = z^c3 - x^b1 y^a2.
class HNIdeal {
 public:
  const ExponentPair& exponents() const noexcept { return exponents_; }
  const std::array<Binomial, 3>& generators() const noexcept { return generators_; }
  const Triple& m() const noexcept { return m_; }
  Integer m_gcd() const noexcept { return m_gcd_; }

  /// S(I) = <m1, m2, m3>; present iff gcd(m) = 1.
  const std::optional<NumericalSemigroup>& value_semigroup() const noexcept {
    return value_semigroup_;
  }

  /// Empty when the value semigroup is defined.
  const std::string& diagnostic() const noexcept { return diagnostic_; }

 private:
  friend HNIdeal build(const ExponentPair& e);
  HNIdeal() = default;

  ExponentPair exponents_;
  std::array<Binomial, 3> generators_;
  Triple m_{};
  Integer m_gcd_ = 0;
  std::optional<NumericalSemigroup> value_semigroup_;
  std::string diagnostic_;
};

HNIdeal build(const ExponentPair& e);

/// Applies the relabelings (a, b) -> ((b2, b1, b3), (a2, a1, a3)), which swaps
/// m1 and m2, and (a, b) -> ((b1, b3, b2), (a1, a3, a2)), which swaps m2 and
/// m3, until m1 <= m2 <= m3.
ExponentPair normalize(const ExponentPair& e);

/// True iff each generator is homogeneous for the weights m.
bool vanishing_check(const HNIdeal& h);

/// One way of inverting m -> (a, b) for small m1. `solution` is set when the
/// branch yields positive integers that rebuild m exactly; otherwise
/// `rejection` says why not.
struct SolveBranch {
  std::string name;
  std::optional<ExponentPair> solution;
  std::string rejection;
};

/// Inverts m for m1 in {3, 4}. With m1 = 3 all of a2, a3, b2, b3 equal 1;
/// with m1 = 4 either a2 = 2 or b3 = 2 and the rest equal 1. Throws
/// NotImplementedRange for other m1, InvalidArgument unless
/// m1 < m2 < m3 with gcd 1.
std::vector<SolveBranch> solve_branches(const Triple& m);

/// The accepted solutions of solve_branches.
std::vector<ExponentPair> solve_exponents(const Triple& m);

enum class Outcome { Prime, PrimeOrNonCI, HypothesisNotSatisfied };

std::string_view to_string(Outcome o) noexcept;

/// Classification of I in a ring of multiplicity e <= 3 from the semigroup
/// hypothesis alone. Primality is never certified.
struct TheoremVerdict {
  bool gcd_ok = false;
  bool embedding_dimension_ok = false;
  bool uncovered = false;  // no symmetric semigroup of multiplicity m1 contains S(I)
  bool hypothesis_ok = false;
  std::optional<NumericalSemigroup> cover_witness;
  Integer multiplicity_e = 1;
  Outcome outcome = Outcome::HypothesisNotSatisfied;
  std::vector<std::string> possible_cases;
};

/// Throws BadMultiplicity unless 1 <= e <= 3.
TheoremVerdict theorem_verdict(const HNIdeal& h, Integer e);

}  // namespace hnlab
