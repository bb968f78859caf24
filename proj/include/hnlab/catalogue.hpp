#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnlab/binomial.hpp"
#include "hnlab/decomposition.hpp"
#include "hnlab/oversemigroup.hpp"

namespace hnlab {

/// One factor of the element f in R = T/fT, over the variables (X, Y, Z, W).
///
/// Binomial factors carry the weight assignment under which they are checked.
/// A pure power W^k has no weight constraint; it stands for a primary
/// component of length k and is reported as skipped.
struct Factor {
  enum class Kind { Binomial, Power };

  Kind kind = Kind::Binomial;
  Binomial binomial;                      // Kind::Binomial
  ExponentVector power;                   // Kind::Power
  std::optional<WeightAssignment> weights;  // Kind::Binomial
};

/// One admissible (id, n, m) combination of the example catalogue.
struct ExampleSpec {
  std::string id;
  Integer n = 1;
  Triple m{};
  std::vector<Factor> factors;
  std::vector<Integer> gcd_tuple;
  CaseRecord predicted;
  /// True when the predicted shape is stated without a worked argument.
  bool asserted = false;
  std::string weight_rule;
  /// Field hypotheses (characteristic, roots of unity); free text, never
  /// evaluated. Empty when there are none.
  std::string precondition;
};

struct Catalogue {
  int version = 1;
  std::vector<ExampleSpec> entries;

  const ExampleSpec* find(std::string_view id, Integer n, const Triple& m) const;
  std::vector<std::string> ids() const;
};

/// Parses the line-oriented catalogue format documented in
/// docs/catalogue-format.md. Throws ParseError with the offending line number.
Catalogue parse_catalogue(std::string_view text);

/// The catalogue compiled in from data/catalogue.txt.
const Catalogue& builtin_catalogue();

/// Throws NotInCatalogue unless (id, n, m) is listed.
ExampleSpec example_spec(std::string_view id, Integer n, const Triple& m);

struct WeightCheck {
  std::string subject;     // "f[1]", "J:v1 @ f[1]", ...
  std::string polynomial;  // rendered over X, Y, Z, W
  std::vector<Integer> weights;
  Integer first_weight = 0;
  Integer second_weight = 0;
  bool skipped = false;
  bool pass = false;
  std::string note;
};

struct ExampleReport {
  ExampleSpec spec;
  std::vector<WeightCheck> weight_checks;
  Integer gcd = 0;
  bool gcd_ok = false;
  /// predicted.e == n, the label matches the enumerated taxonomy and the
  /// multiplicity bookkeeping balances.
  bool record_ok = false;
  /// All weight checks and the gcd condition pass.
  bool verdict = false;
};

/// Checks each binomial factor of f under its own weights, the three
/// generators of J under m and under every factor's weights, and the gcd
/// condition. Failures are reported, not thrown.
ExampleReport verify_example(const ExampleSpec& spec);

}  // namespace hnlab
