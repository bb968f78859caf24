#include "hnlab/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "hnlab/errors.hpp"

namespace hnlab {

namespace {

constexpr Integer kUnreached = std::numeric_limits<Integer>::max();

// Round-robin relaxation of a residue table modulo `modulus` by one generator.
// Each orbit of r -> r + g (mod modulus) is walked once, starting from its
// current minimum; after the walk every entry is the least value reachable
// with the generators seen so far.
void relax(std::vector<Integer>& table, Integer g) {
  const auto modulus = static_cast<Integer>(table.size());
  const Integer step = g % modulus;
  if (step == 0) return;
  const Integer orbits = std::gcd(step, modulus);
  const Integer orbit_length = modulus / orbits;
  for (Integer start = 0; start < orbits; ++start) {
    Integer best = start;
    for (Integer i = 0, r = start; i < orbit_length; ++i, r = (r + step) % modulus) {
      if (table[r] < table[best]) best = r;
    }
    if (table[best] == kUnreached) continue;
    for (Integer i = 1, r = best; i < orbit_length; ++i) {
      const Integer next = (r + step) % modulus;
      table[next] = std::min(table[next], table[r] + g);
      r = next;
    }
  }
}

void check_generator(Integer g) {
  if (g < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "generators must be positive, got " + std::to_string(g));
  }
  if (g > kMaxGenerator) {
    throw Error(ErrorCode::LimitExceeded,
                "generator " + std::to_string(g) + " exceeds supported range");
  }
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Integer> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "empty generator list");

  std::vector<Integer> sorted(gens.begin(), gens.end());
  for (Integer g : sorted) check_generator(g);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Integer d = 0;
  for (Integer g : sorted) d = std::gcd(d, g);
  if (d != 1) {
    throw Error(ErrorCode::NonCofinite,
                "gcd of generators is " + std::to_string(d) + ", not 1");
  }

  const Integer m = sorted.front();
  if (m > kMaxMultiplicity) {
    throw Error(ErrorCode::LimitExceeded,
                "multiplicity " + std::to_string(m) + " exceeds supported range");
  }

  std::vector<Integer> table(static_cast<std::size_t>(m), kUnreached);
  table[0] = 0;
  std::vector<Integer> minimal{m};
  // Ascending order: g is redundant iff it already lies in the semigroup
  // generated by the smaller generators.
  for (auto it = sorted.begin() + 1; it != sorted.end(); ++it) {
    const Integer g = *it;
    if (table[g % m] <= g) continue;
    minimal.push_back(g);
    relax(table, g);
  }
  return NumericalSemigroup(std::move(minimal), std::move(table));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<Integer> gens) {
  return from_generators(std::span<const Integer>(gens.begin(), gens.size()));
}

NumericalSemigroup NumericalSemigroup::naturals() {
  return NumericalSemigroup({1}, {0});
}

bool NumericalSemigroup::contains(Integer n) const noexcept {
  if (n < 0) return false;
  return n >= apery_[static_cast<std::size_t>(n % multiplicity())];
}

Integer NumericalSemigroup::frobenius() const noexcept {
  return *std::max_element(apery_.begin(), apery_.end()) - multiplicity();
}

Integer NumericalSemigroup::genus() const noexcept {
  Integer g = 0;
  for (Integer w : apery_) g += w / multiplicity();
  return g;
}

bool NumericalSemigroup::includes(const NumericalSemigroup& other) const noexcept {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](Integer g) { return contains(g); });
}

std::vector<Integer> apery_set(const NumericalSemigroup& s, Integer n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "Apery set needs a positive element, got " + std::to_string(n));
  }
  if (!s.contains(n)) {
    throw Error(ErrorCode::NotMember, std::to_string(n) + " is not in the semigroup");
  }
  if (n > kMaxMultiplicity) {
    throw Error(ErrorCode::LimitExceeded,
                "Apery modulus " + std::to_string(n) + " exceeds supported range");
  }
  std::vector<Integer> table(static_cast<std::size_t>(n), kUnreached);
  table[0] = 0;
  for (Integer g : s.minimal_generators()) relax(table, g);
  return table;
}

GapProfile profile(const NumericalSemigroup& s, Integer max_frobenius) {
  GapProfile p;
  p.frobenius = s.frobenius();
  if (p.frobenius > max_frobenius) {
    throw Error(ErrorCode::LimitExceeded,
                "Frobenius number " + std::to_string(p.frobenius) +
                    " exceeds enumeration limit " + std::to_string(max_frobenius));
  }
  for (Integer x = 0; x <= p.frobenius; ++x) {
    if (s.contains(x)) {
      if (x < p.frobenius) ++p.n_below;
    } else {
      p.gaps.push_back(x);
    }
  }
  p.genus = static_cast<Integer>(p.gaps.size());
  return p;
}

bool is_symmetric(const NumericalSemigroup& s) noexcept {
  return 2 * s.genus() == s.frobenius() + 1;
}

TraitReport traits(const NumericalSemigroup& s, Integer max_frobenius) {
  const GapProfile p = profile(s, max_frobenius);
  TraitReport t;
  t.multiplicity = s.multiplicity();
  t.embedding_dimension = s.embedding_dimension();
  t.symmetric = 2 * p.genus == p.frobenius + 1;
  // ceil((F + 1) / 2) for F >= -1
  t.irreducible = p.genus == (p.frobenius + 2) / 2;

  const auto& gens = s.minimal_generators();
  for (Integer x : p.gaps) {
    const bool pseudo = std::all_of(gens.begin(), gens.end(),
                                    [&](Integer g) { return s.contains(x + g); });
    if (pseudo) t.pseudo_frobenius.push_back(x);
  }
  t.type = t.pseudo_frobenius.size();
  // N has type 0 by convention but is symmetric, hence almost symmetric.
  t.almost_symmetric =
      s.is_naturals() || 2 * p.genus == p.frobenius + static_cast<Integer>(t.type);
  return t;
}

}  // namespace hnlab
