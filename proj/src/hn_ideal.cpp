#include "hnlab/hn_ideal.hpp"

#include <algorithm>
#include <numeric>

#include "checked.hpp"
#include "hnlab/decomposition.hpp"
#include "hnlab/errors.hpp"

namespace hnlab {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

void validate(const ExponentPair& e) {
  for (const auto* v : {&e.a, &e.b}) {
    for (Integer x : *v) {
      if (x < 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "exponents must be positive, got " + std::to_string(x));
      }
    }
  }
}

Triple multipliers(const ExponentPair& e) {
  const auto& [a1, a2, a3] = e.a;
  const auto& [b1, b2, b3] = e.b;
  const Integer c1 = checked_add(a1, b1);
  const Integer c2 = checked_add(a2, b2);
  const Integer c3 = checked_add(a3, b3);
  return {checked_sub(checked_mul(c2, c3), checked_mul(a2, b3)),
          checked_sub(checked_mul(c1, c3), checked_mul(a3, b1)),
          checked_sub(checked_mul(c1, c2), checked_mul(a1, b2))};
}

Triple multipliers_expanded(const ExponentPair& e) {
  const auto& [a1, a2, a3] = e.a;
  const auto& [b1, b2, b3] = e.b;
  auto sum3 = [](Integer x, Integer y, Integer z) {
    return checked_add(checked_add(x, y), z);
  };
  return {sum3(checked_mul(a2, a3), checked_mul(a3, b2), checked_mul(b2, b3)),
          sum3(checked_mul(a1, a3), checked_mul(a1, b3), checked_mul(b1, b3)),
          sum3(checked_mul(a1, a2), checked_mul(a2, b1), checked_mul(b1, b2))};
}

HNIdeal build(const ExponentPair& e) {
  validate(e);
  HNIdeal h;
  h.exponents_ = e;
  const auto& [a1, a2, a3] = e.a;
  const auto& [b1, b2, b3] = e.b;
  const Triple c{checked_add(a1, b1), checked_add(a2, b2), checked_add(a3, b3)};
  h.generators_ = {
      Binomial{{c[0], 0, 0}, {0, b2, a3}},
      Binomial{{0, c[1], 0}, {a1, 0, b3}},
      Binomial{{0, 0, c[2]}, {b1, a2, 0}},
  };

  h.m_ = multipliers(e);
  if (h.m_ != multipliers_expanded(e)) {
    throw Error(ErrorCode::InvariantViolation,
                "determinantal and expanded multiplier formulas disagree");
  }
  if (std::any_of(h.m_.begin(), h.m_.end(), [](Integer x) { return x < 3; })) {
    throw Error(ErrorCode::InvariantViolation, "multiplier below 3");
  }
  h.m_gcd_ = std::gcd(std::gcd(h.m_[0], h.m_[1]), h.m_[2]);
  if (h.m_gcd_ == 1) {
    h.value_semigroup_ = NumericalSemigroup::from_generators({h.m_[0], h.m_[1], h.m_[2]});
  } else {
    h.diagnostic_ = "gcd(m1, m2, m3) = " + std::to_string(h.m_gcd_) +
                    "; the value semigroup is undefined";
  }
  return h;
}

ExponentPair normalize(const ExponentPair& e) {
  validate(e);
  ExponentPair cur = e;
  while (true) {
    const Triple m = multipliers(cur);
    if (m[0] > m[1]) {
      cur = {{cur.b[1], cur.b[0], cur.b[2]}, {cur.a[1], cur.a[0], cur.a[2]}};
    } else if (m[1] > m[2]) {
      cur = {{cur.b[0], cur.b[2], cur.b[1]}, {cur.a[0], cur.a[2], cur.a[1]}};
    } else {
      return cur;
    }
  }
}

bool vanishing_check(const HNIdeal& h) {
  const auto& m = h.m();
  return std::all_of(h.generators().begin(), h.generators().end(), [&](const Binomial& g) {
    return weighted_degree(m, g.first) == weighted_degree(m, g.second);
  });
}

namespace {

// Solves for (a1, b1) given the numerators and denominators of the closed
// forms, then confirms the candidate by rebuilding m.
SolveBranch solve_branch(std::string name, const Triple& m, Triple a_rest, Triple b_rest,
                         Integer a1_num, Integer a1_den, Integer b1_num, Integer b1_den) {
  SolveBranch branch{std::move(name), std::nullopt, {}};
  if (a1_num % a1_den != 0 || b1_num % b1_den != 0) {
    branch.rejection = "a1 or b1 is not an integer";
    return branch;
  }
  const Integer a1 = a1_num / a1_den;
  const Integer b1 = b1_num / b1_den;
  if (a1 < 1 || b1 < 1) {
    branch.rejection = "a1 = " + std::to_string(a1) + ", b1 = " + std::to_string(b1) +
                       " is not positive";
    return branch;
  }
  ExponentPair e{{a1, a_rest[1], a_rest[2]}, {b1, b_rest[1], b_rest[2]}};
  if (multipliers(e) != m) {
    branch.rejection = "rebuilt multipliers differ";
    return branch;
  }
  branch.solution = e;
  return branch;
}

}  // namespace

std::vector<SolveBranch> solve_branches(const Triple& m) {
  const auto [m1, m2, m3] = m;
  if (m1 != 3 && m1 != 4) {
    throw Error(ErrorCode::NotImplementedRange,
                "exponent solving covers m1 in {3, 4}, got m1 = " + std::to_string(m1));
  }
  if (!(m1 < m2 && m2 < m3) || std::gcd(std::gcd(m1, m2), m3) != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "expected m1 < m2 < m3 with gcd 1");
  }
  std::vector<SolveBranch> out;
  if (m1 == 3) {
    out.push_back(solve_branch("a2=a3=b2=b3=1", m, {0, 1, 1}, {0, 1, 1},
                               2 * m2 - m3, 3, 2 * m3 - m2, 3));
  } else {
    out.push_back(solve_branch("a2=2", m, {0, 2, 1}, {0, 1, 1},
                               3 * m2 - m3, 4, m3 - m2, 2));
    out.push_back(solve_branch("b3=2", m, {0, 1, 1}, {0, 1, 2},
                               m2 - m3, 2, 3 * m3 - m2, 4));
  }
  return out;
}

std::vector<ExponentPair> solve_exponents(const Triple& m) {
  std::vector<ExponentPair> out;
  for (auto& branch : solve_branches(m)) {
    if (branch.solution) out.push_back(*branch.solution);
  }
  return out;
}

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Prime: return "Prime";
    case Outcome::PrimeOrNonCI: return "PrimeOrNonCI";
    case Outcome::HypothesisNotSatisfied: return "HypothesisNotSatisfied";
  }
  return "Unknown";
}

TheoremVerdict theorem_verdict(const HNIdeal& h, Integer e) {
  if (e < 1 || e > 3) {
    throw Error(ErrorCode::BadMultiplicity,
                "the theorem covers e(R) in [1, 3], got " + std::to_string(e));
  }
  TheoremVerdict v;
  v.multiplicity_e = e;
  v.gcd_ok = h.value_semigroup().has_value();
  if (v.gcd_ok) {
    const auto& s = *h.value_semigroup();
    v.embedding_dimension_ok = s.embedding_dimension() == 3;
    if (v.embedding_dimension_ok) {
      const auto cover = symmetric_cover({s, s.multiplicity()});
      v.uncovered = !cover.covered;
      v.cover_witness = cover.witness;
    }
  }
  v.hypothesis_ok = v.gcd_ok && v.embedding_dimension_ok && v.uncovered;
  if (!v.hypothesis_ok) {
    v.outcome = Outcome::HypothesisNotSatisfied;
  } else {
    v.outcome = e == 1 ? Outcome::Prime : Outcome::PrimeOrNonCI;
  }
  for (const auto& record : enumerate_cases(e)) v.possible_cases.push_back(record.label);
  return v;
}

}  // namespace hnlab
