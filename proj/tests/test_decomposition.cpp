#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hnlab/decomposition.hpp"
#include "hnlab/errors.hpp"

using hnlab::CaseComponent;
using hnlab::CaseRecord;
using hnlab::ErrorCode;
using hnlab::Integer;

namespace {

std::vector<std::string> labels(Integer e) {
  std::vector<std::string> out;
  for (const auto& r : hnlab::enumerate_cases(e)) out.push_back(r.label);
  return out;
}

// Multisets of (sigma, l) with sum sigma * l = e, by a separate recursion over
// partitions of e and the divisor pairs of each part.
std::size_t count_shapes(Integer e, Integer max_part = -1) {
  if (e == 0) return 1;
  if (max_part < 0) max_part = e;
  // Parts are taken in nonincreasing order; parts of equal size choose a
  // multiset of divisor pairs.
  std::size_t total = 0;
  for (Integer part = std::min(max_part, e); part >= 1; --part) {
    Integer kinds = 0;
    for (Integer d = 1; d <= part; ++d) kinds += part % d == 0;
    for (Integer k = 1; k * part <= e; ++k) {
      // multisets of size k from `kinds` kinds: C(kinds + k - 1, k)
      std::size_t c = 1;
      for (Integer i = 1; i <= k; ++i) c = c * static_cast<std::size_t>(kinds + k - i) / i;
      total += c * count_shapes(e - k * part, part - 1);
    }
  }
  return total;
}

}  // namespace

TEST_SUITE("decomposition") {

TEST_CASE("letter-labelled shapes") {
  CHECK(labels(1) == std::vector<std::string>{"(a)"});
  CHECK(labels(2) == std::vector<std::string>{"(b.1)", "(b.2)", "(b.3)"});
  CHECK(labels(3) ==
        std::vector<std::string>{"(c.1)", "(c.2)", "(c.3)", "(c.4)", "(c.5)"});

  const auto two = hnlab::enumerate_cases(2);
  CHECK(two[0].components == std::vector<CaseComponent>{{2, 1}});
  CHECK(two[1].components == std::vector<CaseComponent>{{1, 2}});
  CHECK(two[2].components == std::vector<CaseComponent>{{1, 1}, {1, 1}});

  const auto three = hnlab::enumerate_cases(3);
  CHECK(three[2].components == std::vector<CaseComponent>{{1, 2}, {1, 1}});
  CHECK(three[3].components == std::vector<CaseComponent>{{2, 1}, {1, 1}});
  for (Integer e = 1; e <= 3; ++e) {
    for (const auto& r : hnlab::enumerate_cases(e)) CHECK_FALSE(r.extrapolated);
  }
}

TEST_CASE("extrapolated shapes are complete and distinct") {
  for (Integer e = 1; e <= hnlab::kMaxCaseMultiplicity; ++e) {
    CAPTURE(e);
    const auto records = hnlab::enumerate_cases(e);
    CHECK(records.size() == count_shapes(e));
    std::set<std::vector<CaseComponent>> seen;
    std::set<std::string> names;
    for (const auto& r : records) {
      CHECK(r.e == e);
      CHECK(r.components == hnlab::canonical_components(r.components));
      CHECK(seen.insert(r.components).second);
      CHECK(names.insert(r.label).second);
      CHECK(r.extrapolated == (e > 3));
      if (e > 3) CHECK(r.label.rfind("(e=" + std::to_string(e) + ", #", 0) == 0);
      CHECK(hnlab::case_label(e, r.components) == r.label);
    }
  }
  CHECK(hnlab::enumerate_cases(4).size() == 11);
  CHECK(hnlab::enumerate_cases(5).size() == 17);
}

TEST_CASE("enumeration range") {
  for (Integer e : {0, 7}) {
    try {
      hnlab::enumerate_cases(e);
      FAIL("expected an error");
    } catch (const hnlab::Error& err) {
      CHECK(err.code() == ErrorCode::InvalidArgument);
    }
  }
  CHECK_FALSE(hnlab::case_label(2, {{1, 1}}));
  CHECK_FALSE(hnlab::case_label(9, {{9, 1}}));
}

TEST_CASE("multiplicity bookkeeping") {
  const auto a = hnlab::check_consistency({1, {{1, 1}}, "(a)"}, 3);
  CHECK(a.ok);
  CHECK(a.component_multiplicity == std::vector<Integer>{3});
  CHECK(a.total == 3);

  const auto b = hnlab::check_consistency({2, {{2, 1}}, "(b.1)"}, 3);
  CHECK(b.component_multiplicity == std::vector<Integer>{6});
  CHECK(b.total == 6);

  const auto c = hnlab::check_consistency({3, {{1, 1}, {1, 1}, {1, 1}}, "(c.5)"}, 4);
  CHECK(c.component_multiplicity == std::vector<Integer>{4, 4, 4});
  CHECK(c.total == 12);
  CHECK(c.expected_total == 12);

  try {
    hnlab::check_consistency({3, {{1, 1}, {1, 1}}, "?"}, 3);
    FAIL("expected an error");
  } catch (const hnlab::Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentRecord);
  }
  try {
    hnlab::check_consistency({1, {{1, 1}}, "(a)"}, 2);
    FAIL("expected an error");
  } catch (const hnlab::Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  try {
    hnlab::check_consistency({1, {{0, 1}, {1, 1}}, "?"}, 3);
    FAIL("expected an error");
  } catch (const hnlab::Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("every enumerated record balances") {
  for (Integer e = 1; e <= hnlab::kMaxCaseMultiplicity; ++e) {
    for (const auto& r : hnlab::enumerate_cases(e)) {
      for (Integer m1 : {3, 4, 5, 17}) CHECK(hnlab::check_consistency(r, m1).ok);
    }
  }
}

TEST_CASE("weight vanishing") {
  const hnlab::Binomial v1{{3, 0, 0}, {0, 1, 1}};
  CHECK(hnlab::binomial_weight_vanishes({{3, 4, 5}}, v1));

  const hnlab::Binomial d{{0, 0, 2}, {3, 1, 0}};
  CHECK(hnlab::binomial_weight_vanishes({{3, 5, 7}}, d));

  CHECK(hnlab::binomial_weight_vanishes({{1, 1}}, {{1, 0}, {0, 1}}));
  CHECK_FALSE(hnlab::binomial_weight_vanishes({{1, 2}}, {{1, 0}, {0, 1}}));

  try {
    hnlab::binomial_weight_vanishes({{3, 4}}, v1);
    FAIL("expected an error");
  } catch (const hnlab::Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  try {
    hnlab::binomial_weight_vanishes({{3, 0, 5}}, v1);
    FAIL("expected an error");
  } catch (const hnlab::Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

}  // TEST_SUITE
