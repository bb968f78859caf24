#include "hnlab/decomposition.hpp"

#include <algorithm>

#include "checked.hpp"
#include "hnlab/errors.hpp"

namespace hnlab {

namespace {

struct LetterCase {
  Integer e;
  std::vector<CaseComponent> components;  // canonical order
  const char* label;
};

// The small-multiplicity taxonomy, in its customary order.
const std::vector<LetterCase>& letter_cases() {
  static const std::vector<LetterCase> cases{
      {1, {{1, 1}}, "(a)"},
      {2, {{2, 1}}, "(b.1)"},
      {2, {{1, 2}}, "(b.2)"},
      {2, {{1, 1}, {1, 1}}, "(b.3)"},
      {3, {{3, 1}}, "(c.1)"},
      {3, {{1, 3}}, "(c.2)"},
      {3, {{1, 2}, {1, 1}}, "(c.3)"},
      {3, {{2, 1}, {1, 1}}, "(c.4)"},
      {3, {{1, 1}, {1, 1}, {1, 1}}, "(c.5)"},
  };
  return cases;
}

bool display_before(const CaseComponent& lhs, const CaseComponent& rhs) {
  const Integer lp = lhs.sigma * lhs.length;
  const Integer rp = rhs.sigma * rhs.length;
  if (lp != rp) return lp > rp;
  return lhs.sigma > rhs.sigma;
}

// Appends every multiset of components with total weight `remaining`, using
// only components that do not precede `floor` in display order, so each
// multiset is produced once.
void extend(Integer remaining, std::vector<CaseComponent>& current,
            const std::vector<CaseComponent>& all,
            std::size_t floor, std::vector<std::vector<CaseComponent>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = floor; i < all.size(); ++i) {
    const Integer w = all[i].sigma * all[i].length;
    if (w > remaining) continue;
    current.push_back(all[i]);
    extend(remaining - w, current, all, i, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<CaseComponent> canonical_components(std::vector<CaseComponent> components) {
  std::sort(components.begin(), components.end(), display_before);
  return components;
}

std::string format_components(const std::vector<CaseComponent>& components) {
  std::string out = "{";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ',';
    out += '(' + std::to_string(components[i].sigma) + ',' +
           std::to_string(components[i].length) + ')';
  }
  return out + '}';
}

std::vector<CaseRecord> enumerate_cases(Integer e) {
  if (e < 1 || e > kMaxCaseMultiplicity) {
    throw Error(ErrorCode::InvalidArgument,
                "case enumeration covers 1 <= e <= " +
                    std::to_string(kMaxCaseMultiplicity) + ", got " + std::to_string(e));
  }
  std::vector<CaseRecord> records;
  if (e <= 3) {
    for (const auto& c : letter_cases()) {
      if (c.e == e) records.push_back({e, c.components, c.label, false});
    }
    return records;
  }

  std::vector<CaseComponent> all;
  for (Integer sigma = 1; sigma <= e; ++sigma) {
    for (Integer length = 1; sigma * length <= e; ++length) all.push_back({sigma, length});
  }
  std::sort(all.begin(), all.end(), display_before);

  std::vector<std::vector<CaseComponent>> shapes;
  std::vector<CaseComponent> current;
  extend(e, current, all, 0, shapes);
  std::stable_sort(shapes.begin(), shapes.end(), [](const auto& lhs, const auto& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                                        display_before);
  });

  for (std::size_t k = 0; k < shapes.size(); ++k) {
    records.push_back({e, shapes[k],
                       "(e=" + std::to_string(e) + ", #" + std::to_string(k + 1) + ")",
                       true});
  }
  return records;
}

std::optional<std::string> case_label(Integer e, const std::vector<CaseComponent>& components) {
  if (e < 1 || e > kMaxCaseMultiplicity) return std::nullopt;
  const auto wanted = canonical_components(components);
  for (const auto& r : enumerate_cases(e)) {
    if (r.components == wanted) return r.label;
  }
  return std::nullopt;
}

ConsistencyReport check_consistency(const CaseRecord& r, Integer m1) {
  if (m1 < 3) {
    throw Error(ErrorCode::InvalidArgument, "m1 must be at least 3, got " + std::to_string(m1));
  }
  Integer weight = 0;
  for (const auto& c : r.components) {
    if (c.sigma < 1 || c.length < 1) {
      throw Error(ErrorCode::InvalidArgument, "case components must be positive");
    }
    weight = detail::checked_add(weight, detail::checked_mul(c.sigma, c.length));
  }
  if (weight != r.e) {
    throw Error(ErrorCode::InconsistentRecord,
                "sum of sigma * l is " + std::to_string(weight) + " but e = " +
                    std::to_string(r.e) + " for " + format_components(r.components));
  }

  ConsistencyReport report;
  report.m1 = m1;
  report.e = r.e;
  for (const auto& c : r.components) {
    const Integer mult = detail::checked_mul(m1, c.sigma);
    report.component_multiplicity.push_back(mult);
    report.total = detail::checked_add(report.total, detail::checked_mul(mult, c.length));
  }
  report.expected_total = detail::checked_mul(m1, r.e);
  report.ok = report.total == report.expected_total &&
              static_cast<Integer>(r.components.size()) <= r.e;
  return report;
}

bool binomial_weight_vanishes(const WeightAssignment& w, const Binomial& b) {
  if (std::any_of(w.weights.begin(), w.weights.end(), [](Integer x) { return x < 1; })) {
    throw Error(ErrorCode::InvalidArgument, "weights must be positive");
  }
  if (w.weights.size() != b.first.size() || w.weights.size() != b.second.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "weight assignment has " + std::to_string(w.weights.size()) +
                    " entries, binomial has " + std::to_string(b.first.size()) + " variables");
  }
  return weighted_degree(w.weights, b.first) == weighted_degree(w.weights, b.second);
}

}  // namespace hnlab
