#include "hnlab/oversemigroup.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "hnlab/errors.hpp"

namespace hnlab {

namespace {

constexpr std::array<Triple, 4> kExceptional{{
    {3, 4, 5},
    {3, 5, 7},
    {4, 5, 7},
    {4, 7, 9},
}};

// Depth-first walk over the oversemigroups of `base` with the same
// multiplicity. The adjoinable gaps (those in (m, F]) are decided in
// increasing order. A gap that is the sum of two elements already present is
// forced in; any other gap branches "leave out" first, then "adjoin". Every
// leaf is therefore closed under addition, and every oversemigroup is reached
// exactly once.
class OversemigroupWalk {
 public:
  OversemigroupWalk(const NumericalSemigroup& base, Integer max_frobenius)
      : base_(base), frobenius_(base.frobenius()) {
    if (frobenius_ > max_frobenius) {
      throw Error(ErrorCode::LimitExceeded,
                  "Frobenius number " + std::to_string(frobenius_) +
                      " exceeds enumeration limit " + std::to_string(max_frobenius));
    }
    const Integer m = base.multiplicity();
    member_.assign(static_cast<std::size_t>(std::max<Integer>(frobenius_, 0) + 1), 0);
    for (Integer x = 0; x <= frobenius_; ++x) {
      if (base.contains(x)) {
        member_[x] = 1;
      } else if (x > m) {
        window_.push_back(x);
      }
    }
    genus_ = base.genus();
  }

  // Calls `leaf` on each oversemigroup until it returns true. Returns the
  // number of leaves visited.
  template <typename Leaf>
  std::uint64_t run(Leaf&& leaf) {
    const std::size_t depth_max = window_.size();
    std::vector<std::uint8_t> stage(depth_max, 0);
    std::uint64_t visited = 0;
    std::size_t d = 0;
    while (true) {
      if (d == depth_max) {
        ++visited;
        if (leaf(*this)) return visited;
        if (depth_max == 0) return visited;
        d = depth_max - 1;
        continue;
      }
      const Integer x = window_[d];
      switch (stage[d]) {
        case 0:
          if (forced(x)) {
            adjoin(x);
            stage[d] = 2;
          } else {
            stage[d] = 1;
          }
          ++d;
          break;
        case 1:
          adjoin(x);
          stage[d] = 2;
          ++d;
          break;
        default:
          if (member_[x]) retract(x);
          stage[d] = 0;
          if (d == 0) return visited;
          --d;
          break;
      }
    }
  }

  bool current_is_symmetric() const {
    return 2 * current_genus() == current_frobenius() + 1;
  }

  Integer current_genus() const { return genus_ - adjoined_count_; }

  Integer current_frobenius() const {
    for (Integer x = frobenius_; x > 0; --x) {
      if (!member_[x]) return x;
    }
    return -1;
  }

  bool current_is_closed() const {
    for (Integer u = 1; u <= frobenius_; ++u) {
      if (!member_[u]) continue;
      for (Integer v = u; u + v <= frobenius_; ++v) {
        if (member_[v] && !member_[u + v]) return false;
      }
    }
    return true;
  }

  NumericalSemigroup current() const {
    std::vector<Integer> gens = base_.minimal_generators();
    for (Integer x : window_) {
      if (member_[x]) gens.push_back(x);
    }
    return NumericalSemigroup::from_generators(gens);
  }

 private:
  bool forced(Integer x) const {
    const Integer m = base_.multiplicity();
    for (Integer u = m; 2 * u <= x; ++u) {
      if (member_[u] && member_[x - u]) return true;
    }
    return false;
  }

  void adjoin(Integer x) {
    member_[x] = 1;
    ++adjoined_count_;
  }

  void retract(Integer x) {
    member_[x] = 0;
    --adjoined_count_;
  }

  const NumericalSemigroup& base_;
  Integer frobenius_;
  Integer genus_ = 0;
  Integer adjoined_count_ = 0;
  std::vector<std::uint8_t> member_;  // membership on [0, F(base)]
  std::vector<Integer> window_;
};

void require_supported_multiplicity(const NumericalSemigroup& s, Integer m) {
  if (m != s.multiplicity()) {
    throw Error(ErrorCode::UnsupportedMultiplicity,
                "target multiplicity " + std::to_string(m) +
                    " differs from the base multiplicity " +
                    std::to_string(s.multiplicity()));
  }
}

bool has_embedding_dimension_three(const Triple& t) {
  if (std::gcd(std::gcd(t[0], t[1]), t[2]) != 1) return false;
  if (t[1] % t[0] == 0) return false;
  // gcd(m1, m2) may exceed 1 here, so membership is decided directly.
  for (Integer k = 0; k * t[1] <= t[2]; ++k) {
    if ((t[2] - k * t[1]) % t[0] == 0) return false;
  }
  return true;
}

}  // namespace

std::span<const Triple> exceptional_triples() noexcept { return kExceptional; }

std::vector<NumericalSemigroup> oversemigroups_with_multiplicity(
    const NumericalSemigroup& s, Integer m, Integer max_frobenius) {
  require_supported_multiplicity(s, m);
  OversemigroupWalk walk(s, max_frobenius);
  std::vector<NumericalSemigroup> found;
  walk.run([&](const OversemigroupWalk& w) {
    if (!w.current_is_closed()) {
      throw Error(ErrorCode::InvariantViolation,
                  "oversemigroup search produced a set not closed under addition");
    }
    found.push_back(w.current());
    return false;
  });
  std::sort(found.begin(), found.end());
  return found;
}

CoverVerdict symmetric_cover(const CoverQuery& q, Integer max_frobenius) {
  require_supported_multiplicity(q.base, q.target_mult);
  OversemigroupWalk walk(q.base, max_frobenius);
  CoverVerdict verdict;
  verdict.search_count = walk.run([&](const OversemigroupWalk& w) {
    if (!w.current_is_symmetric()) return false;
    verdict.covered = true;
    verdict.witness = w.current();
    return true;
  });
  return verdict;
}

DeltaReport verify_delta(Integer bound, unsigned jobs) {
  if (bound < 3) {
    throw Error(ErrorCode::InvalidArgument,
                "bound must be at least 3, got " + std::to_string(bound));
  }
  std::vector<Triple> triples;
  for (Integer m1 = 3; m1 <= bound; ++m1) {
    for (Integer m2 = m1 + 1; m2 <= bound; ++m2) {
      for (Integer m3 = m2 + 1; m3 <= bound; ++m3) {
        const Triple t{m1, m2, m3};
        if (has_embedding_dimension_three(t)) triples.push_back(t);
      }
    }
  }

  std::vector<CoverVerdict> verdicts(triples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < triples.size(); i = next++) {
      const auto& t = triples[i];
      const auto base = NumericalSemigroup::from_generators({t[0], t[1], t[2]});
      verdicts[i] = symmetric_cover({base, t[0]});
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  DeltaReport report;
  report.bound = bound;
  report.triples_examined = triples.size();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    report.search_count += verdicts[i].search_count;
    if (!verdicts[i].covered) report.flagged.push_back(triples[i]);
  }
  std::sort(report.flagged.begin(), report.flagged.end());
  for (const auto& t : kExceptional) {
    if (t[2] <= bound) report.expected.push_back(t);
  }
  return report;
}

std::vector<WitnessFamily> witness_families(Integer m1) {
  if (m1 < 5) {
    throw Error(ErrorCode::InvalidArgument,
                "witness families need m1 >= 5, got " + std::to_string(m1));
  }
  auto range = [](std::vector<Integer>& out, Integer lo, Integer hi) {
    for (Integer x = lo; x <= hi; ++x) out.push_back(x);
  };

  std::vector<Integer> g1{m1};
  range(g1, m1 + 1, 2 * m1 - 2);
  std::vector<Integer> g2{m1};
  range(g2, m1 + 2, 2 * m1 - 1);
  std::vector<Integer> g3{m1, 2 * m1 - 1};
  range(g3, 2 * m1 + 1, 3 * m1 - 4);
  g3.push_back(3 * m1 - 2);
  std::vector<Integer> g4{m1, m1 + 1};
  range(g4, m1 + 4, 2 * m1 - 1);

  std::vector<WitnessFamily> families;
  families.push_back({"S1", 2 * m1 - 1, NumericalSemigroup::from_generators(g1)});
  families.push_back({"S2", 2 * m1 + 1, NumericalSemigroup::from_generators(g2)});
  families.push_back({"S3", 4 * m1 - 3, NumericalSemigroup::from_generators(g3)});
  families.push_back({"S4", 2 * m1 + 3, NumericalSemigroup::from_generators(g4)});

  for (const auto& f : families) {
    const auto& s = f.semigroup;
    if (s.multiplicity() != m1 || s.frobenius() != f.expected_frobenius ||
        !is_symmetric(s)) {
      throw Error(ErrorCode::InvariantViolation,
                  "witness family " + f.name + " for m1 = " + std::to_string(m1) +
                      " has Frobenius number " + std::to_string(s.frobenius()) +
                      ", expected symmetric with " +
                      std::to_string(f.expected_frobenius));
    }
  }
  return families;
}

}  // namespace hnlab
