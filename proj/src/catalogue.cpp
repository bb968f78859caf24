#include "hnlab/catalogue.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "hnlab/errors.hpp"
#include "hnlab/hn_ideal.hpp"

namespace hnlab {

namespace detail {
std::string_view builtin_catalogue_text();
}

namespace {

constexpr std::string_view kFormatLine = "format hnlab-catalogue 1";
const std::vector<std::string> kVariables{"X", "Y", "Z", "W"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

class LineParser {
 public:
  explicit LineParser(std::size_t line) : line_(line) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "catalogue line " + std::to_string(line_) + ": " + what);
  }

  Integer integer(std::string_view s) const {
    Integer v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) fail("bad integer '" + std::string(s) + "'");
    return v;
  }

  std::vector<Integer> vector(std::string_view s) const {
    std::vector<Integer> out;
    for (auto part : split(s, ',')) out.push_back(integer(part));
    return out;
  }

  Triple triple(std::string_view s) const {
    const auto v = vector(s);
    if (v.size() != 3) fail("expected three integers in '" + std::string(s) + "'");
    return {v[0], v[1], v[2]};
  }

  Factor factor(std::string_view s) const {
    const auto at = s.find('@');
    if (at == std::string_view::npos) fail("factor without '@': " + std::string(s));
    const auto body = trim(s.substr(0, at));
    const auto rule = trim(s.substr(at + 1));
    Factor f;
    if (rule == "free") {
      f.kind = Factor::Kind::Power;
      f.power = vector(body);
      if (f.power.size() != kVariables.size()) fail("power factor needs four exponents");
      return f;
    }
    const auto sign_pos = body.find_first_of("+-");
    if (sign_pos == std::string_view::npos) fail("binomial factor without sign");
    f.binomial.first = vector(trim(body.substr(0, sign_pos)));
    f.binomial.second = vector(trim(body.substr(sign_pos + 1)));
    f.binomial.second_sign = body[sign_pos] == '-' ? -1 : 1;
    if (f.binomial.first.size() != kVariables.size() ||
        f.binomial.second.size() != kVariables.size()) {
      fail("binomial factor needs four exponents per side");
    }
    try {
      validate(f.binomial);
    } catch (const Error& e) {
      fail(e.what());
    }
    f.weights = WeightAssignment{vector(rule)};
    return f;
  }

  std::vector<CaseComponent> components(std::string_view s) const {
    std::vector<CaseComponent> out;
    for (auto part : split(s, ' ')) {
      if (part.empty()) continue;
      const auto x = part.find('x');
      if (x == std::string_view::npos) fail("component '" + std::string(part) + "' is not SxL");
      out.push_back({integer(part.substr(0, x)), integer(part.substr(x + 1))});
    }
    if (out.empty()) fail("empty predicted record");
    return out;
  }

 private:
  std::size_t line_;
};

}  // namespace

const ExampleSpec* Catalogue::find(std::string_view id, Integer n, const Triple& m) const {
  for (const auto& e : entries) {
    if (e.id == id && e.n == n && e.m == m) return &e;
  }
  return nullptr;
}

std::vector<std::string> Catalogue::ids() const {
  std::set<std::string> unique;
  for (const auto& e : entries) unique.insert(e.id);
  return {unique.begin(), unique.end()};
}

Catalogue parse_catalogue(std::string_view text) {
  Catalogue cat;
  bool saw_format = false;
  std::size_t line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    LineParser p(line_no);
    if (!saw_format) {
      if (line != kFormatLine) p.fail("expected '" + std::string(kFormatLine) + "'");
      saw_format = true;
      continue;
    }
    const auto fields = split(line, '|');
    if (fields.size() != 10) {
      p.fail("expected 10 fields, found " + std::to_string(fields.size()));
    }
    ExampleSpec spec;
    spec.id = std::string(fields[0]);
    spec.n = p.integer(fields[1]);
    spec.m = p.triple(fields[2]);
    for (auto f : split(fields[3], ';')) spec.factors.push_back(p.factor(f));
    spec.gcd_tuple = p.vector(fields[4]);
    spec.predicted.label = std::string(fields[5]);
    spec.predicted.components = canonical_components(p.components(fields[6]));
    spec.predicted.e = spec.n;
    spec.predicted.extrapolated = spec.n > 3;
    if (fields[7] == "asserted") {
      spec.asserted = true;
    } else if (fields[7] != "derived") {
      p.fail("status must be 'derived' or 'asserted'");
    }
    spec.weight_rule = std::string(fields[8]);
    spec.precondition = fields[9] == "-" ? std::string() : std::string(fields[9]);
    if (spec.id.empty() || spec.n < 1) p.fail("bad id or n");
    if (cat.find(spec.id, spec.n, spec.m)) p.fail("duplicate entry " + spec.id);
    cat.entries.push_back(std::move(spec));
  }
  if (!saw_format) throw Error(ErrorCode::ParseError, "catalogue has no format line");
  return cat;
}

const Catalogue& builtin_catalogue() {
  static const Catalogue cat = parse_catalogue(detail::builtin_catalogue_text());
  return cat;
}

ExampleSpec example_spec(std::string_view id, Integer n, const Triple& m) {
  const auto* spec = builtin_catalogue().find(id, n, m);
  if (!spec) {
    throw Error(ErrorCode::NotInCatalogue,
                "no catalogue entry " + std::string(id) + " with n = " + std::to_string(n) +
                    ", m = " + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
                    std::to_string(m[2]));
  }
  return *spec;
}

namespace {

Binomial lift(const Binomial& b) {
  Binomial out = b;
  out.first.push_back(0);
  out.second.push_back(0);
  return out;
}

WeightCheck weigh(std::string subject, const Binomial& b, std::vector<Integer> weights) {
  WeightCheck c;
  c.subject = std::move(subject);
  c.polynomial = to_string(b, kVariables);
  c.weights = std::move(weights);
  try {
    c.first_weight = weighted_degree(c.weights, b.first);
    c.second_weight = weighted_degree(c.weights, b.second);
    c.pass = binomial_weight_vanishes(WeightAssignment{c.weights}, b);
  } catch (const Error& e) {
    c.pass = false;
    c.note = e.what();
  }
  return c;
}

}  // namespace

ExampleReport verify_example(const ExampleSpec& spec) {
  ExampleReport report;
  report.spec = spec;

  std::vector<HNIdeal> ideals;
  try {
    for (const auto& e : solve_exponents(spec.m)) ideals.push_back(build(e));
  } catch (const Error& e) {
    WeightCheck c;
    c.subject = "J";
    c.note = e.what();
    report.weight_checks.push_back(c);
  }
  if (ideals.empty() && report.weight_checks.empty()) {
    WeightCheck c;
    c.subject = "J";
    c.note = "no exponent data realizes m";
    report.weight_checks.push_back(c);
  }

  static const std::array<const char*, 3> kNames{"v1", "v2", "D"};
  for (const auto& h : ideals) {
    for (std::size_t g = 0; g < 3; ++g) {
      report.weight_checks.push_back(weigh(std::string("J:") + kNames[g] + " @ m",
                                           h.generators()[g],
                                           {spec.m.begin(), spec.m.end()}));
    }
  }

  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const auto& f = spec.factors[i];
    const std::string tag = "f[" + std::to_string(i + 1) + "]";
    if (f.kind == Factor::Kind::Power) {
      WeightCheck c;
      c.subject = tag;
      c.polynomial = monomial_to_string(f.power, kVariables);
      c.skipped = true;
      c.pass = true;
      c.note = "weight-unconstrained; primary component of length " +
               std::to_string(*std::max_element(f.power.begin(), f.power.end()));
      report.weight_checks.push_back(c);
      continue;
    }
    report.weight_checks.push_back(weigh(tag, f.binomial, f.weights->weights));
    for (const auto& h : ideals) {
      for (std::size_t g = 0; g < 3; ++g) {
        report.weight_checks.push_back(weigh(std::string("J:") + kNames[g] + " @ " + tag,
                                             lift(h.generators()[g]), f.weights->weights));
      }
    }
  }

  report.gcd = 0;
  for (Integer x : spec.gcd_tuple) report.gcd = std::gcd(report.gcd, x);
  report.gcd_ok = report.gcd == 1;

  try {
    const auto label = case_label(spec.predicted.e, spec.predicted.components);
    report.record_ok = spec.predicted.e == spec.n && label == spec.predicted.label &&
                       check_consistency(spec.predicted, spec.m[0]).ok;
  } catch (const Error&) {
    report.record_ok = false;
  }

  report.verdict = report.gcd_ok &&
                   std::all_of(report.weight_checks.begin(), report.weight_checks.end(),
                               [](const WeightCheck& c) { return c.pass; });
  return report;
}

}  // namespace hnlab
