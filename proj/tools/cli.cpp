#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>

#include "hnlab/catalogue.hpp"
#include "hnlab/decomposition.hpp"
#include "hnlab/errors.hpp"
#include "hnlab/hn_ideal.hpp"
#include "hnlab/oversemigroup.hpp"
#include "hnlab/semigroup.hpp"

namespace hnlab::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kSchema = "v1";
constexpr Integer kMaxCliGenerator = 1'000'000;
constexpr const char* kFrobeniusEnv = "HNLAB_MAX_FROBENIUS";

const std::vector<std::string> kXyz{"x", "y", "z"};

// A command produces a payload; a verification command may also flag a
// mismatch while still reporting what it found.
struct Outcome {
  json result;
  std::optional<Error> mismatch;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return kUsage;
    case ErrorCode::InvariantViolation:
    case ErrorCode::VerificationMismatch: return kMismatch;
    default: return kDomain;
  }
}

Integer parse_positive(std::string_view text, std::string_view what) {
  Integer v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end || v < 1) {
    throw Error(ErrorCode::ParseError,
                std::string(what) + ": '" + std::string(text) + "' is not a positive integer");
  }
  return v;
}

std::vector<Integer> parse_generators(const std::vector<std::string>& raw) {
  std::vector<Integer> gens;
  for (const auto& s : raw) {
    const Integer g = parse_positive(s, "generator");
    if (g > kMaxCliGenerator) {
      throw Error(ErrorCode::LimitExceeded, "generator " + s + " exceeds " +
                                                std::to_string(kMaxCliGenerator));
    }
    gens.push_back(g);
  }
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "no generators given");
  return gens;
}

Triple parse_triple(const std::string& text, std::string_view what) {
  Triple t{};
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto comma = text.find(',', start);
    if ((i < 2) != (comma != std::string::npos)) {
      throw Error(ErrorCode::ParseError,
                  std::string(what) + ": expected three comma-separated integers, got '" +
                      text + "'");
    }
    t[i] = parse_positive(std::string_view(text).substr(start, comma - start), what);
    start = comma + 1;
  }
  return t;
}

Integer max_frobenius_from_env() {
  const char* raw = std::getenv(kFrobeniusEnv);
  if (!raw || !*raw) return kDefaultMaxFrobenius;
  return parse_positive(raw, kFrobeniusEnv);
}

json triple_json(const Triple& t) { return json::array({t[0], t[1], t[2]}); }

json exponents_json(const ExponentPair& e) {
  return {{"a", triple_json(e.a)}, {"b", triple_json(e.b)}};
}

json semigroup_json(const NumericalSemigroup& s, Integer max_frob) {
  const auto p = profile(s, max_frob);
  const auto t = traits(s, max_frob);
  return {
      {"minimal_generators", s.minimal_generators()},
      {"multiplicity", t.multiplicity},
      {"embedding_dimension", t.embedding_dimension},
      {"apery", s.apery()},
      {"frobenius", p.frobenius},
      {"gaps", p.gaps},
      {"genus", p.genus},
      {"n_below", p.n_below},
      {"symmetric", t.symmetric},
      {"irreducible", t.irreducible},
      {"pseudo_frobenius", t.pseudo_frobenius},
      {"type", t.type},
      {"almost_symmetric", t.almost_symmetric},
  };
}

json optional_semigroup(const std::optional<NumericalSemigroup>& s) {
  return s ? json(s->minimal_generators()) : json(nullptr);
}

Outcome cmd_analyze(const std::vector<Integer>& gens, Integer max_frob) {
  return {semigroup_json(NumericalSemigroup::from_generators(gens), max_frob), {}};
}

Outcome cmd_sym_cover(const std::vector<Integer>& gens, Integer mult, Integer max_frob) {
  const auto s = NumericalSemigroup::from_generators(gens);
  const auto v = symmetric_cover({s, mult}, max_frob);
  return {{{"base", s.minimal_generators()},
           {"covered", v.covered},
           {"witness", optional_semigroup(v.witness)},
           {"search_count", v.search_count}},
          {}};
}

Outcome cmd_delta(Integer bound, unsigned jobs) {
  const auto r = verify_delta(bound, jobs);
  json flagged = json::array();
  json expected = json::array();
  for (const auto& t : r.flagged) flagged.push_back(triple_json(t));
  for (const auto& t : r.expected) expected.push_back(triple_json(t));
  Outcome o{{{"bound", r.bound},
             {"flagged", flagged},
             {"expected", expected},
             {"matches", r.matches()},
             {"triples_examined", r.triples_examined},
             {"search_count", r.search_count}},
            {}};
  if (!r.matches()) {
    o.mismatch = Error(ErrorCode::VerificationMismatch,
                       "flagged triples differ from the expected exceptional set");
  }
  return o;
}

Outcome cmd_hn_build(const ExponentPair& e, std::optional<Integer> mult_e, Integer max_frob) {
  const auto h = build(e);
  static const std::array<const char*, 3> kNames{"v1", "v2", "D"};
  json gens = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& g = h.generators()[i];
    gens.push_back({{"name", kNames[i]},
                    {"polynomial", to_string(g, kXyz)},
                    {"first", g.first},
                    {"second", g.second}});
  }
  const auto normal = normalize(e);
  json result{
      {"exponents", {{"a", triple_json(e.a)}, {"b", triple_json(e.b)}, {"c", triple_json(e.c())}}},
      {"generators", gens},
      {"m", triple_json(h.m())},
      {"gcd", h.m_gcd()},
      {"vanishing", vanishing_check(h)},
      {"normalized", {{"a", triple_json(normal.a)},
                      {"b", triple_json(normal.b)},
                      {"m", triple_json(multipliers(normal))}}},
      {"value_semigroup",
       h.value_semigroup() ? semigroup_json(*h.value_semigroup(), max_frob) : json(nullptr)},
  };
  if (!h.diagnostic().empty()) result["diagnostic"] = h.diagnostic();
  if (mult_e) {
    const auto v = theorem_verdict(h, *mult_e);
    result["verdict"] = {
        {"e", v.multiplicity_e},
        {"gcd_ok", v.gcd_ok},
        {"embedding_dimension_ok", v.embedding_dimension_ok},
        {"uncovered", v.uncovered},
        {"hypothesis_ok", v.hypothesis_ok},
        {"cover_witness", optional_semigroup(v.cover_witness)},
        {"outcome", to_string(v.outcome)},
        {"possible_cases", v.possible_cases},
    };
  }
  Outcome o{std::move(result), {}};
  if (!o.result["vanishing"].get<bool>()) {
    o.mismatch = Error(ErrorCode::VerificationMismatch, "a generator is not m-homogeneous");
  }
  return o;
}

Outcome cmd_hn_solve(const Triple& m) {
  json branches = json::array();
  json solutions = json::array();
  for (const auto& b : solve_branches(m)) {
    branches.push_back({{"name", b.name},
                        {"solution", b.solution ? exponents_json(*b.solution) : json(nullptr)},
                        {"rejection", b.solution ? json(nullptr) : json(b.rejection)}});
    if (b.solution) solutions.push_back(exponents_json(*b.solution));
  }
  return {{{"m", triple_json(m)}, {"branches", branches}, {"solutions", solutions}}, {}};
}

json components_json(const std::vector<CaseComponent>& comps) {
  json out = json::array();
  for (const auto& c : comps) out.push_back(json::array({c.sigma, c.length}));
  return out;
}

json example_json(const ExampleReport& r) {
  const auto& s = r.spec;
  json checks = json::array();
  for (const auto& c : r.weight_checks) {
    json item{{"subject", c.subject}, {"polynomial", c.polynomial}, {"weights", c.weights}};
    if (!c.skipped) {
      item["first_weight"] = c.first_weight;
      item["second_weight"] = c.second_weight;
    }
    item["skipped"] = c.skipped;
    item["pass"] = c.pass;
    if (!c.note.empty()) item["note"] = c.note;
    checks.push_back(std::move(item));
  }
  return {
      {"id", s.id},
      {"n", s.n},
      {"m", triple_json(s.m)},
      {"label", s.predicted.label},
      {"predicted", format_components(s.predicted.components)},
      {"components", components_json(s.predicted.components)},
      {"extrapolated", s.predicted.extrapolated},
      {"status", s.asserted ? "asserted" : "derived"},
      {"weight_rule", s.weight_rule},
      {"precondition", s.precondition.empty() ? json(nullptr) : json(s.precondition)},
      {"gcd_tuple", s.gcd_tuple},
      {"gcd", r.gcd},
      {"gcd_ok", r.gcd_ok},
      {"record_ok", r.record_ok},
      {"weight_checks", checks},
      {"verdict", r.verdict},
  };
}

Outcome cmd_catalogue_check(const std::string& id, Integer n, const Triple& m) {
  const auto report = verify_example(example_spec(id, n, m));
  Outcome o{example_json(report), {}};
  if (!report.verdict || !report.record_ok) {
    o.mismatch = Error(ErrorCode::VerificationMismatch,
                       "catalogue entry " + id + " failed verification");
  }
  return o;
}

Outcome cmd_catalogue_list() {
  json entries = json::array();
  for (const auto& s : builtin_catalogue().entries) {
    entries.push_back({{"id", s.id},
                       {"n", s.n},
                       {"m", triple_json(s.m)},
                       {"label", s.predicted.label},
                       {"predicted", format_components(s.predicted.components)},
                       {"status", s.asserted ? "asserted" : "derived"}});
  }
  const auto& cat = builtin_catalogue();
  return {{{"version", cat.version}, {"ids", cat.ids()}, {"count", cat.entries.size()},
           {"entries", entries}},
          {}};
}

Outcome cmd_catalogue_sweep() {
  json failures = json::array();
  std::size_t passed = 0;
  const auto& entries = builtin_catalogue().entries;
  for (const auto& s : entries) {
    const auto r = verify_example(s);
    if (r.verdict && r.record_ok) {
      ++passed;
    } else {
      failures.push_back({{"id", s.id}, {"n", s.n}, {"m", triple_json(s.m)},
                          {"verdict", r.verdict}, {"record_ok", r.record_ok}});
    }
  }
  Outcome o{{{"total", entries.size()}, {"passed", passed}, {"failures", failures}}, {}};
  if (passed != entries.size()) {
    o.mismatch = Error(ErrorCode::VerificationMismatch,
                       std::to_string(entries.size() - passed) + " catalogue entries failed");
  }
  return o;
}

Outcome cmd_cases(Integer e) {
  json records = json::array();
  for (const auto& r : enumerate_cases(e)) {
    records.push_back({{"label", r.label},
                       {"shape", format_components(r.components)},
                       {"components", components_json(r.components)},
                       {"extrapolated", r.extrapolated}});
  }
  return {{{"e", e}, {"count", records.size()}, {"records", records}}, {}};
}

// Text rendering is a view of the JSON report, so both formats carry the
// same numbers.
bool is_scalar(const json& v) { return !v.is_structured(); }

std::string scalar_text(const json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string tuple_text(const json& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += scalar_text(v[i]);
  }
  return out + ')';
}

void render(std::ostream& os, const std::string& key, const json& v, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (is_scalar(v)) {
    os << pad << key << ": " << scalar_text(v) << '\n';
    return;
  }
  if (v.empty()) {
    os << pad << key << ": (empty)\n";
    return;
  }
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, item] : v.items()) render(os, k, item, indent + 2);
    return;
  }
  const bool flat = std::all_of(v.begin(), v.end(), [](const json& x) { return is_scalar(x); });
  if (flat) {
    os << pad << key << ':';
    for (const auto& x : v) os << ' ' << scalar_text(x);
    os << '\n';
    return;
  }
  const bool tuples = std::all_of(v.begin(), v.end(), [](const json& x) {
    return x.is_array() && std::all_of(x.begin(), x.end(), is_scalar);
  });
  if (tuples) {
    os << pad << key << ':';
    for (const auto& x : v) os << ' ' << tuple_text(x);
    os << '\n';
    return;
  }
  os << pad << key << ":\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    render(os, "[" + std::to_string(i) + "]", v[i], indent + 2);
  }
}

void emit(std::ostream& out, const json& report, bool as_json) {
  if (as_json) {
    out << report.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : report.items()) render(out, k, v, 0);
}

json error_json(ErrorCode code, const std::string& message) {
  return {{"code", to_string(code)}, {"message", message}};
}

// Best-effort recovery of the command words and output format when argument
// parsing fails before CLI11 can tell us.
std::string command_words(const std::vector<std::string>& args) {
  static const std::set<std::string> kWords{"sgp",   "analyze", "sym-cover", "delta",
                                            "verify", "hn",     "build",     "solve",
                                            "catalogue", "check", "list",    "sweep",
                                            "cases"};
  std::string out;
  for (const auto& a : args) {
    if (!kWords.count(a)) break;
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

bool wants_json(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format=json") return true;
    if (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json") return true;
  }
  return false;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroup and Herzog-Northcott ideal toolkit", "hnlab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> raw_gens;
  Integer mult = 0;
  Integer bound = 0;
  unsigned jobs = 1;
  std::string a_text, b_text, m_text, id;
  std::optional<Integer> mult_e;
  Integer n = 0;
  Integer cases_e = 0;

  auto* sgp = app.add_subcommand("sgp", "Numerical semigroup queries")->require_subcommand(1);
  auto* analyze = sgp->add_subcommand("analyze", "Gaps, Apery set and traits");
  analyze->add_option("generators", raw_gens, "Generators")->required();
  auto* sym_cover =
      sgp->add_subcommand("sym-cover", "Search for a symmetric oversemigroup of given multiplicity");
  sym_cover->add_option("generators", raw_gens, "Generators")->required();
  sym_cover->add_option("--mult", mult, "Target multiplicity")->required();

  auto* delta = app.add_subcommand("delta", "Exceptional triples")->require_subcommand(1);
  auto* delta_verify = delta->add_subcommand("verify", "Scan all triples up to a bound");
  delta_verify->add_option("--bound", bound, "Largest m3")->required();
  delta_verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* hn = app.add_subcommand("hn", "Herzog-Northcott ideals")->require_subcommand(1);
  auto* hn_build = hn->add_subcommand("build", "Build I from exponents a, b");
  hn_build->add_option("--a", a_text, "a1,a2,a3")->required();
  hn_build->add_option("--b", b_text, "b1,b2,b3")->required();
  hn_build->add_option("--e", mult_e, "Multiplicity e(R) for the theorem verdict");
  auto* hn_solve = hn->add_subcommand("solve", "Recover exponents from m (m1 in {3, 4})");
  hn_solve->add_option("--m", m_text, "m1,m2,m3")->required();

  auto* cat = app.add_subcommand("catalogue", "Example catalogue")->require_subcommand(1);
  auto* cat_check = cat->add_subcommand("check", "Verify one catalogue entry");
  cat_check->add_option("--id", id, "Example id")->required();
  cat_check->add_option("--n", n, "Multiplicity n = e(R)")->required();
  cat_check->add_option("--m", m_text, "m1,m2,m3")->required();
  auto* cat_list = cat->add_subcommand("list", "List catalogue entries");
  auto* cat_sweep = cat->add_subcommand("sweep", "Verify every catalogue entry");

  auto* cases = app.add_subcommand("cases", "Decomposition shapes for e(R) = e");
  cases->add_option("--e", cases_e, "Multiplicity")->required();

  json report{{"schema", kSchema}, {"command", command_words(args)}, {"inputs", json::object()}};

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report["status"] = "error";
    report["result"] = nullptr;
    report["error"] = error_json(ErrorCode::ParseError, e.what());
    emit(out, report, wants_json(args));
    return kUsage;
  }
  const bool as_json = format == "json";

  std::function<Outcome()> action;
  json& inputs = report["inputs"];
  try {
    const Integer max_frob = max_frobenius_from_env();
    if (*analyze) {
      report["command"] = "sgp analyze";
      inputs["generators"] = raw_gens;
      const auto gens = parse_generators(raw_gens);
      inputs["generators"] = gens;
      action = [=] { return cmd_analyze(gens, max_frob); };
    } else if (*sym_cover) {
      report["command"] = "sgp sym-cover";
      inputs = {{"generators", raw_gens}, {"mult", mult}};
      const auto gens = parse_generators(raw_gens);
      inputs["generators"] = gens;
      action = [=] { return cmd_sym_cover(gens, mult, max_frob); };
    } else if (*delta_verify) {
      report["command"] = "delta verify";
      inputs = {{"bound", bound}, {"jobs", jobs}};
      action = [=] { return cmd_delta(bound, jobs); };
    } else if (*hn_build) {
      report["command"] = "hn build";
      inputs = {{"a", a_text}, {"b", b_text}, {"e", mult_e ? json(*mult_e) : json(nullptr)}};
      const ExponentPair e{parse_triple(a_text, "--a"), parse_triple(b_text, "--b")};
      inputs["a"] = triple_json(e.a);
      inputs["b"] = triple_json(e.b);
      action = [=] { return cmd_hn_build(e, mult_e, max_frob); };
    } else if (*hn_solve) {
      report["command"] = "hn solve";
      inputs = {{"m", m_text}};
      const Triple m = parse_triple(m_text, "--m");
      inputs["m"] = triple_json(m);
      action = [=] { return cmd_hn_solve(m); };
    } else if (*cat_check) {
      report["command"] = "catalogue check";
      inputs = {{"id", id}, {"n", n}, {"m", m_text}};
      const Triple m = parse_triple(m_text, "--m");
      inputs["m"] = triple_json(m);
      action = [=] { return cmd_catalogue_check(id, n, m); };
    } else if (*cat_list) {
      report["command"] = "catalogue list";
      action = [] { return cmd_catalogue_list(); };
    } else if (*cat_sweep) {
      report["command"] = "catalogue sweep";
      action = [] { return cmd_catalogue_sweep(); };
    } else if (*cases) {
      report["command"] = "cases";
      inputs = {{"e", cases_e}};
      action = [=] { return cmd_cases(cases_e); };
    }

    const auto start = std::chrono::steady_clock::now();
    auto outcome = action();
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    err << "hnlab: " << report["command"].get<std::string>() << " took " << elapsed.count()
        << " ms\n";

    report["status"] = outcome.mismatch ? "error" : "ok";
    report["result"] = std::move(outcome.result);
    if (outcome.mismatch) {
      report["error"] = error_json(outcome.mismatch->code(), outcome.mismatch->what());
      emit(out, report, as_json);
      return exit_code_for(outcome.mismatch->code());
    }
    emit(out, report, as_json);
    return kOk;
  } catch (const Error& e) {
    report["status"] = "error";
    report["result"] = nullptr;
    report["error"] = error_json(e.code(), e.what());
    emit(out, report, as_json);
    return exit_code_for(e.code());
  }
}

}  // namespace hnlab::cli
