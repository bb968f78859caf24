#include <doctest.h>

#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "hnlab/catalogue.hpp"
#include "hnlab/errors.hpp"

using hnlab::ErrorCode;
using hnlab::Integer;
using hnlab::Triple;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const hnlab::WeightCheck* find_check(const hnlab::ExampleReport& r, const std::string& subject) {
  for (const auto& c : r.weight_checks) {
    if (c.subject == subject) return &c;
  }
  return nullptr;
}

ErrorCode parse_error_of(const std::string& text) {
  try {
    hnlab::parse_catalogue(text);
  } catch (const hnlab::Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST_SUITE("catalogue") {

TEST_CASE("the compiled-in catalogue is the shipped file") {
  const auto from_disk = hnlab::parse_catalogue(read_file(HNLAB_CATALOGUE_PATH));
  const auto& built_in = hnlab::builtin_catalogue();
  REQUIRE(from_disk.entries.size() == built_in.entries.size());
  for (std::size_t i = 0; i < built_in.entries.size(); ++i) {
    CHECK(from_disk.entries[i].id == built_in.entries[i].id);
    CHECK(from_disk.entries[i].m == built_in.entries[i].m);
  }
  CHECK(built_in.ids() == std::vector<std::string>{"case357", "caseab1c1_i", "caseab1c1_ii",
                                                   "caseb2c2", "caseb3c3", "casec4", "casec5",
                                                   "domain_b3c3", "domain_c4", "domain_c5"});
}

TEST_CASE("admissible combinations") {
  for (Integer n : {1, 2}) {
    for (Triple m : {Triple{3, 4, 5}, Triple{4, 5, 7}, Triple{4, 7, 9}}) {
      CHECK_NOTHROW(hnlab::example_spec("caseab1c1_i", n, m));
    }
    try {
      hnlab::example_spec("caseab1c1_i", n, {3, 5, 7});
      FAIL("expected an error");
    } catch (const hnlab::Error& e) {
      CHECK(e.code() == ErrorCode::NotInCatalogue);
    }
  }
  for (Triple m : {Triple{3, 4, 5}, Triple{3, 5, 7}, Triple{4, 5, 7}}) {
    CHECK_NOTHROW(hnlab::example_spec("caseab1c1_i", 3, m));
  }
  try {
    hnlab::example_spec("caseab1c1_i", 5, {3, 4, 5});
    FAIL("expected an error");
  } catch (const hnlab::Error& e) {
    CHECK(e.code() == ErrorCode::NotInCatalogue);
  }
}

TEST_CASE("entry contents") {
  const auto a = hnlab::example_spec("caseab1c1_i", 2, {3, 4, 5});
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0].weights->weights == std::vector<Integer>{6, 8, 10, 7});
  CHECK(a.gcd_tuple == std::vector<Integer>{6, 8, 10, 7});
  CHECK(a.predicted.label == "(b.1)");
  CHECK(a.predicted.components == std::vector<hnlab::CaseComponent>{{2, 1}});
  CHECK_FALSE(a.asserted);

  const auto b = hnlab::example_spec("caseb3c3", 2, {3, 4, 5});
  REQUIRE(b.factors.size() == 2);
  CHECK(b.factors[0].kind == hnlab::Factor::Kind::Power);
  CHECK(b.factors[0].power == std::vector<Integer>{0, 0, 0, 1});
  CHECK(b.factors[1].binomial.first == std::vector<Integer>{0, 0, 0, 1});
  CHECK(b.factors[1].binomial.second == std::vector<Integer>{1, 0, 0, 0});
  CHECK(b.predicted.label == "(b.3)");

  const auto c = hnlab::example_spec("casec4", 3, {4, 5, 7});
  CHECK(c.predicted.components == std::vector<hnlab::CaseComponent>{{2, 1}, {1, 1}});
  CHECK(c.predicted.label == "(c.4)");
  // W-weight of the first factor: (n - 2) m1 + m2.
  CHECK(c.factors[0].weights->weights[3] == (3 - 2) * 4 + 5);
  CHECK(c.asserted);

  const auto d = hnlab::example_spec("case357", 2, {3, 5, 7});
  CHECK(d.factors[0].binomial.second_sign == 1);
  CHECK_FALSE(d.precondition.empty());

  const auto e = hnlab::example_spec("caseb2c2", 5, {4, 7, 9});
  CHECK(e.predicted.extrapolated);
  CHECK(e.predicted.label == "(e=5, #2)");
}

TEST_CASE("verifying examples") {
  const auto r = hnlab::verify_example(hnlab::example_spec("caseab1c1_i", 2, {3, 4, 5}));
  CHECK(r.verdict);
  CHECK(r.gcd == 1);
  const auto* f = find_check(r, "f[1]");
  REQUIRE(f);
  CHECK(f->polynomial == "W^2-X*Y");
  CHECK(f->first_weight == 14);
  CHECK(f->second_weight == 14);

  const auto s = hnlab::verify_example(hnlab::example_spec("case357", 2, {3, 5, 7}));
  CHECK(s.verdict);
  const auto* g = find_check(s, "f[1]");
  REQUIRE(g);
  CHECK(g->polynomial == "W^2+X*Z");
  CHECK(g->first_weight == 10);

  const auto t = hnlab::verify_example(hnlab::example_spec("caseb2c2", 3, {3, 4, 5}));
  CHECK(t.verdict);
  CHECK(t.record_ok);
  CHECK(t.spec.predicted.label == "(c.2)");
  const auto* p = find_check(t, "f[1]");
  REQUIRE(p);
  CHECK(p->skipped);
  CHECK(p->note.find("length 3") != std::string::npos);
}

TEST_CASE("a corrupted weight is caught") {
  auto spec = hnlab::example_spec("caseab1c1_i", 2, {3, 4, 5});
  spec.factors[0].weights->weights[3] = 6;
  const auto r = hnlab::verify_example(spec);
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(find_check(r, "f[1]")->pass);
  // J is still homogeneous: only X, Y, Z weights enter its generators.
  CHECK(find_check(r, "J:v1 @ f[1]")->pass);
}

TEST_CASE("a common factor in the gcd tuple is caught") {
  auto spec = hnlab::example_spec("caseab1c1_i", 2, {3, 4, 5});
  spec.gcd_tuple = {6, 8, 10, 8};
  const auto r = hnlab::verify_example(spec);
  CHECK(r.gcd == 2);
  CHECK_FALSE(r.gcd_ok);
  CHECK_FALSE(r.verdict);
}

TEST_CASE("a record that does not balance is reported") {
  auto spec = hnlab::example_spec("caseb2c2", 3, {3, 4, 5});
  spec.predicted.components = {{1, 2}};
  const auto r = hnlab::verify_example(spec);
  CHECK_FALSE(r.record_ok);
}

TEST_CASE("full sweep") {
  for (const auto& spec : hnlab::builtin_catalogue().entries) {
    CAPTURE(spec.id);
    CAPTURE(spec.n);
    CAPTURE(spec.m);
    const auto r = hnlab::verify_example(spec);
    CHECK(r.verdict);
    CHECK(r.record_ok);
    CHECK(r.gcd_ok);
    // Independent gcd.
    Integer g = 0;
    for (Integer x : spec.gcd_tuple) g = std::gcd(g, x);
    CHECK(g == 1);
    CHECK(spec.predicted.e == spec.n);
  }
}

TEST_CASE("parse errors name the line") {
  CHECK(parse_error_of("") == ErrorCode::ParseError);
  CHECK(parse_error_of("format hnlab-catalogue 2\n") == ErrorCode::ParseError);
  const std::string head = "format hnlab-catalogue 1\n";
  CHECK(parse_error_of(head + "x | 1 | 3,4,5\n") == ErrorCode::ParseError);
  CHECK(parse_error_of(head + "x | 1 | 3,4 | 0,0,0,1 @ free | 3,4,5 | (a) | 1x1 | derived | r | -\n") ==
        ErrorCode::ParseError);
  CHECK(parse_error_of(head + "x | 1 | 3,4,5 | 0,0,0,1 @ free | 3,4,5 | (a) | 1x1 | maybe | r | -\n") ==
        ErrorCode::ParseError);
  CHECK(parse_error_of(head + "x | 1 | 3,4,5 | 0,0,0,1 - 0,0,0,1 @ 3,4,5,1 | 3,4,5 | (a) | 1x1 | derived | r | -\n") ==
        ErrorCode::ParseError);
  try {
    hnlab::parse_catalogue(head + "\n# comment\nbad line\n");
    FAIL("expected an error");
  } catch (const hnlab::Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }

  const auto ok = hnlab::parse_catalogue(
      "# header\n" + head + "x | 1 | 3,4,5 | 0,0,0,1 @ free | 3,4,5 | (a) | 1x1 | derived | r | -\n");
  REQUIRE(ok.entries.size() == 1);
  CHECK(ok.entries[0].precondition.empty());
}

}  // TEST_SUITE
