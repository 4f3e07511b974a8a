#include <gtest/gtest.h>

#include <json.hpp>

#include "hopfq/constructors.hpp"
#include "hopfq/error.hpp"
#include "hopfq/group.hpp"
#include "hopfq/hopf_verify.hpp"
#include "hopfq/io.hpp"
#include "hopfq/scalar_parse.hpp"
#include "hopfq/suites.hpp"

using namespace hopfq;
using nlohmann::json;

namespace {

const std::string kData = HOPFQ_DATA_DIR;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::NonUnit;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

json ks3_json() { return json::parse(read_file(kData + "/kS3.json")); }

}  // namespace

TEST(Io, ShippedKS3) {
  const PresentationFile p = load_presentation(kData + "/kS3.json");
  EXPECT_EQ(p.hopf.dim(), 6u);
  EXPECT_TRUE(p.hopf.cocommutative);
  EXPECT_TRUE(verify_hopf(p.hopf).passed());
  // same key set and values after a round trip
  EXPECT_EQ(json::parse(dump_presentation(p)), ks3_json());
}

TEST(Io, RoundTrip) {
  std::vector<HopfPresentation> hs = {group_algebra(pauli_group()), dual_group_hopf(dihedral_group_d4()),
                                      taft(3, Cyclotomic::root_of_unity(1, 3)), ShuffleBialgebra(2, 3).hopf(),
                                      pareigis_window(2)};
  for (const auto& h : hs) {
    const PresentationFile p{h, presentation_conductor(h), Series::kFree};
    const std::string once = dump_presentation(p);
    const PresentationFile back = parse_presentation(once);
    EXPECT_EQ(dump_presentation(back), once) << h.name();
    EXPECT_EQ(back.hopf.algebra.mult, h.algebra.mult) << h.name();
    EXPECT_EQ(back.hopf.coalgebra.coproduct, h.coalgebra.coproduct) << h.name();
    EXPECT_EQ(back.hopf.antipode, h.antipode) << h.name();
    EXPECT_EQ(back.hopf.antipode_window, h.antipode_window) << h.name();
    EXPECT_TRUE(verify_hopf(back.hopf).passed()) << h.name();
  }
  EXPECT_EQ(presentation_conductor(taft(3, Cyclotomic::root_of_unity(1, 3))), 3);
  // key order is irrelevant
  json j = ks3_json();
  std::string reordered = "{";
  for (auto it = j.items().begin(); it != j.items().end(); ++it) {
    reordered = "{\"" + it.key() + "\": " + it.value().dump() + (reordered == "{" ? "}" : ", " + reordered.substr(1));
  }
  EXPECT_EQ(dump_presentation(parse_presentation(reordered)), dump_presentation(parse_presentation(j.dump())));
}

TEST(Io, SchemaErrors) {
  json j = ks3_json();
  // S = 0 on the last basis element
  for (auto& row : j["antipode"]) row[5] = "0";
  const std::string singular = j.dump();
  EXPECT_EQ(kind_of([&] { (void)parse_presentation(singular); }), ErrorKind::SchemaError);
  EXPECT_NE(message_of([&] { (void)parse_presentation(singular); }).find("antipode"), std::string::npos);

  j = ks3_json();
  j.erase("counit");
  EXPECT_NE(message_of([&] { (void)parse_presentation(j.dump()); }).find("counit: missing"), std::string::npos);

  j = ks3_json();
  j["mult"]["0,9"] = json::array();
  EXPECT_NE(message_of([&] { (void)parse_presentation(j.dump()); }).find("mult[\"0,9\"]"), std::string::npos);

  j = ks3_json();
  j["counit"][2] = "z(4,1)";
  EXPECT_NE(message_of([&] { (void)parse_presentation(j.dump()); }).find("counit[2]"), std::string::npos);

  j = ks3_json();
  j["dim"] = 5;
  EXPECT_EQ(kind_of([&] { (void)parse_presentation(j.dump()); }), ErrorKind::SchemaError);
}

TEST(Io, ParseErrors) {
  json j = ks3_json();
  j["counit"][1] = "1 + * 2";
  try {
    (void)parse_presentation(j.dump());
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
    EXPECT_NE(std::string(e.what()).find("counit[1]"), std::string::npos);
  }
  try {
    (void)parse_presentation("{\n  \"name\": \"x\",\n  \"basis\": [,]\n}");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Io, ScalarGrammar) {
  EXPECT_EQ(parse_scalar("z(3,1)+z(3,2)"), Scalar(-1));
  EXPECT_EQ(parse_scalar("z(4,1)^2"), Scalar(-1));
}

TEST(Io, GradedRoundTrip) {
  for (const auto& g : graded_battery(2)) {
    const std::string once = dump_graded(g.algebra);
    const GradedAlgebra back = parse_graded(once);
    EXPECT_EQ(dump_graded(back), once) << g.algebra.algebra.name;
    EXPECT_EQ(strong_grading(back).strong, g.expected_strong) << g.algebra.algebra.name;
  }
  json j = json::parse(dump_graded(graded_battery()[1].algebra));
  j["degree"][1] = 0;
  EXPECT_EQ(kind_of([&] { (void)parse_graded(j.dump()); }), ErrorKind::NotHomogeneous);
  j.erase("group");
  EXPECT_EQ(kind_of([&] { (void)parse_graded(j.dump()); }), ErrorKind::SchemaError);
}

TEST(Io, HeisRoundTrip) {
  const HeisElement f = random_heis(5, 2, 3) + HeisElement::monomial(3, 0, 0, 1, Rational(1, 3), Series::hbar(3));
  const HeisElement back = parse_heis(dump_heis(f), 3);
  EXPECT_EQ(back, f);
  EXPECT_EQ(dump_heis(back), dump_heis(f));
  const HeisElement g = parse_heis(read_file(kData + "/heis_uv.json"), 4);
  EXPECT_EQ(g.terms().size(), 3u);
  EXPECT_EQ(kind_of([] { (void)parse_heis(R"([{"m":1,"n":0,"p":-1,"coeff":"1"}])", 2); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { (void)parse_heis(R"([{"m":1,"n":0,"p":0,"c":"x","coeff":"1"}])", 2); }),
            ErrorKind::SchemaError);
}

TEST(Io, ReportJson) {
  Report r;
  r.name = "demo";
  r.seed = 7;
  r.elapsed_ms = 12.5;
  r.add("ok", 0, "", 3);
  r.add("bad", 2, "at x", 1);
  r.add_error("boom", "thrown");
  const json j = json::parse(dump_report(r));
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["elapsed_ms"], 0.0);
  EXPECT_EQ(j["passed"], false);
  ASSERT_EQ(j["checks"].size(), 3u);
  EXPECT_EQ(j["checks"][0]["status"], "pass");
  EXPECT_TRUE(j["checks"][0]["witness"].is_null());
  EXPECT_EQ(j["checks"][1]["status"], "fail");
  EXPECT_EQ(j["checks"][1]["residual_term_count"], 2);
  EXPECT_EQ(j["checks"][2]["status"], "error");
  EXPECT_EQ(json::parse(dump_report(r, true))["elapsed_ms"], 12.5);
}

TEST(Suites, Registry) {
  EXPECT_EQ(suite_names().size(), 10u);
  EXPECT_EQ(suite_names().back(), "all");
  EXPECT_EQ(kind_of([] { (void)run_suite("nosuch"); }), ErrorKind::UnknownSuite);
  SuiteConfig c;
  c.theta = "1/2";
  EXPECT_EQ(kind_of([&] { (void)run_suite("octonions", c); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([&] { (void)run_suite("group-cohomology", SuiteConfig{kDefaultSeed, std::nullopt, "z(3,1)"}); }),
            ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([&] { (void)run_suite("heis-torus", SuiteConfig{kDefaultSeed, 4, "1"}); }),
            ErrorKind::NotFormallyNilpotent);
  EXPECT_EQ(kind_of([&] { (void)run_suite("heis-torus", SuiteConfig{kDefaultSeed, 4, "h +"}); }),
            ErrorKind::ParseError);
}

TEST(Suites, HeisTorusWithTheta) {
  const Report r = run_suite("heis-torus", SuiteConfig{kDefaultSeed, 4, "h"});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.name, "heis-torus");
  EXPECT_EQ(r.seed, kDefaultSeed);
}

TEST(Suites, Deterministic) {
  for (const char* name : {"octonions", "group-cohomology", "pbw-gcl"}) {
    const Report a = run_suite(name, SuiteConfig{3, std::nullopt, std::nullopt});
    const Report b = run_suite(name, SuiteConfig{3, std::nullopt, std::nullopt});
    EXPECT_EQ(dump_report(a), dump_report(b)) << name;
    for (const auto& c : a.checks) EXPECT_EQ(c.status == Status::Pass, c.residual_terms == 0) << c.id;
  }
}

TEST(Suites, HopfAxioms) {
  const Report r = hopf_axioms_suite();
  for (const auto& c : r.checks) EXPECT_EQ(c.status, Status::Pass) << c.id << " " << c.witness;
  for (const char* host : {"kZ2", "kZ3", "kZ2^3", "kS3", "kD4", "kPauli8", "Taft2", "Taft3", "Taft5", "Sh(2,4)",
                           "Pareigis4"}) {
    EXPECT_NE(r.find(std::string(host) + ":antipode-antimultiplicative"), nullptr) << host;
  }
  EXPECT_NE(r.find("kS3:antipode-involutive"), nullptr);
  EXPECT_EQ(r.find("Taft3:antipode-involutive"), nullptr);
}

TEST(Suites, GroupCohomology) {
  const Report r = group_cohomology_suite(11);
  for (const auto& c : r.checks) EXPECT_EQ(c.status, Status::Pass) << c.id << " " << c.witness;
  EXPECT_NE(r.find("theta=2/5:UV=e^{2πiθ}VU"), nullptr);
}
