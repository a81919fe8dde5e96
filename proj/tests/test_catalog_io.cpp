#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfoid/errors.hpp"
#include "hopfoid/instance_io.hpp"
#include "hopfoid/report.hpp"
#include "hopfoid/suite.hpp"

using namespace hopfoid;
using nlohmann::ordered_json;

namespace {

bool same_pair(const PhiCompatPair& a, const PhiCompatPair& b) {
  const auto& ha = a.left.hopf;
  const auto& hb = b.left.hopf;
  return ha.labels() == hb.labels() && ha.algebra().mult == hb.algebra().mult &&
         ha.algebra().unit == hb.algebra().unit && ha.coalgebra().comult == hb.coalgebra().comult &&
         ha.coalgebra().counit == hb.coalgebra().counit && ha.antipode() == hb.antipode() &&
         a.left.alg.labels == b.left.alg.labels && a.left.alg.mult == b.left.alg.mult &&
         a.left.alg.unit == b.left.alg.unit && a.left.action == b.left.action &&
         a.left.coaction == b.left.coaction && a.right.alg.mult == b.right.alg.mult &&
         a.right.action == b.right.action && a.right.coaction == b.right.coaction && a.phi == b.phi &&
         a.phi_inv == b.phi_inv;
}

std::string exported(const std::string& name) { return serialize_instance(make_instance(name)); }

template <class E>
std::string message_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const E& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("unknown names") {
  CHECK_THROWS_AS(make_instance("c7"), std::out_of_range);
  CHECK_THROWS_AS(make_instance("c2").perturbation("nope"), std::out_of_range);
  CHECK_FALSE(parse_suite("everything"));
  for (Suite s : {Suite::Hopf, Suite::Yd, Suite::Bialgebroid, Suite::Lu, Suite::Symmetric, Suite::Theorems,
                  Suite::All}) {
    CHECK(parse_suite(suite_name(s)) == s);
  }
}

TEST_CASE("unperturbed catalog passes every suite check") {
  for (const auto& name : instance_names()) {
    if (name == "s3" || name == "s3-groupoid") continue;  // covered by the acceptance binary
    const SuiteReport r = run_suite(subject_of(make_instance(name)), Suite::All);
    CHECK_MESSAGE(r.passed, name);
    CHECK(r.checks.size() == suite_checks(Suite::All).size());
  }
}

TEST_CASE("each perturbation fails its declared checks") {
  for (const auto& name : instance_names()) {
    const auto d = make_instance(name);
    for (const auto& p : d.perturbations) {
      const SuiteReport r = run_suite(subject_of(d, p.name), Suite::All);
      CHECK_FALSE(r.passed);
      REQUIRE_FALSE(p.expected_failures.empty());
      for (const auto& check : p.expected_failures) {
        CHECK_MESSAGE(any_failed(r, check), std::string(name + "/" + p.name + ": " + check));
      }
    }
  }
}

TEST_CASE("export then parse is the identity") {
  for (const auto& name : instance_names()) {
    const auto d = make_instance(name);
    const std::string text = serialize_instance(d);
    const InstanceDescriptor back = parse_instance(text);
    CHECK(back.name == d.name);
    CHECK(back.description == d.description);
    CHECK(same_pair(back.pair, d.pair));
    REQUIRE(back.perturbations.size() == d.perturbations.size());
    for (std::size_t i = 0; i < d.perturbations.size(); ++i) {
      CHECK(back.perturbations[i].name == d.perturbations[i].name);
      CHECK(back.perturbations[i].expected_failures == d.perturbations[i].expected_failures);
      CHECK(back.perturbations[i].tau_identity == d.perturbations[i].tau_identity);
      CHECK(back.perturbations[i].antipode == d.perturbations[i].antipode);
      CHECK(back.perturbations[i].left_coaction == d.perturbations[i].left_coaction);
    }
    CHECK(serialize_instance(back) == text);
  }
}

TEST_CASE("export is byte-identical across runs") {
  for (const auto& name : instance_names()) CHECK(exported(name) == exported(name));
}

TEST_CASE("right structure is derived when absent") {
  ordered_json j = instance_to_json(make_instance("h4"));
  j.erase("right_yd");
  j.erase("phi");
  j.erase("phi_inv");
  const InstanceDescriptor d = instance_from_json(j);
  CHECK(same_pair(d.pair, make_instance("h4").pair));
}

TEST_CASE("malformed rationals and indices are located") {
  ordered_json j = instance_to_json(make_instance("c2"));
  SUBCASE("zero denominator") {
    j["hopf"]["mult"][0][2] = "1/0";
    const std::string msg = message_of<ParseError>(j.dump());
    CHECK(msg.find("hopf.mult[0]") != std::string::npos);
  }
  SUBCASE("index beyond dim squared") {
    j["hopf"]["mult"][0][1] = 4;
    CHECK_THROWS_AS(parse_instance(j.dump()), DimensionMismatch);
  }
  SUBCASE("duplicate entry") {
    j["hopf"]["mult"].push_back(j["hopf"]["mult"][0]);
    CHECK_THROWS_AS(parse_instance(j.dump()), ParseError);
  }
  SUBCASE("missing field") {
    j["hopf"].erase("antipode");
    const std::string msg = message_of<ParseError>(j.dump());
    CHECK(msg.find("hopf.antipode") != std::string::npos);
  }
  SUBCASE("wrong format tag") {
    j["format"] = "other";
    CHECK_THROWS_AS(parse_instance(j.dump()), ParseError);
  }
}

TEST_CASE("JSON syntax errors report line and column") {
  const std::string msg = message_of<ParseError>("{\n  \"format\": \"hopfoid-instance\",\n  oops\n}");
  CHECK(msg.find("line 3") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  const Subject s = subject_of(make_instance("h4"), "tau-identity");
  const SuiteReport a = run_suite(s, Suite::All);
  const SuiteReport b = run_suite(s, Suite::All);
  CHECK(report_json(a).dump(2) == report_json(b).dump(2));
  CHECK(render_table(a) == render_table(b));
  CHECK(report_json(a, true).contains("checks"));
  CHECK_FALSE(report_json(a).dump().find("seconds") != std::string::npos);
}

TEST_CASE("witness cap bounds the stored witnesses") {
  const Subject s = subject_of(make_instance("s3"), "tau-identity");
  VerifyOptions opts;
  opts.witness_cap = 2;
  const SuiteReport r = run_suite(s, Suite::Lu, opts);
  const CheckReport* sweep = r.checks.front().find("tau beta = alpha");
  REQUIRE(sweep != nullptr);
  CHECK(sweep->failures > 2);
  CHECK(sweep->witnesses.size() == 2);
}

TEST_CASE("parsed instances run like catalog ones") {
  const InstanceDescriptor d = parse_instance(exported("h4"));
  const SuiteReport r = run_suite(subject_of(d), Suite::Theorems);
  CHECK(r.passed);
  const SuiteReport bad = run_suite(subject_of(d, "antipode-sign"), Suite::Hopf);
  CHECK_FALSE(bad.passed);
  CHECK(any_failed(bad, "antipode"));
}
