#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "nkgeo/suites.hpp"

using nkgeo::Instance;
using nkgeo::Rational;
using nkgeo::SuiteResult;

namespace {

Instance family_instance(const Rational& d) {
  return nkgeo::instance_from_standard_example(d, std::nullopt);
}

std::set<std::string> collect_tags(const std::vector<SuiteResult>& results) {
  std::set<std::string> tags;
  for (const SuiteResult& s : results)
    for (const nkgeo::Check& c : s.checks) tags.insert(c.tag);
  return tags;
}

}  // namespace

TEST_CASE("all suites pass across the family") {
  for (const Rational& d : {Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
    Instance inst = family_instance(d);
    for (const SuiteResult& s : nkgeo::run_suite("all", inst)) {
      INFO("delta=", nkgeo::to_string(d), " suite=", s.suite_name);
      CHECK(s.all_pass());
    }
  }
}

TEST_CASE("equation tag coverage on the flat member") {
  std::set<std::string> tags =
      collect_tags(nkgeo::run_suite("all", family_instance(1)));
  const char* required[] = {
      "Eq1.1",  "Eq1.2",  "Eq1.3",  "Eq1.4",  "Eq1.5",  "Eq2.1",  "Eq2.2",
      "Eq2.3",  "Eq2.4",  "Eq2.5",  "Eq2.6",  "Eq2.7",  "Eq2.8",  "Eq2.9",
      "Eq2.10", "Eq2.11", "Eq2.12", "Eq2.13", "Eq2.14", "Eq2.15", "Eq2.16",
      "Eq2.17", "Eq3.1",  "Eq3.2",  "Eq3.3",  "Eq3.11", "Eq3.15", "Eq3.19",
      "Eq3.21", "Eq4.5",  "Eq4.6",  "Eq4.7",  "Eq4.8",  "Eq4.9",  "Eq4.12",
      "Eq4.17", "Delta-f"};
  for (const char* tag : required) {
    INFO("missing tag ", tag);
    CHECK(tags.count(tag) == 1);
  }
}

TEST_CASE("theorem tags appear on the curved members") {
  std::set<std::string> tags =
      collect_tags(nkgeo::run_suite("all", family_instance(Rational(1, 2))));
  CHECK(tags.count("Thm3.3") == 1);
  std::set<std::string> flat_tags =
      collect_tags(nkgeo::run_suite("all", family_instance(1)));
  CHECK(flat_tags.count("Thm3.3(iii)") == 1);
  CHECK(flat_tags.count("Thm4.2") == 1);
}

TEST_CASE("checks come back in canonical natural tag order") {
  auto results = nkgeo::run_suite("nullity", family_instance(1));
  REQUIRE(results.size() == 1);
  std::vector<std::string> tags;
  for (const nkgeo::Check& c : results[0].checks) tags.push_back(c.tag);
  // numeric segments compare as numbers: Eq2.9 before Eq2.10
  std::vector<std::string> expect = {"Eq2.6",  "Eq2.7",  "Eq2.8",  "Eq2.9",
                                     "Eq2.10", "Eq2.11", "Eq2.12", "Eq2.13",
                                     "Eq2.14", "Eq2.15", "EqA",    "Lem3.1-hyp"};
  CHECK(tags == expect);
}

TEST_CASE("suite output is deterministic") {
  auto a = nkgeo::run_suite("all", family_instance(Rational(1, 2)));
  auto b = nkgeo::run_suite("all", family_instance(Rational(1, 2)));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].suite_name == b[i].suite_name);
    REQUIRE(a[i].checks.size() == b[i].checks.size());
    for (std::size_t j = 0; j < a[i].checks.size(); ++j) {
      CHECK(a[i].checks[j].tag == b[i].checks[j].tag);
      CHECK(a[i].checks[j].residual == b[i].checks[j].residual);
      CHECK(a[i].checks[j].pass == b[i].checks[j].pass);
      CHECK(a[i].checks[j].note == b[i].checks[j].note);
    }
  }
}

TEST_CASE("pressure override feeds the soliton chain") {
  Instance inst = family_instance(1);
  auto results = nkgeo::run_suite("gradient", inst, Rational(4));
  REQUIRE(results.size() == 1);
  const nkgeo::Check* c = results[0].find("Eq1.5");
  REQUIRE(c != nullptr);
  CHECK(c->pass);
  CHECK(c->note.find("Omega=-7/3") != std::string::npos);
}

TEST_CASE("structure suite reports axiom failures without throwing") {
  nkgeo::FrameManifold M(1, nkgeo::Tensor(3, 2, 1));
  nkgeo::Tensor phi(3, 1, 1);
  nkgeo::ContactStructure S(std::move(phi),
                            nkgeo::Tensor::basis_vector(3, 0),
                            nkgeo::Tensor::basis_covector(3, 0));
  Instance inst = nkgeo::make_instance(std::move(M), std::move(S), std::nullopt);
  auto results = nkgeo::run_suite("structure", inst);
  REQUIRE(results.size() == 1);
  CHECK_FALSE(results[0].all_pass());
}

TEST_CASE("suites with unmet prerequisites throw when requested directly") {
  nkgeo::FrameManifold M(1, nkgeo::Tensor(3, 2, 1));
  nkgeo::ContactStructure S(nkgeo::Tensor(3, 1, 1),
                            nkgeo::Tensor::basis_vector(3, 0),
                            nkgeo::Tensor::basis_covector(3, 0));
  Instance inst = nkgeo::make_instance(std::move(M), std::move(S), std::nullopt);
  CHECK_THROWS_AS(nkgeo::run_suite("star", inst), nkgeo::SpecError);
  CHECK_THROWS_AS(nkgeo::run_suite("no-such-suite", family_instance(1)),
                  nkgeo::SpecError);
}

TEST_CASE("sweep collects per-instance results") {
  auto entries = nkgeo::sweep_delta(
      {Rational(0), Rational(1, 2), Rational(1), Rational(2)}, "all");
  REQUIRE(entries.size() == 4);
  for (const auto& e : entries) {
    CHECK(e.error.empty());
    CHECK_FALSE(e.results.empty());
    for (const SuiteResult& s : e.results) {
      INFO("delta=", nkgeo::to_string(e.delta), " suite=", s.suite_name);
      CHECK(s.all_pass());
    }
  }
}

TEST_CASE("suite name registry") {
  CHECK(nkgeo::kSuiteNames.size() == 8);
  CHECK(nkgeo::kSuiteNames.front() == "structure");
  CHECK(nkgeo::kSuiteNames.back() == "theorem42");
}
