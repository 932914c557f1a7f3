#include <catch2/catch_amalgamated.hpp>

#include "spanseg/selftest.hpp"

using namespace spanseg;
using namespace spanseg::selftest;

TEST_CASE("every registered check passes on the default universe", "[selftest]") {
  auto results = run_all();
  REQUIRE(results.size() == 19);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("the rendered report is deterministic and names every check", "[selftest]") {
  Options o;
  o.max_objects = 1;
  o.max_morphisms = 2;
  o.ambient_bound = 2;
  auto first = run_all(o);
  auto second = run_all(o);
  REQUIRE(render_report(first) == render_report(second));

  std::string report = render_report(first);
  for (const auto& r : first) REQUIRE(report.find(r.name) != std::string::npos);
  REQUIRE(report.find("19 checks") != std::string::npos);
}

TEST_CASE("check names are unique and kebab case", "[selftest]") {
  Options o;
  o.max_objects = 1;
  o.max_morphisms = 1;
  o.ambient_bound = 1;
  auto results = run_all(o);
  std::set<std::string> names;
  for (const auto& r : results) {
    names.insert(r.name);
    for (char c : r.name) REQUIRE((std::islower(c) || std::isdigit(c) || c == '-'));
  }
  REQUIRE(names.size() == results.size());
}

TEST_CASE("a failing check is reported with its name", "[selftest]") {
  std::vector<CheckResult> rigged = {{"alpha", true, "fine"}, {"beta", false, "broken"}};
  std::string report = render_report(rigged);
  REQUIRE(report.find("FAIL beta: broken") != std::string::npos);
  REQUIRE(report.find("ok   alpha: fine") != std::string::npos);
  REQUIRE(report.find("2 checks, 1 failures") != std::string::npos);
}
