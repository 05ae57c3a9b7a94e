#include <catch2/catch_amalgamated.hpp>

#include "seifertcs/checks.hpp"

using namespace seifertcs;

TEST_CASE("builtin catalog shape") {
  const auto catalog = builtin_catalog();
  CHECK(catalog.size() >= 50);

  // must contain every L(p,1) up to p = 10 and the Poincaré sphere
  for (long p = 1; p <= 10; ++p)
    CHECK(std::find(catalog.begin(), catalog.end(), SeifertData(0, p, {})) !=
          catalog.end());
  CHECK(std::find(catalog.begin(), catalog.end(),
                  parse_seifert("[0, -1; (2,1), (3,1), (5,1)]")) != catalog.end());

  bool genus3 = false;
  for (const auto& d : catalog) {
    CHECK(chern_number(d) != Rational(0));
    CHECK(d.genus() <= 3);
    genus3 = genus3 || (d.genus() == 3 && !d.cones().empty());
  }
  CHECK(genus3);
}

TEST_CASE("check suites pass on a correct build") {
  for (const auto& suite : {"dedekind", "torsion", "regularization", "all"}) {
    const auto results = run_check_suite(suite);
    CHECK_FALSE(results.empty());
    for (const auto& r : results) {
      CAPTURE(suite, r.name, r.detail);
      CHECK(r.passed);
      CHECK(r.cases > 0);
    }
  }
  CHECK_THROWS_AS(run_check_suite("bogus"), std::invalid_argument);
}

TEST_CASE("the all suite includes the framing identities") {
  const auto results = run_check_suite("all");
  bool found = false;
  for (const auto& r : results)
    found = found || r.name.rfind("framing/", 0) == 0;
  CHECK(found);
}
