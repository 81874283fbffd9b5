#include <doctest.h>

#include <cmath>

#include "painleve/hardedge.hpp"
#include "painleve/io.hpp"
#include "painleve/jimbo.hpp"
#include "painleve/verify.hpp"

using namespace painleve;

TEST_SUITE("io") {
  TEST_CASE("rational series round trip") {
    const RationalSeries f = sigma_series(2, 4);
    const Json j = to_json(f);
    CHECK(j["var"] == "s");
    CHECK(j["coeffs"][1] == "1/8");
    CHECK(rational_series_from_json(j) == f);
    Json bad = j;
    bad["coeffs"].erase(0);
    CHECK_THROWS(rational_series_from_json(bad));
  }

  TEST_CASE("expansion round trip keeps logs and complex coefficients") {
    const AsymptoticExpansion e = hardedge_expansion(0.3, -0.3, 0.5);
    const AsymptoticExpansion back = expansion_from_json(to_json(e));
    REQUIRE(back.terms().size() == e.terms().size());
    for (std::size_t i = 0; i < e.terms().size(); ++i) {
      CHECK(back.terms()[i].coeff == e.terms()[i].coeff);
      CHECK(back.terms()[i].exponent == e.terms()[i].exponent);
      CHECK(back.terms()[i].log_power == e.terms()[i].log_power);
    }
    CHECK(back.validity_order() == e.validity_order());
  }

  TEST_CASE("report payload is deterministic and versioned") {
    RunReport r;
    r.command = "probe";
    r.parameters["x"] = 0.1;
    r.add(make_check("close", 1e-12, 1e-10, 1.0, 1.0));
    r.add(make_check("nan never passes", NAN, 1.0, 0.0, 0.0));
    r.wall_time = 3.5;
    const Json j = to_json(r);
    CHECK(j["schema"] == kSchemaVersion);
    CHECK(j["status"] == "fail");
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["checks"][1]["measured"] == "nan");
    CHECK(j.dump().find("wall_time") == std::string::npos);
    r.wall_time = 9.0;
    CHECK(to_json(r).dump() == j.dump());
  }

  TEST_CASE("format_double round trips") {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) CHECK(std::stod(format_double(x)) == x);
  }

  TEST_CASE("measured order recovers a power law") {
    CHECK(measured_order({1e-2, 5e-3, 2.5e-3}, {3e-4, 7.5e-5, 1.875e-5}) == doctest::Approx(2.0));
    CHECK_THROWS(measured_order({1.0}, {1.0}));
  }

  TEST_CASE("verify suites") {
    CHECK_THROWS_AS(run_verify("nope"), std::invalid_argument);
    const RunReport r = run_verify("series");
    for (const auto& c : r.checks) {
      INFO(c.name);
      CHECK(c.passed);
    }
    CHECK(run_verify("jimbo").ok());
  }
}
