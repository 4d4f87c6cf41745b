#include "helpers.hpp"
#include "hnslope/check_suite.hpp"
#include "hnslope/series.hpp"
#include "hnslope/svg.hpp"
#include "json.hpp"

using namespace hnslope;
using testing::error_of;
using testing::sv;

TEST_CASE("input grammar examples") {
  const auto ring = make_hahn_ring(FiniteField::prime(3));
  const auto s = HahnSeries::parse(ring, "t^(1/2) + 2*t^3");
  REQUIRE(s.terms().size() == 2);
  CHECK(s.terms()[0].exp == Rational(1, 2));
  CHECK(s.terms()[0].coeff == 1);
  CHECK(s.terms()[1].exp == Rational(3));
  CHECK(s.terms()[1].coeff == 2);
  CHECK(sv("[3, 1/2, -2]") == SlopeVector{3, Rational(1, 2), -2});
  CHECK(error_of([] { sv("[1/2, 3]"); }) == ErrorKind::SchemaError);
}

TEST_CASE("plot a single polygon") {
  const auto svg = plot_polygons({{"f", ConcavePolygon::from_type(sv("[1, 0]"))}});
  // x in [0, 2] -> [60, 740], y in [0, 1] -> [540, 60]
  CHECK(svg.find("points=\"60.000,540.000 400.000,60.000 740.000,60.000\"") != std::string::npos);
  CHECK(svg.find("width=\"800\" height=\"600\"") != std::string::npos);
  CHECK(svg == plot_polygons({{"f", ConcavePolygon::from_type(sv("[1, 0]"))}}));
}

TEST_CASE("plot identical polygons") {
  const auto p = ConcavePolygon::from_type(sv("[1, 0]"));
  const auto svg = plot_polygons({{"a", p}, {"b", p}});
  std::size_t lines = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++lines;
  CHECK(lines == 2);
  CHECK(svg.find(">a</text>") < svg.find(">b</text>"));
  CHECK(error_of([] { plot_polygons({}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("plot rounds to the 1/1000 grid") {
  const auto svg = plot_polygons({{"x<y", ConcavePolygon::from_type(sv("[1/3, -1/3, -1/3]"))}});
  // x = 1 -> 60 + 680/3 = 286.666..., y = 1/3 is the top
  CHECK(svg.find("286.667,60.000") != std::string::npos);
  CHECK(svg.find("x&lt;y") != std::string::npos);
}

TEST_CASE("check suite") {
  CheckConfig config;
  const auto reports = run_check_suite(config);
  CHECK(reports.size() == check_suite_names().size());
  for (const auto& r : reports) {
    INFO(r.suite);
    CHECK(r.failures.empty());
  }
  const auto doc = nlohmann::json::parse(report_json(config, reports));
  CHECK(doc["seed"] == 42);
  CHECK(doc["suites"][0]["suite"] == "polygon_laws");

  config.cases = 0;
  for (const auto& r : run_check_suite(config)) {
    CHECK(r.cases == 0);
    CHECK(r.failures.empty());
  }

  CheckConfig broken;
  broken.break_oracle = true;
  broken.suites = {"polygon_laws"};
  broken.cases = 3;
  const auto bad = run_check_suite(broken);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].suite == "polygon_laws");
  CHECK(!bad[0].failures.empty());

  CheckConfig unknown;
  unknown.suites = {"nope"};
  CHECK(error_of([&] { run_check_suite(unknown); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("check suite is reproducible") {
  CheckConfig config;
  config.seed = 7;
  config.cases = 5;
  CHECK(report_json(config, run_check_suite(config)) == report_json(config, run_check_suite(config)));
}
