#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "logbott/catalog.hpp"
#include "logbott/errors.hpp"
#include "logbott/io.hpp"

using namespace logbott;
using io::Json;

TEST_CASE("rationals and polynomials") {
  CHECK(io::rational_to_json(Rational(-3, 4)) == "-3/4");
  CHECK(io::rational_from_json(Json("5/10")) == Rational(1, 2));
  CHECK(io::rational_from_json(Json(7)) == 7);
  CHECK_THROWS_AS(io::rational_from_json(Json(0.5)), InputError);
  CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), InputError);

  const std::vector<std::string> names{"x", "y"};
  const Polynomial p = parse_polynomial("3/2*x^2*y - 4", names);
  const Json j = io::polynomial_to_json(p);
  CHECK(io::polynomial_from_json(j, 2) == p);
  CHECK(io::polynomial_from_json(Json("3/2*x^2*y - 4"), 2, names) == p);
  CHECK_THROWS_AS(io::polynomial_from_json(Json::parse(R"([["1", [1, 2, 3]]])"), 2), InputError);
  CHECK_THROWS_AS(io::polynomial_from_json(Json::parse(R"([["1", [-1, 0]]])"), 2), InputError);
  CHECK_THROWS_AS(io::polynomial_from_json(Json("x"), 2), InputError);
}

TEST_CASE("rings, bundles, components and global sides round trip") {
  for (const auto& id : catalog::example_ids()) {
    const auto e = catalog::build_example(id);
    const RingPtr ring = io::ring_from_json(io::ring_to_json(*e.global.ring));
    CHECK(*ring == *e.global.ring);
    const GlobalSide g = io::global_from_json(io::global_to_json(e.global));
    CHECK(g.tangent.rank == e.global.tangent.rank);
    CHECK(total_chern(g.tangent) == total_chern(e.global.tangent));
    CHECK(g.divisors == e.global.divisors);
    CHECK(g.direct_log_bundle.has_value() == e.global.direct_log_bundle.has_value());
    for (const auto& z : e.components) {
      const FixedComponent back = io::component_from_json(io::component_to_json(z));
      CHECK(back.name == z.name);
      CHECK(back.dim == z.dim);
      CHECK(local_contribution(back, InvariantPolySpec::top_chern()) ==
            local_contribution(z, InvariantPolySpec::top_chern()));
    }
  }
}

TEST_CASE("ring documents with string rules") {
  const Json j = Json::parse(R"({
    "generators": [{"name": "xi", "degree": 2}, {"name": "h", "degree": 2}],
    "rules": [{"lead": "xi^2", "rhs": "3*xi*h"}, {"lead": [0, 3], "rhs": []}],
    "top_degree": 6,
    "integration_table": [{"monomial": [1, 2], "value": "1"}]
  })");
  const RingPtr r = io::ring_from_json(j);
  CHECK(*r == *catalog::weighted_p3_ring(3));
  Json bad = j;
  bad["rules"][0]["lead"] = "xi^2 + h^2";
  CHECK_THROWS_AS(io::ring_from_json(bad), InputError);
  bad = j;
  bad.erase("top_degree");
  CHECK_THROWS_AS(io::ring_from_json(bad), InputError);
}

TEST_CASE("invariant polynomial specs") {
  CHECK(io::phi_from_json(Json("top_chern")) == InvariantPolySpec::top_chern());
  const auto m = InvariantPolySpec::chern_monomial({{1, 2}, {2, 1}});
  CHECK(io::phi_from_json(io::phi_to_json(m)) == m);
  CHECK_THROWS_AS(io::phi_from_json(Json("euler")), InputError);
}

TEST_CASE("non-constant eigenvalues are rejected") {
  auto e = catalog::build_example(catalog::kWeightedP3);
  Json z = io::component_to_json(e.components[0]);
  z["n_blocks"][0]["lambda"] = "x";
  CHECK_THROWS_AS(io::component_from_json(z), InputError);
}

TEST_CASE("reports carry a schema version") {
  const auto e = catalog::build_example(catalog::kWeightedP3);
  const Json r = io::report_to_json(verify(e.id, e.global, e.components, InvariantPolySpec::top_chern()));
  CHECK(r.at("schema") == 1);
  CHECK(r.at("global") == "3");
  CHECK(r.at("sum") == "3");
  CHECK(r.at("matched") == true);
  CHECK(r.at("contributions").size() == 2);
  CHECK_FALSE(r.contains("error"));
}

TEST_CASE("charts and maps") {
  const auto charts = catalog::weighted_p3_charts(2, 1, 2, 7);
  for (const auto& c : charts) {
    const io::ChartInput back = io::chart_from_json(io::chart_to_json(c.chart));
    CHECK(back.field.coeffs == c.chart.field.coeffs);
    CHECK(back.field.log_indices == c.chart.field.log_indices);
    CHECK(back.component.normal_coords == c.chart.component.normal_coords);
    CHECK(back.expected_verdict == c.chart.expected_verdict);
  }
  const auto file = io::chart_from_json(io::read_json_file(std::filesystem::path(LOGBOTT_SOURCE_DIR) / "data/charts/weighted_p3_curve.json"));
  CHECK(file.field.coeffs == charts[0].chart.field.coeffs);
  CHECK_THROWS_AS(io::chart_from_json(Json::parse(R"({"dim": 1, "log_indices": [], "coeffs": ["0"], "component": {"normal_coords": [0]}, "expect": "maybe"})")), InputError);

  const auto m = io::map_from_json(Json::parse(R"({"k": 2, "f": ["y1 + y1*y2", "y2"], "transform": [["1", "1"], ["0", "2"]]})"));
  CHECK(m.map.codim() == 2);
  CHECK(m.test_function == Polynomial::constant(2, 1));
  REQUIRE(m.transform);
  CHECK((*m.transform)[1][1] == 2);
  CHECK_THROWS_AS(io::map_from_json(Json::parse(R"({"k": 2, "f": ["y1"]})")), InputError);
  CHECK_THROWS_AS(io::map_from_json(Json::parse(R"({"k": 1, "f": ["1 + y1"]})")), InputError);
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), InputError);
  const auto tmp = std::filesystem::temp_directory_path() / "logbott_io_bad.json";
  {
    std::ofstream out(tmp);
    out << "{ not json";
  }
  CHECK_THROWS_AS(io::read_json_file(tmp), InputError);
  std::filesystem::remove(tmp);
}
