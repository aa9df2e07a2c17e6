#include <doctest.h>

#include <json.hpp>

#include "polarix/io.hpp"
#include "polarix/render.hpp"
#include "test_helpers.hpp"

using namespace polarix;
using namespace polarix::testing;
using nlohmann::json;

TEST_CASE("family JSON round trip") {
  for (const IsotoneFamily& f :
       {worked_example_family(), standard_family(4, 2), b_family(2, 3)}) {
    const json j = to_json(f);
    CHECK(family_from_json(j) == f);
  }
}

TEST_CASE("family JSON diagnostics") {
  json j = to_json(standard_family(3, 2));
  SUBCASE("missing entries are incomplete") {
    j["X"].erase(0);
    IsotoneFamily f = family_from_json(j);
    CHECK(validate_family(f).status == FamilyStatus::incomplete);
  }
  SUBCASE("colors out of range fail the parse") {
    j["X"][0]["color"] = 7;
    CHECK_THROWS_AS(family_from_json(j), std::invalid_argument);
  }
  SUBCASE("points outside the simplex fail the parse") {
    j["X"][0]["point"] = {5, 0, 0};
    CHECK_THROWS_AS(family_from_json(j), std::invalid_argument);
  }
  SUBCASE("indices beyond n fail the parse") {
    j["X"][0]["set"] = {1, 4};
    CHECK_THROWS_AS(family_from_json(j), std::invalid_argument);
  }
}

TEST_CASE("qs pattern JSON") {
  QsPattern q{3, {Multidegree({2, 1, 1}), Multidegree({1, 1, 2})}};
  const json j = to_json(q);
  const QsPattern back = qs_pattern_from_json(j, 3);
  REQUIRE(back.points.size() == 2);
  CHECK(back.points[0] == q.points[0]);
  CHECK(back.points[1] == q.points[1]);
}

TEST_CASE("ideal JSON and text export") {
  const MonomialIdeal ideal = generators_from_family(standard_family(2, 2));
  const MonomialIdeal back = ideal_from_json(to_json(ideal));
  CHECK(back == ideal);

  const std::string text = to_m2(ideal);
  CHECK(text ==
        "x_(1,1)*x_(1,2)\n"
        "x_(1,1)*x_(2,1)\n"
        "x_(2,1)*x_(2,2)\n");

  const MonomialIdeal collapsed = collapse(ideal);
  CHECK(to_m2(collapsed) == "x_1*x_1\nx_1*x_2\nx_2*x_2\n");
}

TEST_CASE("complex JSON round trip") {
  const SimplicialComplex c =
      complex_from_ideal(generators_from_family(standard_family(2, 2)));
  const SimplicialComplex back = complex_from_json(to_json(c));
  CHECK(back.facets() == c.facets());
  CHECK(back.vertex_names() == c.vertex_names());
}

TEST_CASE("tree JSON round trip and dot export") {
  const DirectedLabeledTree t = path_tree_m3();
  const DirectedLabeledTree back = tree_from_json(to_json(t));
  CHECK(back.vertex_count() == 4);
  CHECK(tree_pair_ideal(back) == tree_pair_ideal(t));
  const std::string dot = t.dot();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("0 -> 1") != std::string::npos);
}

TEST_CASE("svg rendering of the worked example") {
  const std::string svg = render_svg(worked_example_family());
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("font-size=\"12pt\"") != std::string::npos);
  // Exactly three dashed QS-edges.
  std::size_t dashed = 0, at = 0;
  while ((at = svg.find("stroke-dasharray=\"4 2\"", at)) != std::string::npos) {
    ++dashed;
    at += 1;
  }
  CHECK(dashed == 3);
  CHECK(svg.find("x1x2x3") != std::string::npos);
  CHECK_THROWS_AS(render_svg(standard_family(2, 2)), std::invalid_argument);
}

TEST_CASE("emitted families re-validate on re-ingestion") {
  for (const IsotoneFamily& f : enumerate_valid_families(3, 2)) {
    IsotoneFamily back = family_from_json(json::parse(to_json(f).dump()));
    CHECK(static_cast<bool>(validate_family(back)));
    CHECK(is_valid_polarization(back).valid);
    CHECK(back == f);
  }
}
