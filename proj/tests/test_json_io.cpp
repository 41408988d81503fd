#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "doctest.h"
#include "json.hpp"
#include "lgcrit/json_io.hpp"

using namespace lgcrit;

TEST_CASE("seventeen-digit formatting round-trips doubles exactly") {
  for (const double x : {0.1, 1.0 / 3.0, -2.5e-13, 1e300, -0.0, 3.141592653589793,
                         std::numeric_limits<double>::denorm_min()}) {
    const std::string s = fmt17(x);
    // strtod rather than stod: stod raises out_of_range on subnormal input
    // even though the parse itself succeeds.
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(fmt17(1.0) == "1");
  CHECK(fmt17(-4.0) == "-4");
}

TEST_CASE("description of the bundle parses as json") {
  const BundleSpec spec{2, {0, 2}};
  const std::string text = describe_json(spec);
  const auto parsed = nlohmann::json::parse(text);
  CHECK(parsed.at("s").get<int>() == 2);
  CHECK(parsed.at("dim").get<int>() == 4);
  CHECK(parsed.at("collection_size").get<int>() == 9);
  CHECK(parsed.at("rays").size() == 6);
  CHECK(parsed.at("collection").size() == 9);
  const std::string plain = describe_text(spec);
  CHECK(plain.find("P2(0,2)") != std::string::npos);
}

TEST_CASE("critical sets round-trip through json byte for byte") {
  const BundleSpec spec{2, {1}};
  CritSet set = solve_crit(spec, CoeffVector::unit(spec), SolveOptions{});
  SUBCASE("unlabeled") {}
  SUBCASE("labeled") {
    CritSet deep = track_segment(set, 0.0, -12.0, TrackOptions{});
    assign_labels(deep);
    set = deep;
  }
  const std::string text = critset_json(set);
  const CritSet back = critset_from_json(text);
  CHECK(critset_json(back) == text);
  REQUIRE(back.points.size() == set.points.size());
  for (size_t i = 0; i < set.points.size(); ++i) {
    for (size_t k = 0; k < set.points[i].z.size(); ++k)
      CHECK(back.points[i].z[k] == set.points[i].z[k]);
    for (size_t k = 0; k < set.points[i].w.size(); ++k)
      CHECK(back.points[i].w[k] == set.points[i].w[k]);
    CHECK(back.points[i].label.k == set.points[i].label.k);
    CHECK(back.points[i].label.l == set.points[i].label.l);
  }
  CHECK(back.spec.s == spec.s);
  CHECK(back.spec.a == spec.a);
}

TEST_CASE("malformed critical-set json is rejected") {
  CHECK_THROWS(critset_from_json("{"));
  CHECK_THROWS(critset_from_json("{\"s\":0,\"a\":[1]}"));
  // fano violation inside an otherwise well-formed document
  const std::string bad =
      "{\"s\":1,\"a\":[2],\"tol\":1e-10,\"separation\":1e-6,"
      "\"coeffs\":{\"cz\":[[1,0]],\"cw\":[[1,0]],\"cv0\":[1,0],\"ce0\":[1,0]},\"points\":[]}";
  CHECK_THROWS_AS(critset_from_json(bad), Error);
}

TEST_CASE("limit rows serialize with and without grid targets") {
  const BundleSpec h{1, {1}};
  std::vector<LimitRow> rows(1);
  rows[0].label = {0, 0};
  rows[0].measured = {0.1, 0.2};
  rows[0].grid = {0.0, 0.0};
  rows[0].dist = 0.1;
  const auto parsed = nlohmann::json::parse(limits_json(h, 12.0, "minus", rows, 0.125));
  CHECK(parsed.at("direction").get<std::string>() == "minus");
  CHECK(parsed.at("rows")[0].at("dist").get<double>() == 0.1);
  CHECK(parsed.at("rows")[0].at("grid").is_array());

  rows[0].dist = -1.0;  // sentinel: no grid target in the opposite regime
  const auto plus = nlohmann::json::parse(limits_json(h, 12.0, "plus", rows, 0.125));
  CHECK(plus.at("rows")[0].at("dist").is_null());
  CHECK(plus.at("rows")[0].at("grid").is_null());
  const std::string text = limits_text(h, 12.0, "plus", rows, 0.125);
  CHECK(text.find("grid") == std::string::npos);
}

TEST_CASE("hom tables serialize with their collection") {
  const BundleSpec h{1, {1}};
  const auto table = hom_table(h);
  const auto parsed = nlohmann::json::parse(hom_json(h, table));
  REQUIRE(parsed.at("hom_table").size() == 4);
  CHECK(parsed.at("hom_table")[0][3].get<long long>() == 5);
  CHECK(parsed.at("collection").size() == 4);
  const std::string text = hom_text(h, table);
  CHECK(text.rfind("hom dimensions of P1(1)", 0) == 0);
  CHECK(text.find("(1,1)") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
}

TEST_CASE("curves serialize to csv and json consistently") {
  std::vector<CurveRow> rows(2);
  rows[0] = {0.0, 0, cplx(1.0, -2.0), cplx(0.5, 0.0)};
  rows[1] = {-1.0, 1, cplx(0.0, 1.0), cplx(-3.0, 4.0)};
  const std::string csv = curve_csv(rows);
  CHECK(csv.rfind("t,index,re_WZ,im_WZ,re_invW,im_invW\n", 0) == 0);
  CHECK(csv.find("\n0,0,1,-2,0.5,0\n") != std::string::npos);
  const auto parsed = nlohmann::json::parse(curve_json(rows));
  REQUIRE(parsed.at("rows").size() == 2);
  CHECK(parsed.at("rows")[1].at("index").get<int>() == 1);
  CHECK(parsed.at("rows")[1].at("WZ")[1].get<double>() == 1.0);
}

TEST_CASE("verification fragments parse and carry their verdicts") {
  const BundleSpec h{1, {1}};
  AssignReport assign;
  assign.max_dist = 2e-4;
  assign.tolerance = 0.125;
  const auto labels = nlohmann::json::parse(verify_labels_json(h, 12.0, assign, 4e-4, true));
  CHECK(labels.at("check").get<std::string>() == "asymptotic-labels");
  CHECK(labels.at("verified").get<bool>());
  CHECK(labels.at("max_grid_dist").get<double>() == 2e-4);

  const HomReport hom = verify_hom_equality(h);
  const auto homj = nlohmann::json::parse(verify_hom_json(h, hom));
  CHECK(homj.at("check").get<std::string>() == "hom-tables");
  CHECK(homj.at("verified").get<bool>());

  const CompositionReport comp = verify_composition(h);
  const auto compj = nlohmann::json::parse(verify_composition_json(h, comp));
  CHECK(compj.at("check").get<std::string>() == "witness-composition");
  CHECK(compj.at("verified").get<bool>());
}

TEST_CASE("monodromy reports serialize both laws") {
  const MonodromyReport rep = verify_monodromy(BundleSpec{1, {0}}, 4.0);
  const auto parsed = nlohmann::json::parse(monodromy_json(rep));
  CHECK(parsed.at("rows").size() == 4);
  CHECK(parsed.at("all_shift").get<bool>());
  CHECK(parsed.at("all_translation").get<bool>());
  const auto wrapped = nlohmann::json::parse(verify_monodromy_json(rep));
  CHECK(wrapped.at("check").get<std::string>() == "monodromy-shift");
  CHECK(wrapped.at("verified").get<bool>());
  CHECK(wrapped.at("translation_verified").get<bool>());
}
