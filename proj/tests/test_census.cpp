#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyper4/census.hpp"
#include "hyper4/errors.hpp"

using namespace hyper4;

TEST_CASE("verify_code 14FF28") {
  const ManifoldRecord r = verify_code("14FF28");
  CHECK(r.verdict == "manifold");
  CHECK_FALSE(r.hard_failure());
  CHECK_FALSE(r.orientable);
  CHECK(r.chi == 1);
  CHECK(r.side_classes == 12);
  CHECK(r.ridge_classes == 24);
  CHECK(r.edge_classes == 12);
  CHECK(r.chi == 1 - r.side_classes + r.ridge_classes - r.edge_classes);
  REQUIRE(r.cusps.size() == 5);
  for (const auto& c : r.cusps) {
    REQUIRE(c.type.has_value());
    CHECK(*c.type == FlatType::G);
    CHECK_FALSE(c.eta.has_value());
  }
  REQUIRE(r.h1.has_value());
  CHECK(r.h1->to_string() == "Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2");
}

TEST_CASE("verify_code failures") {
  const ManifoldRecord bad = verify_code("24FF28");
  CHECK(bad.verdict == "not a manifold code");
  CHECK(bad.hard_failure());
  CHECK_THROWS_AS(verify_code("14FF2G"), ParseError);
  CHECK_THROWS_AS(verify_code("111111"), SelfPairingError);
}

TEST_CASE("record JSON") {
  const Json j = record_json(verify_code("14FF28"));
  CHECK(j["code"] == "14FF28");
  CHECK(j["chi"] == 1);
  CHECK(j["cusp_count"] == 5);
  CHECK(j["cusp_types"] == "GGGGG");
  CHECK(j["orientable"] == false);
  const std::string dumped = j.dump();
  CHECK(dumped.find('.') == std::string::npos);  // no floating point
}

TEST_CASE("cover JSON renders exact values") {
  const SidePairingSet set = build_side_pairings("14FF28");
  const Json j = cover_json(orientation_double_cover(set));
  CHECK(j["chi"] == 2);
  CHECK(j["total_cusps"] == 5);
  CHECK(j["sigma"] == 0);
  CHECK(j["spin"] == "spin");
  const Json c = cusps_json(set);
  CHECK(c.size() == 5);
  CHECK(c[0]["eta"].is_null());
}

TEST_CASE("census runs") {
  const std::string text = "# header\n14FF28 1011\n\nZZ12\n24FF28\n1428BD\n111111\n14FF28\n";
  const CensusResult one = run_census(text, 1);
  CHECK(one.records.size() == 4);
  CHECK(one.errors.size() == 2);
  CHECK(one.errors[0]["line"] == 4);
  CHECK(one.errors[1]["line"] == 7);
  CHECK(one.hard_failure);
  CHECK(one.records[0]["code"] == "14FF28");
  CHECK(one.records[1]["code"] == "24FF28");
  CHECK(one.records[3]["code"] == "14FF28");
  for (unsigned t : {2u, 3u, 8u}) {
    const CensusResult r = run_census(text, t);
    CHECK(r.records.dump() == one.records.dump());
    CHECK(r.errors.dump() == one.errors.dump());
  }

  const CensusResult empty = run_census("", 4);
  CHECK(empty.records.empty());
  CHECK(empty.errors.empty());
  CHECK_FALSE(empty.hard_failure);

  const CensusResult good = run_census("14FF28\n# bad below\nQQ\n", 2);
  CHECK(good.records.size() == 1);
  CHECK(good.errors.size() == 1);
  CHECK_FALSE(good.hard_failure);
}

TEST_CASE("envelope and text rendering") {
  const Json e = envelope({"decode", "14FF28"});
  CHECK(e["schema"] == "hyper4-census/1");
  CHECK(e["tool_version"] == kToolVersion);
  CHECK(e["command"] == Json::array({"decode", "14FF28"}));
  const std::string text = render_text(e);
  CHECK(text.find("schema: hyper4-census/1") != std::string::npos);
}
