#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + HYPER4_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string("\"") + HYPER4_FIXTURES + "/" + name + "\"";
}

Json result_of(const Run& r) {
  const Json j = Json::parse(r.out);
  CHECK(j["schema"] == "hyper4-census/1");
  return j["result"];
}

}  // namespace

TEST_CASE("decode") {
  const Run r = run("decode 14FF28");
  REQUIRE(r.status == 0);
  const Json j = result_of(r);
  REQUIRE(j["arrows"].size() == 12);
  const Json& a = j["arrows"][0];
  CHECK(a["letter"] == "a");
  CHECK(a["source"] == "A");
  CHECK(a["target"] == "A'");
  CHECK(a["kpart"] == Json::array({-1, 1, 1, 1}));
  const Json& g = j["arrows"][6];
  CHECK(g["letter"] == "g");
  CHECK(g["source"] == "G");
  CHECK(g["target"] == "G'");
  CHECK(g["kpart"] == Json::array({-1, -1, -1, -1}));
  CHECK(g["orientation"] == -1);

  CHECK(run("decode ZZZZZZ").status == 2);
  CHECK(run("decode 14FF2").status == 2);
  CHECK(run("decode 111111").status == 1);
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("verify") {
  const Run r = run("verify 14FF28");
  REQUIRE(r.status == 0);
  const Json j = result_of(r);
  CHECK(j["chi"] == 1);
  CHECK(j["orientable"] == false);
  CHECK(j["cusp_count"] == 5);
  CHECK(j["verdict"] == "manifold");

  const Run d = run("verify 14FF28 --double-cover");
  REQUIRE(d.status == 0);
  const Json dj = result_of(d);
  CHECK(dj["chi"] == 2);
  CHECK(dj["orientable"] == true);
  CHECK(dj["total_cusps"] == 5);
  CHECK(dj["cusp_types"] == "AAAAA");
  CHECK(dj["schreier_generators"] == 23);

  const Run bad = run("verify 24FF28");
  CHECK(bad.status == 1);
  CHECK(result_of(bad)["verdict"] == "not a manifold code");
}

TEST_CASE("cusps") {
  const Run r = run("cusps 14FF28");
  REQUIRE(r.status == 0);
  const Json j = result_of(r);
  REQUIRE(j["cusps"].size() == 5);
  for (const auto& c : j["cusps"]) CHECK(c["type"] == "G");
}

TEST_CASE("cover and classification") {
  const Run r3 = run("cover 14FF28 --cyclic 3 --classify-filling");
  REQUIRE(r3.status == 0);
  const Json j3 = result_of(r3);
  CHECK(j3["total_cusps"] == 13);
  CHECK(j3["chi"] == 6);
  CHECK(j3["sigma"] == 0);
  CHECK(j3["spin"] == "spin");
  CHECK(j3["quotient_order"] == 6);
  CHECK(j3["filling"]["simply_connected"] == true);
  CHECK(j3["filling"]["classification"]["verdict"] == "#_2(S^2xS^2)");

  const Run r2 = run("cover 14FF28 --cyclic 2 --classify-filling");
  REQUIRE(r2.status == 0);
  const Json j2 = result_of(r2);
  CHECK(j2["spin"] == "unknown");
  CHECK(j2["filling"]["classification"]["verdict"] == "conditional");

  const Run limited = run("--max-cosets 5 cover 14FF28 --cyclic 3");
  CHECK(limited.status == 1);
  CHECK(result_of(limited)["status"] == "unknown");

  CHECK(run("cover 14FF28 --cyclic 0").status == 2);
}

TEST_CASE("fill") {
  const Run r = run("fill 14FF28 --meridians default");
  REQUIRE(r.status == 0);
  const Json j = result_of(r);
  CHECK(j["order"] == 2);
  CHECK(j["chi"] == 1);

  const Run f = run("fill 14FF28 --meridians " + fixture("meridians_c3.txt"));
  REQUIRE(f.status == 0);
  CHECK(result_of(f)["order"] == 6);
  CHECK(run("fill 14FF28 --meridians /nonexistent/file").status == 1);
}

TEST_CASE("classify") {
  const Json s4 = result_of(run("classify --chi 2 --sigma 0 --spin spin"));
  CHECK(s4["verdict"] == "S^4");
  const Json k12 = result_of(run("classify --chi 26 --sigma 0 --spin spin"));
  CHECK(k12["verdict"] == "#_12(S^2xS^2)");
  const Json cp = result_of(run("classify --chi 6 --sigma 0 --spin nonspin"));
  CHECK(cp["verdict"] == "#_2CP^2#_2CP^2bar");
  const Json rec = result_of(run("classify --record " + fixture("record_m3.json")));
  CHECK(rec["verdict"] == "#_2(S^2xS^2)");
  CHECK(run("classify --chi 3 --sigma 0").status == 1);
  CHECK(run("classify --chi 6 --sigma 0 --spin sometimes").status == 1);
}

TEST_CASE("census") {
  const Run one = run("census " + fixture("census_14FF28.txt"));
  REQUIRE(one.status == 0);
  const Json j = Json::parse(one.out);
  CHECK(j["records"].size() == 1);
  CHECK(j["records"][0]["verdict"] == "manifold");
  CHECK(j["errors"].empty());

  const Run mixed = run("census " + fixture("census_mixed.txt"));
  CHECK(mixed.status == 0);
  const Json m = Json::parse(mixed.out);
  CHECK(m["records"].size() == 1);
  CHECK(m["errors"].size() == 1);
  CHECK(m["errors"][0]["line"] == 3);

  const Run empty = run("census " + fixture("census_empty.txt"));
  CHECK(empty.status == 0);
  CHECK(Json::parse(empty.out)["records"].empty());

  const Run t1 = run("census " + fixture("census_many.txt") + " --threads 1");
  const Run t4 = run("census " + fixture("census_many.txt") + " --threads 4");
  CHECK(t1.status == 1);
  CHECK(t4.status == 1);
  CHECK(t1.out == t4.out);
  CHECK(run("census " + fixture("census_many.txt") + " --threads 4").out == t4.out);

  CHECK(run("census /nonexistent/file").status == 1);
}

TEST_CASE("text rendering") {
  const Run r = run("--text verify 14FF28");
  CHECK(r.status == 0);
  CHECK(r.out.find("chi: 1") != std::string::npos);
}
