#include <fstream>

#include "cli_util.hpp"
#include "doctest.h"
#include "nlohmann/json.hpp"

using nlohmann::json;

TEST_CASE("classes") {
  const auto r = run_cli("classes --p 13 --m 3 --b 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("\n{1,5,8,12}\n{2,3,10,11}\n{4,6,7,9}\n") != std::string::npos);
  CHECK(run_cli("classes --p 13 --m 4").out.find("\n{1,3,9}\n") != std::string::npos);
  CHECK(run_cli("classes --p 13 --m 5").status == 1);
  const auto j = json::parse(run_cli("classes --p 13 --m 3 --output json").out);
  CHECK(j["params"]["b"] == 2);
  CHECK(j["classes"].size() == 3);
}

TEST_CASE("field-code") {
  const auto j = json::parse(run_cli("field-code --q 7 --p 19 --m 6 --family even-I --index 0 --output json").out);
  CHECK(j["generator"].size() == 17);
  CHECK(j["distance_report"]["d_min"] == 15);
  CHECK(j["params"]["extension_modulus"] == json({1, 0, 1, 1}));
  const auto odd = json::parse(run_cli("field-code --q 7 --p 19 --m 6 --family odd-I --output json").out);
  CHECK(odd["generator"].size() == 4);
  CHECK(run_cli("field-code --q 2 --p 7 --m 3").status == 1);
  CHECK(run_cli("field-code --q 7 --p 19 --m 6 --family even-III").status == 1);
  CHECK(run_cli("field-code --q 7 --p 19 --m 6 --index 6").status == 1);
}

TEST_CASE("ring-code") {
  const auto r = run_cli("ring-code --q 3 --s 3 --p 13 --m 4 --slots 0,1,2 --a 7 --root-power 2 --family even-I");
  CHECK(r.status == 0);
  CHECK(r.out.find("generator: 1+(1+2*v)*x+") != std::string::npos);
  CHECK(r.out.find("{0,1,2} {3,0,1} {2,3,0} {1,2,3}") != std::string::npos);
  const auto lifted = json::parse(run_cli("ring-code --q 3 --s 3 --p 13 --m 4 --slots 0,0,0 --output json").out);
  for (const auto& c : lifted["generator"]) CHECK((c[1] == 0 && c[2] == 0));
  CHECK(run_cli("ring-code --q 3 --s 4 --p 13 --m 4").status == 1);
  CHECK(run_cli("ring-code --q 3 --s 3 --p 13 --m 4 --slots 0,1").status == 1);
}

TEST_CASE("distance, griesmer and exit codes") {
  CHECK(run_cli("distance --q 3 --p 13 --generator 'x+2' --cap 1000").status == 2);
  const auto d = run_cli("distance --q 3 --p 13 --m 2 --family odd-I");
  CHECK(d.status == 0);
  CHECK(d.out.find("[13,7,5]") != std::string::npos);
  const auto g = json::parse(run_cli("griesmer --n 19 --k 3 --d 15 --q 7 --output json").out);
  CHECK(g["bound_n"] == 19);
  CHECK(g["attained"] == true);
  CHECK(run_cli("griesmer --n 19 --k 3").status == 1);
  CHECK(run_cli("").status == 1);
}

TEST_CASE("export round trip") {
  const auto e = run_cli("export --q 3 --s 3 --p 13 --m 4 --a 7");
  REQUIRE(e.status == 0);
  const auto exported = json::parse(e.out);
  for (const char* key : {"kind", "params", "generator", "idempotent", "components", "distance_report"})
    CHECK(exported.contains(key));
  const std::string path = "madic_export_roundtrip.json";
  std::ofstream(path) << e.out;
  const auto again = json::parse(run_cli("distance --from " + path + " --output json").out);
  CHECK(again == exported["distance_report"]);
  std::remove(path.c_str());

  const auto f = run_cli("export --q 7 --p 19 --m 3");
  const std::string fpath = "madic_export_field.json";
  std::ofstream(fpath) << f.out;
  CHECK(json::parse(run_cli("distance --from " + fpath + " --output json").out) ==
        json::parse(f.out)["distance_report"]);
  std::remove(fpath.c_str());
}

TEST_CASE("verify-paper") {
  const auto r = run_cli("verify-paper --output json");
  CHECK(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["ok"] == true);
  bool g23 = false;
  for (const auto& e : j["errata"]) g23 = g23 || e["id"] == "quartic13.g2-g3";
  CHECK(g23);
}
