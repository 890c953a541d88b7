#include <cstring>
#include <string>

#include "doctest.h"
#include "madic/madic.h"
#include "nlohmann/json.hpp"

namespace {

nlohmann::json run(const char* verb, madic_params* p, madic_status expect = MADIC_OK) {
  madic_result* r = nullptr;
  const auto st = madic_run(verb, p, &r);
  CHECK(st == expect);
  if (st != MADIC_OK) {
    CHECK(r == nullptr);
    return nullptr;
  }
  auto j = nlohmann::json::parse(madic_result_json(r));
  madic_result_free(r);
  return j;
}

}  // namespace

TEST_CASE("status names") {
  CHECK(std::string(madic_status_name(MADIC_OK)) == "Ok");
  CHECK(std::string(madic_status_name(MADIC_Q_NOT_RESIDUE)) == "QNotResidue");
  CHECK(std::string(madic_status_name(MADIC_TOO_LARGE)) == "TooLarge");
  CHECK(std::string(madic_status_name(MADIC_INTERNAL)) == "Internal");
}

TEST_CASE("residue system handle") {
  madic_residue_system* sys = nullptr;
  REQUIRE(madic_residue_system_new(13, 3, 2, 0, &sys) == MADIC_OK);
  CHECK(madic_residue_system_class_size(sys) == 4);
  CHECK(madic_residue_system_b(sys) == 2);
  uint32_t buf[4];
  CHECK(madic_residue_system_class(sys, 1, buf, 4) == MADIC_OK);
  CHECK(buf[0] == 2);
  CHECK(buf[3] == 11);
  CHECK(madic_residue_system_class(sys, 1, buf, 3) == MADIC_INVALID_ARGUMENT);
  uint32_t idx = 99;
  CHECK(madic_residue_system_class_of(sys, 7, &idx) == MADIC_OK);
  CHECK(idx == 2);
  CHECK(madic_residue_system_class_of(sys, 26, &idx) == MADIC_NOT_COPRIME);
  madic_residue_system_free(sys);

  CHECK(madic_residue_system_new(13, 5, 0, 0, &sys) == MADIC_INVALID_M);
  CHECK(sys == nullptr);
  CHECK(std::strstr(madic_last_error(), "InvalidM") != nullptr);
}

TEST_CASE("commands through the C API") {
  madic_params* p = madic_params_new();
  madic_params_set_int(p, "p", 13);
  madic_params_set_int(p, "m", 4);
  madic_params_set_int(p, "a", 7);
  const auto classes = run("classes", p);
  CHECK(classes["classes"][0] == nlohmann::json({1, 3, 9}));
  CHECK(classes["params"]["b"] == 2);

  madic_params_set_int(p, "q", 3);
  madic_params_set_int(p, "s", 3);
  madic_params_set_int(p, "root_power", 2);
  CHECK(madic_params_set_string(p, "slots", "0,1,2") == MADIC_OK);
  const auto ring = run("ring-code", p);
  CHECK(ring["kind"] == "ring");
  CHECK(ring["distance_report"]["d_min"] == 9);
  CHECK(ring["mu_orbit"].size() == 4);
  CHECK(ring["params"]["eta"] == nlohmann::json({{1, 0, 2}, {0, 2, 2}, {0, 1, 2}}));
  CHECK(ring["generator"][2] == nlohmann::json({2, 2, 0}));

  // re-analysing the export reproduces the distance report
  const auto exported = run("export", p);
  madic_params* d = madic_params_new();
  madic_params_set_string(d, "document", exported.dump().c_str());
  CHECK(run("distance", d) == exported["distance_report"]);
  madic_params_free(d);

  CHECK(madic_params_set_string(p, "slots", "0,x") == MADIC_PARSE_ERROR);
  CHECK(madic_params_set_int(p, "bogus", 1) == MADIC_INVALID_ARGUMENT);
  madic_params_set_int(p, "s", 4);
  run("ring-code", p, MADIC_INCOMPATIBLE_S);
  madic_params_free(p);
}

TEST_CASE("errors and caps through the C API") {
  madic_params* p = madic_params_new();
  madic_params_set_int(p, "q", 2);
  madic_params_set_int(p, "p", 7);
  madic_params_set_int(p, "m", 3);
  run("field-code", p, MADIC_Q_NOT_RESIDUE);
  CHECK(std::strstr(madic_last_error(), "QNotResidue") != nullptr);
  madic_params_free(p);

  p = madic_params_new();
  madic_params_set_int(p, "q", 3);
  madic_params_set_int(p, "p", 13);
  madic_params_set_int(p, "cap", 100);
  madic_params_set_string(p, "generator", "x+2");
  run("distance", p, MADIC_TOO_LARGE);
  madic_params_set_string(p, "generator", "x+1");
  run("distance", p, MADIC_NOT_A_DIVISOR);
  run("no-such-verb", p, MADIC_INVALID_ARGUMENT);
  madic_params_free(p);

  uint64_t bound = 0;
  int attained = 0;
  CHECK(madic_griesmer(19, 3, 15, 7, &bound, &attained) == MADIC_OK);
  CHECK(bound == 19);
  CHECK(attained == 1);
  CHECK(madic_run(nullptr, nullptr, nullptr) == MADIC_INVALID_ARGUMENT);
}
