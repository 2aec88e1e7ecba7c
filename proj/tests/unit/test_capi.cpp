#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "formalab/formalab.h"
#include "json.hpp"

using nlohmann::json;

namespace {

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  formalab_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("groups load through the C interface") {
  formalab_group* g = nullptr;
  REQUIRE(formalab_group_from_catalog("S4", &g) == FORMALAB_OK);
  CHECK(formalab_group_order(g) == 24);
  CHECK(std::string(formalab_group_name(g)) == "S4");
  formalab_group_free(g);

  const char* spec = R"js({"name":"S3p","kind":"permutation","degree":3,"generators":["(1 2 3)","(1 2)"]})js";
  REQUIRE(formalab_group_from_json(spec, &g) == FORMALAB_OK);
  CHECK(formalab_group_order(g) == 6);
  formalab_group_free(g);

  CHECK(formalab_group_from_catalog("nope", &g) == FORMALAB_LOAD_ERROR);
  CHECK(g == nullptr);
  CHECK(std::string(formalab_last_error()).find("nope") != std::string::npos);
  CHECK(formalab_group_from_json("{not json", &g) == FORMALAB_LOAD_ERROR);
  CHECK(formalab_group_from_json(R"js({"name":"x","kind":"permutation","degree":3,"generators":["(1 4)"]})js", &g) ==
        FORMALAB_LOAD_ERROR);
  CHECK(formalab_group_from_catalog(nullptr, &g) == FORMALAB_INVALID_ARGUMENT);
  CHECK(std::string(formalab_status_string(FORMALAB_CAP_EXCEEDED)) == "cap exceeded");
  formalab_group_free(nullptr);
}

TEST_CASE("analyze and lattice dump") {
  formalab_group* g = nullptr;
  REQUIRE(formalab_group_from_catalog("S4", &g) == FORMALAB_OK);
  char *js = nullptr, *text = nullptr;
  REQUIRE(formalab_analyze(g, "sup", "3", &js, &text) == FORMALAB_OK);
  CHECK(std::string(text).find("Int ") != std::string::npos);
  formalab_string_free(text);
  const json r = take(js);
  CHECK(r["z"]["order"] == 24);
  CHECK(r["int"]["order"] == 1);
  CHECK(r["f_maximal"].size() == 7);
  CHECK(r["chief_series"].size() == 3);

  REQUIRE(formalab_lattice_dump(g, &js) == FORMALAB_OK);
  const json l = take(js);
  CHECK(l["subgroups"].size() == 30);
  CHECK(l["subgroups"][0]["hex"] == "000001");
  CHECK(l["subgroups"][29]["hex"] == "ffffff");

  CHECK(formalab_analyze(g, "bogus", "all", &js, nullptr) == FORMALAB_INVALID_ARGUMENT);
  CHECK(js == nullptr);
  CHECK(formalab_analyze(g, "nil", "4", &js, nullptr) == FORMALAB_INVALID_ARGUMENT);
  formalab_group_free(g);

  REQUIRE(formalab_group_from_catalog("C6", &g) == FORMALAB_OK);
  REQUIRE(formalab_analyze(g, "nil", "all", &js, nullptr) == FORMALAB_OK);
  const json c6 = take(js);
  CHECK(c6["z"]["order"] == 6);
  CHECK(c6["int"]["order"] == 6);
  CHECK(c6["int_star"]["order"] == 6);
  formalab_group_free(g);
}

TEST_CASE("catalog, verify and hunt") {
  char* js = nullptr;
  REQUIRE(formalab_catalog_list(&js) == FORMALAB_OK);
  CHECK(take(js).size() > 100);

  int passed = -1;
  REQUIRE(formalab_verify("baer", 24, 0, nullptr, nullptr, 0, &js, &passed) == FORMALAB_OK);
  CHECK(passed == 1);
  const json rep = take(js);
  CHECK(rep["suite"] == "baer");
  CHECK(rep["failures"].empty());
  CHECK(!rep.contains("seconds"));

  REQUIRE(formalab_verify("z-equals-int", 24, 0, "sup", "3", 1, &js, &passed) == FORMALAB_OK);
  CHECK(passed == 0);
  const json expl = take(js);
  CHECK(expl["label"] == "exploratory");
  CHECK(expl.contains("seconds"));

  CHECK(formalab_verify("nope", 0, 0, nullptr, nullptr, 0, &js, &passed) == FORMALAB_INVALID_ARGUMENT);

  REQUIRE(formalab_hunt_critical("sup", 3, 1, &js) == FORMALAB_OK);
  const json hunt = take(js);
  bool a4 = false;
  for (const auto& w : hunt["witnesses"]) a4 = a4 || w["group"] == "A4";
  CHECK(a4);
  CHECK(formalab_hunt_critical("syltower", 3, 0, &js) == FORMALAB_NO_SATELLITE);
  CHECK(formalab_hunt_critical("sup", 4, 0, &js) == FORMALAB_INVALID_ARGUMENT);
}
