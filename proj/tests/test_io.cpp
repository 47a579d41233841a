#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "veronese/errors.hpp"
#include "veronese/io.hpp"
#include "veronese/random_curve.hpp"
#include "veronese/veronese_map.hpp"

using namespace veronese;
using namespace veronese::testing;
using nlohmann::json;

TEST_CASE("complex JSON round trip") {
  for (const ResolutionComplex& c :
       {veronese_complex(), build_resolution(random_curve(4, 1)), build_resolution(random_curve(5, 1)),
        build_resolution(random_curve(3, 2, Field::prime(101)))}) {
    json j = complex_to_json(c);
    CHECK(j["format"] == 1);
    ResolutionComplex back = complex_from_text(j.dump());
    CHECK(back.modules == c.modules);
    CHECK(back.differentials == c.differentials);
    CHECK(back.field == c.field);
    CHECK(back.veronese_ranks == c.veronese_ranks);
    CHECK(back.curve.has_value() == c.curve.has_value());
    if (c.curve) CHECK(back.curve->f == c.curve->f);
    CHECK(complex_to_json(back) == j);
  }
}

TEST_CASE("complex JSON layout") {
  json j = complex_to_json(build_resolution(curve("x0^3 + x1^3 + x2^3")));
  CHECK(j["field"] == "q");
  CHECK(j["curve"]["f"] == "x0^3 + x1^3 + x2^3");
  CHECK(j["curve"]["d"] == 3);
  CHECK(j["modules"][4] == json::array({6}));
  CHECK(j["differentials"][0]["rows"] == 1);
  CHECK(j["differentials"][0]["cols"] == 9);
  CHECK(j["differentials"][0]["entries"][0][0] == "-x12^2 + x11*x22");
  CHECK(complex_to_json(veronese_complex())["curve"].is_null());
}

TEST_CASE("malformed complex JSON") {
  const json good = complex_to_json(build_resolution(curve("x0^2 + x1^2 + x2^2")));
  CHECK_THROWS_AS(complex_from_text("{\"format\": 1,"), FormatError);
  CHECK_THROWS_AS(complex_from_text("[]"), FormatError);

  json j = good;
  j["format"] = 2;
  CHECK_THROWS_AS(complex_from_json(j), FormatError);
  j = good;
  j["field"] = "fp:12";
  CHECK_THROWS_AS(complex_from_json(j), FormatError);
  j = good;
  j["differentials"][1]["entries"][0][0] = "x00 + y";
  CHECK_THROWS_AS(complex_from_json(j), FormatError);
  j = good;
  j["differentials"][1]["rows"] = 3;
  CHECK_THROWS_AS(complex_from_json(j), FormatError);
  j = good;
  j["modules"][2].push_back(3);
  CHECK_THROWS_AS(complex_from_json(j), FormatError);
  j = good;
  j.erase("modules");
  CHECK_THROWS_AS(complex_from_json(j), FormatError);
  j = good;
  j["curve"]["d"] = 4;
  CHECK_THROWS_AS(complex_from_json(j), FormatError);
  j = good;
  j["curve"]["f"] = "x0";
  j["curve"]["d"] = 1;
  CHECK_THROWS_AS(complex_from_json(j), PreconditionError);
}

TEST_CASE("degree check") {
  json j = complex_to_json(veronese_complex());
  CHECK(degree_check(complex_from_json(j)).pass);
  j["differentials"][1]["entries"][0][0] = "x00^2";
  CheckResult r = degree_check(complex_from_json(j));
  CHECK_FALSE(r.pass);
  CHECK(r.message.find("d_2") != std::string::npos);
}

TEST_CASE("reports serialize") {
  ResolutionComplex c = build_resolution(random_curve(3, 5));
  json r = to_json(graded_exactness(c, 8));
  CHECK(r["verdict"] == "EXACT");
  CHECK(r["field"] == "fp:32003");
  REQUIRE(r["cells"].size() == 4 * 9);
  for (const char* key : {"position", "degree", "dim", "rank", "kernel", "rank_next", "verdict"})
    CHECK(r["cells"][0].contains(key));
  CHECK(to_json(betti_table(c)).size() == 5);
  json lift = lift_to_json(curve("x0^3"));
  CHECK(lift["parity"] == "odd");
  CHECK(lift["h"]["II"] == "x00");
  CHECK(lift["F"][1] == "x00*x01");
  CHECK(lift_to_text(curve("x0*x1")).find("F = x01") != std::string::npos);
  CHECK(complex_to_text(veronese_complex()).find("E_2 = S(-3)^8") != std::string::npos);
}
