#include <doctest.h>

#include "brouwer1d/report.hpp"
#include "test_support.hpp"

using namespace brouwer1d;

TEST_CASE("rationals cross JSON as strings") {
  const Rational x(-3, 7);
  const Json j = to_json(x);
  CHECK(j.is_string());
  CHECK(j.dump() == "\"-3/7\"");
  CHECK(rational_from_json(Json::parse(j.dump())) == x);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), InvalidInput);
}

TEST_CASE("fixed-point report records") {
  SolverConfig c;
  c.epsilon = Rational(1, 1000);
  const auto exact = solve(parse("1 - x"), 0, 1, c);
  CHECK(to_json(exact).dump() ==
        R"({"mode":"refine","result":"exact_vertex","converged":true,"rounds_used":1,"x":"1/2","x_decimal":"0.500000000000"})");

  c.epsilon = Rational(1, 4);
  const auto br = solve(parse("(x*x + 2)/4"), 0, 1, c);
  const Json j = to_json(br, Rational(1, 2));
  CHECK(j["result"] == "bracket");
  CHECK(j["rounds_used"] == 2);
  CHECK(j["lo"] == "1/2");
  CHECK(j["hi"] == "3/4");
  CHECK(j["g_lo"] == "1/16");  // 9/16 - 1/2
  CHECK(j["g_hi"] == "-7/64");
  CHECK(j["residual_bound"] == "3/16");
  CHECK(j["hi_decimal"] == "0.750000000000");
}

TEST_CASE("JSON round trip of every rational field") {
  const auto reports = run_demo(12);
  for (const auto& r : reports) {
    const Json j = Json::parse(to_json(r).dump());
    CHECK(rational_from_json(j["lo"]) == r.bracket.lo);
    CHECK(rational_from_json(j["hi"]) == r.bracket.hi);
    CHECK(rational_from_json(j["g_lo"]) == r.bracket.g_lo);
    CHECK(rational_from_json(j["g_hi"]) == r.bracket.g_hi);
    CHECK(rational_from_json(j["midpoint_residual"]) == r.midpoint_residual);
  }
}

TEST_CASE("counterexample CSV") {
  const std::string csv = counterexample_csv(run_demo(2));
  CHECK(csv ==
        "depth,width,abs_residual,width_decimal,abs_residual_decimal\n"
        "1,1/2,3/4,0.500000000000,0.750000000000\n"
        "2,1/4,5/8,0.250000000000,0.625000000000\n");
}
