#include "fourman/certificate.hpp"
#include "fourman/dsl.hpp"
#include "fourman/obstruction.hpp"

#include <doctest.h>

using namespace fourman;

TEST_CASE("arithmetic lines")
{
  nlohmann::json in = {{"X", {{"chi", 24}, {"tau", -16}}}, {"k", 6}, {"big", "123456789012345678901234567890"}};
  CHECK(check_arithmetic("1 + 2 = 3", in));
  CHECK(check_arithmetic("2*X.chi + 3*X.tau = 0", in));
  CHECK(check_arithmetic("floor(7/2) = 3; floor(-7/2) = -4", in));
  CHECK(check_arithmetic("mod(-1, 4) = 3", in));
  CHECK(check_arithmetic("gcd(12, 18) = 6; abs(-3) = 3", in));
  CHECK(check_arithmetic("1/3 + 2/3 = 1", in));
  CHECK(check_arithmetic("1 < 2 <= 2 != 5", in));
  CHECK(check_arithmetic("k >= 16/3", in));
  CHECK(check_arithmetic("big + 1 = 123456789012345678901234567891", in));
  CHECK(check_arithmetic("(1 + 2) * 3 = 9; -(2) = -2", in));

  CHECK_FALSE(check_arithmetic("1 + 2 = 4", in));
  CHECK_FALSE(check_arithmetic("1 = 1; 2 < 1", in));
  CHECK_FALSE(check_arithmetic("k >= 7", in));

  std::string err;
  CHECK_FALSE(check_arithmetic("missing = 1", in, &err));
  CHECK_FALSE(err.empty());
  err.clear();
  CHECK_FALSE(check_arithmetic("1 +", in, &err));
  CHECK_FALSE(err.empty());
  CHECK_FALSE(check_arithmetic("1 / 0 = 1", in, &err));
}

TEST_CASE("exact JSON numbers")
{
  CHECK(json_number(Integer(5)) == nlohmann::json(5));
  CHECK(json_number(Rational(1, 2)) == nlohmann::json("1/2"));
  Integer huge = boost::multiprecision::pow(Integer(10), 30);
  CHECK(json_number(huge).is_string());
}

TEST_CASE("certificates survive a JSON round trip")
{
  auto c = lebrun_einstein(prim("X442"), 6, 0);
  auto back = Certificate::from_json(nlohmann::json::parse(c.to_json().dump()));
  CHECK(back.verdict == c.verdict);
  CHECK(back.steps.size() == c.steps.size());
  CHECK(verify_certificate(back).ok);
}

TEST_CASE("tampered certificates fail")
{
  auto c = lebrun_einstein(prim("X442"), 6, 0);
  REQUIRE(verify_certificate(c).ok);

  SUBCASE("changed input")
  {
    auto t = c;
    t.inputs["k"] = 5;
    auto r = verify_certificate(t);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_step == t.steps.size() - 1);
  }
  SUBCASE("changed invariant")
  {
    auto t = c;
    t.inputs["X"]["chi"] = 100;
    CHECK_FALSE(verify_certificate(t).ok);
  }
  SUBCASE("missing citation")
  {
    auto t = c;
    t.steps[0].citation.clear();
    auto r = verify_certificate(t);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_step == 0);
  }
  SUBCASE("forged relation")
  {
    auto t = c;
    t.steps.push_back({"forged", "nobody", "X.b2plus < 0"});
    CHECK_FALSE(verify_certificate(t).ok);
  }
  SUBCASE("dropped input")
  {
    auto t = c;
    t.inputs.erase("X");
    CHECK_FALSE(verify_certificate(t).ok);
  }
}

TEST_CASE("Hambleton-Kreck certificate tampering")
{
  auto c = homeo_equal(parse_expr("CP2 # 2*CP2b"), parse_expr("S2xS2 # CP2b"));
  REQUIRE(verify_certificate(c).ok);
  auto t = c;
  t.inputs["B"]["parity_odd"] = 0;
  CHECK_FALSE(verify_certificate(t).ok);
}
