#include "fourman/cli.hpp"
#include "fourman/config.hpp"
#include "fourman/error.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fourman;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("check ht")
{
  auto k3 = call({"check", "ht", "K3"});
  CHECK(k3.code == 0);
  CHECK(k3.out == "2χ+3τ=0, 2χ−3τ=96, ok\n");
  auto bad = call({"check", "ht", "CP2 # 10*CP2b"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("violated") != std::string::npos);
}

TEST_CASE("eval --json")
{
  auto r = call({"eval", "Xk(2)", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["chi"] == 152);
  CHECK(j["tau"] == -96);
  CHECK(j["b2plus"] == 27);
  CHECK(j["flags"]["spin"] == "yes");
  // deterministic output
  CHECK(call({"eval", "Xk(2)", "--json"}).out == r.out);

  auto text = call({"eval", "cover(CP2, d=2, branch=8)"});
  CHECK(text.code == 0);
  CHECK(text.out.find("c1^2=2 c2=46") != std::string::npos);
}

TEST_CASE("check homeo and einstein")
{
  auto same = call({"check", "homeo", "CP2 # 2*CP2b", "S2xS2 # CP2b"});
  CHECK(same.code == 0);
  CHECK(same.out.find("verdict: homeomorphic") != std::string::npos);
  auto differ = call({"check", "homeo", "K3", "3*CP2 # 19*CP2b"});
  CHECK(differ.code == 1);
  auto e = call({"check", "einstein", "X442 # 6*CP2b", "--json"});
  CHECK(e.code == 0);
  CHECK(nlohmann::json::parse(e.out)["verdict"] == "einstein_obstructed");
}

TEST_CASE("normalize")
{
  auto r = call({"normalize", "S2xS2 # CP2b"});
  CHECK(r.code == 0);
  CHECK(r.out == "R-A: 2*CP2b # CP2\nCP2 # 2 CP2b\n");
  auto same = call({"normalize", "3*CP2 # 5*CP2b", "--json"});
  auto j = nlohmann::json::parse(same.out);
  CHECK(j["trace"].empty());
  CHECK(j["canonical"] == true);
}

TEST_CASE("enumerate")
{
  auto fa = call({"enumerate", "free-actions", "--d", "2", "--eps", "1/2", "--c", "1", "--bounds", "12,8"});
  CHECK(fa.code == 0);
  CHECK(fa.out.rfind("n,m,k,verdict\n", 0) == 0);
  auto serial = call({"enumerate", "free-actions", "--d", "2", "--eps", "0.5", "--c", "1", "--bounds", "12,8", "--serial"});
  CHECK(serial.out == fa.out);
  auto bk = call({"enumerate", "bk", "--eps", "1/2", "--c", "1", "--bounds", "2,20"});
  CHECK(bk.out.rfind("x,y,verdict\n1,1,realized\n", 0) == 0);
  auto json = call({"enumerate", "bk", "--eps", "1/2", "--c", "1", "--bounds", "2,20", "--json"});
  CHECK(nlohmann::json::parse(json.out).size() == 7 + 16);
}

TEST_CASE("usage and input errors exit 2")
{
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"reproduce", "thm9.9"}).code == 2);
  auto syn = call({"eval", "CP2 # "});
  CHECK(syn.code == 2);
  CHECK(syn.err.find("1:7") != std::string::npos);
  CHECK(call({"eval", "Foo"}).code == 2);
  CHECK(call({"enumerate", "bk", "--eps", "x", "--bounds", "1,1"}).code == 2);
  CHECK(call({"enumerate", "free-actions", "--d", "1", "--eps", "1", "--bounds", "1,1"}).code == 2);
  CHECK(call({"--config", "/nonexistent/fourman.cfg", "eval", "K3"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("reproduce exit codes")
{
  auto ok = call({"reproduce", "prop1.3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("15 CP2 # 77 CP2b") != std::string::npos);
}

TEST_CASE("config files")
{
  auto c = parse_config("# constants\nc = 5/2\nn0=3\n\nn1 = 10  # lower bound\n");
  CHECK(c.c == Rational(5, 2));
  CHECK(c.n0 == 3);
  CHECK(c.n1 == 10);
  CHECK(parse_config("c=0.5").c == Rational(1, 2));
  auto kept = parse_config("n0=4", c);
  CHECK(kept.c == Rational(5, 2));
  CHECK(kept.n0 == 4);

  try {
    parse_config("c=1\nbogus=2\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_config("n0=abc"), SyntaxError);
  CHECK_THROWS_AS(parse_config("n0"), SyntaxError);
  CHECK(parse_config(print_config(c)).c == c.c);

  auto path = std::filesystem::temp_directory_path() / "fourman_test.cfg";
  {
    std::ofstream f(path);
    f << "n0=1\nc=2\n";
  }
  CHECK(load_config(path.string()).c == 2);
  auto r = call({"--config", path.string(), "reproduce", "thm1.8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n0 = 1") != std::string::npos);
  {
    std::ofstream f(path);
    f << "n0=5\n";
  }
  CHECK(call({"--config", path.string(), "reproduce", "thm1.8"}).code == 2);
  std::filesystem::remove(path);
}
