#include "fourman/dsl.hpp"
#include "fourman/error.hpp"
#include "fourman/evaluate.hpp"

#include <doctest.h>

#include <random>

using namespace fourman;

namespace {

Expr random_expr(std::mt19937& rng, int depth)
{
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 11 : 5);
  std::uniform_int_distribution<int> small(1, 4);
  switch (pick(rng)) {
  case 0: return prim("CP2");
  case 1: return prim("CP2b");
  case 2: return prim("K3");
  case 3: return prim("E", {small(rng)});
  case 4: return prim_group("XG", {24, -16}, small(rng) % 2 ? GroupLabel::cyclic(small(rng) + 1) : GroupLabel::presented("G"));
  case 5: return cyclic_cover(Base::CP1xCP1, 2, DivisorClass::on_quadric(2 * small(rng), 2 * small(rng)));
  case 6: return bicyclic(small(rng), small(rng), small(rng), small(rng), small(rng), small(rng));
  case 7: return quotient(bicyclic(3, 2, 3, 3, 3, 3), 3, small(rng) % 2 ? Action::weighted : Action::standard);
  case 8: return fiber_sum(random_expr(rng, depth - 1), random_expr(rng, depth - 1), small(rng) - 1);
  case 9: return log_transform_node(random_expr(rng, depth - 1), small(rng));
  default: {
    std::vector<Summand> parts;
    int n = small(rng);
    for (int i = 0; i < n; ++i)
      parts.push_back({random_expr(rng, depth - 1), small(rng)});
    return connected_sum(parts);
  }
  }
}

void syntax_error_at(const char* text, int line, int col)
{
  try {
    parse_dsl(text);
    FAIL("expected a syntax error for " << text);
  } catch (const SyntaxError& e) {
    CAPTURE(e.what());
    CHECK(e.line() == line);
    CHECK(e.column() == col);
  }
}

} // namespace

TEST_CASE("grammar examples")
{
  auto sum = parse_expr("CP2 # 2*CP2b");
  const auto* s = sum.as<ConnectedSum>();
  REQUIRE(s);
  REQUIRE(s->parts.size() == 2);
  CHECK(s->parts[0].expr == prim("CP2"));
  CHECK(s->parts[1].expr == prim("CP2b"));
  CHECK(s->parts[1].multiplicity == 2);

  auto q = parse_expr("quotient(bicyclic(3,2;3,3,3,3), 3)");
  REQUIRE(q.is<Quotient>());
  CHECK(q.as<Quotient>()->degree == 3);
  CHECK(q.as<Quotient>()->inner == bicyclic(3, 2, 3, 3, 3, 3));

  auto c = parse_expr("cover(CP2, d=2, branch=8)");
  CHECK(c == cyclic_cover(Base::CP2, 2, DivisorClass::on_cp2(8)));
  CHECK(parse_expr("cover(CP1xCP1, d=3, branch=(6,9))") ==
        cyclic_cover(Base::CP1xCP1, 3, DivisorClass::on_quadric(6, 9)));

  CHECK(parse_expr("CP2bar") == prim("CP2b"));
  CHECK(parse_expr("XG(24,-16,Z/2)") == prim_group("XG", {24, -16}, GroupLabel::cyclic(2)));
  CHECK(parse_expr("fibersum(E(1), E(1), g=1)") == fiber_sum(prim("E", {1}), prim("E", {1}), 1));
  CHECK(parse_expr("logt(E(2), 3)") == log_transform_node(prim("E", {2}), 3));
  CHECK(parse_expr("quotient(bicyclic(2,3;6,3,1,1), 2, weighted)").as<Quotient>()->action == Action::weighted);
  CHECK(parse_expr("  K3\n# S2xS2  ").is<ConnectedSum>());
  CHECK(parse_expr("1*K3").is<ConnectedSum>());
  CHECK(parse_expr("(K3)") == prim("K3"));
}

TEST_CASE("queries")
{
  auto bk = std::get<BkQuery>(parse_dsl("bk(eps=1/2, c=1, bounds=(10,80))"));
  CHECK(bk.eps_prime == Rational(1, 2));
  CHECK(bk.c == 1);
  CHECK(bk.x_max == 10);
  CHECK(bk.y_max == 80);
  auto fa = std::get<GeographyQuery>(parse_dsl("free_actions(d=3, eps=0.25, c=-1.5, bounds=(90,60))"));
  CHECK(fa.d == 3);
  CHECK(fa.epsilon == Rational(1, 4));
  CHECK(fa.c == Rational(-3, 2));
  CHECK(std::get<GeographyQuery>(parse_dsl(print(fa))).c == fa.c);
  CHECK_THROWS_AS(parse_expr("bk(eps=1, c=1, bounds=(1,1))"), SyntaxError);
}

TEST_CASE("print/parse round trip on random trees")
{
  std::mt19937 rng(99);
  for (int t = 0; t < 300; ++t) {
    Expr e = random_expr(rng, 3);
    auto text = print(e);
    CAPTURE(text);
    Expr back = parse_expr(text);
    CHECK(back == e);
    CHECK(print(back) == text);
  }
}

TEST_CASE("plain printing")
{
  CHECK(print_plain(parse_expr("15*CP2 # 77*CP2b")) == "15 CP2 # 77 CP2b");
  CHECK(print_plain(prim("K3")) == "K3");
}

TEST_CASE("syntax errors carry positions")
{
  syntax_error_at("CP2 # ", 1, 7);
  syntax_error_at("K3 # (CP2", 1, 10);
  syntax_error_at("CP2\n# $", 2, 3);
  syntax_error_at("CP2 CP2", 1, 5);
  syntax_error_at("cover(CP3, d=2, branch=8)", 1, 10);
  syntax_error_at("cover(CP2, e=2, branch=8)", 1, 12);
  syntax_error_at("bk(eps=1/0, c=1, bounds=(1,1))", 1, 11);
  syntax_error_at("", 1, 1);
}

TEST_CASE("unknown primitives")
{
  try {
    parse_expr("K3 # Foo(2)");
    FAIL("expected UnknownPrimitive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownPrimitive);
    CHECK(std::string(e.what()).find("1:6") != std::string::npos);
  }
}

TEST_CASE("user primitives parse once registered")
{
  PrimitiveRegistry reg;
  StructureFlags f;
  f.pi1 = GroupLabel::trivial();
  f.cite("pi1", "declared");
  CHECK_THROWS_AS(parse_expr("Fake # CP2", reg), Error);
  reg.register_primitive("Fake", {24, -16, 0}, f);
  auto e = parse_expr("Fake # CP2", reg);
  CHECK(evaluate(e, reg).record == InvariantRecord{25, -15, 0});
}
