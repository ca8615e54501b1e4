#include "fourman/dsl.hpp"
#include "fourman/error.hpp"
#include "fourman/geography.hpp"
#include "fourman/geography_kernels.hpp"
#include "fourman/obstruction.hpp"

#include <doctest.h>

#include <functional>

using namespace fourman;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidExpr;
}

// Two-step cyclic cover oracle for bicyclic (d,p;a,b,m,n) over CP1xCP1.
std::pair<long long, long long> two_step(long long d, long long p, long long a, long long b, long long m, long long n)
{
  auto euler = [](long long x, long long y) { return 2 * (x + y) - 2 * x * y; };
  long long c2_first = 4 * d - (d - 1) * euler(d * a, d * b);
  long long chi_branch = d * euler(p * m, p * n) - (d - 1) * (d * a * p * n + d * b * p * m);
  long long c2 = p * c2_first - (p - 1) * chi_branch;
  long long fx = (d - 1) * a - 2 + (p - 1) * m, fy = (d - 1) * b - 2 + (p - 1) * n;
  return {p * d * 2 * fx * fy, c2};
}

// (c1^2, c2) of Z_i from the oracle, divided by the group order.
std::pair<long long, long long> zi_oracle(long long d, long long i)
{
  auto e = zi_expr(d, i);
  const auto* q = e.as<Quotient>();
  REQUIRE(q);
  const auto* b = q->inner.as<BicyclicCover>();
  REQUIRE(b);
  auto [c1, c2] = two_step(to_ll(b->d), to_ll(b->p), to_ll(b->a), to_ll(b->b), to_ll(b->m), to_ll(b->n));
  REQUIRE(c1 % d == 0);
  REQUIRE(c2 % d == 0);
  return {c1 / d, c2 / d};
}

long long floor_ll(long long a, long long b)
{
  long long q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

} // namespace

TEST_CASE("bk region: parallel kernel equals serial reference and the brute-force predicate")
{
  std::vector<BkQuery> queries = {
    {Rational(1, 2), 1, 60, 500},
    {Rational(1, 4), Rational(7, 3), 37, 300},
    {0, 0, 10, 100},
    {Rational(17, 2), 0, 40, 40},
    {1, 5, 0, 10},
  };
  for (const auto& q : queries) {
    CAPTURE(print(q));
    auto s = bk_region(q, false);
    auto p = bk_region(q, true);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].x == p[i].x);
      CHECK(s[i].y == p[i].y);
      CHECK(s[i].verdict == p[i].verdict);
    }
    std::size_t brute = 0;
    for (Integer x = 1; x <= q.x_max; ++x)
      for (Integer y = 1; y <= q.y_max; ++y)
        if (Rational(y) + q.c <= (9 - q.eps_prime) * Rational(x))
          ++brute;
    CHECK(brute == s.size());
  }
}

TEST_CASE("free actions: parallel kernel equals serial reference and the brute-force predicate")
{
  std::vector<GeographyQuery> queries = {
    {2, Rational(1, 2), 1, 200, 120},
    {3, Rational(1, 10), Rational(5, 2), 150, 90},
    {5, 1, 0, 300, 100},
    {2, 6, 1, 50, 50},
    {7, Rational(2, 3), 3, 210, 70},
  };
  for (const auto& q : queries) {
    CAPTURE(print(q));
    auto s = free_action_region(q, false);
    auto p = free_action_region(q, true);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].n == p[i].n);
      CHECK(s[i].m == p[i].m);
      CHECK(s[i].k == p[i].k);
      CHECK(s[i].verdict == p[i].verdict);
    }
    long long d = to_ll(q.d);
    std::size_t brute = 0, idx = 0;
    for (long long n = 1; n <= to_ll(q.n_max); ++n)
      for (long long m = 1; m <= to_ll(q.m_max); ++m) {
        if (n % d || m % d)
          continue;
        Rational shift = Rational(2 * d, 3) * (q.c + 1);
        if (!(Rational(n) < (6 - q.epsilon) * m - shift))
          continue;
        ++brute;
        REQUIRE(idx < s.size());
        long long k = floor_ll(3 * n, 2 * d) + 1 - n / d;
        CHECK(s[idx].n == n);
        CHECK(s[idx].m == m);
        CHECK(s[idx].k == k);
        ++idx;
      }
    CHECK(brute == s.size());
  }
}

TEST_CASE("free-action k and verdicts")
{
  CHECK(kernels::free_action_k(20, 2) == 6);
  CHECK(kernels::free_action_k(6, 3) == 2);
  GeographyQuery q{2, Rational(1, 2), 1, 40, 20};
  for (const auto& pt : free_action_region(q)) {
    long long c1 = floor_ll(3 * to_ll(pt.n), 4) + 1;
    bool fires = pt.m >= 4 && 3 * pt.k >= c1;
    CHECK(pt.verdict == (fires ? verdict::einstein_obstructed : verdict::none));
  }
}

TEST_CASE("quotient blueprint at (n,m,d) = (20,8,2)")
{
  auto bp = build_quotient_blueprint(20, 8, 2);
  auto q = eval_invariants(bp.quotient);
  CHECK(q.c1sq() == 10);
  CHECK(q.chi_h() == 4);
  auto up = eval_invariants(bp.cover);
  CHECK(up.c1sq() == 20);
  CHECK(up.chi_h() == 8);
  CHECK(bp.labels.at("k") == 6);
  REQUIRE(bp.cover_normal_form);
  CHECK(bp.cover_normal_form->form == flat_sum({{prim("CP2"), 2 * 8 - 1}, {prim("CP2b"), 10 * 8 - 20 - 1}}));
  for (const auto& [name, c] : bp.certificates) {
    CAPTURE(name);
    CHECK(verify_certificate(c).ok);
  }
  CHECK(bp.certificates.at(2).second.verdict == verdict::einstein_obstructed);

  auto small = build_quotient_blueprint(4, 2, 2);
  CHECK(small.certificates.at(2).second.verdict == verdict::none);

  CHECK(kind_of([] { build_quotient_blueprint(3, 8, 2); }) == ErrorKind::InfeasiblePoint);
  CHECK(kind_of([] { build_quotient_blueprint(20, 8, 1); }) == ErrorKind::InfeasiblePoint);
  CHECK(kind_of([] { build_quotient_blueprint(200, 2, 2); }) == ErrorKind::InfeasiblePoint);
}

TEST_CASE("Z_i invariants against the two-step oracle")
{
  auto [c1, c2] = zi_oracle(3, 1);
  CHECK((c1 + c2) % 12 == 0);
  CHECK((c1 + c2) / 12 == 41);
  CHECK(eval_invariants(zi_expr(3, 1)).chi_h() == 41);
  for (long long d : {2, 3, 4, 5, 6, 7})
    for (long long i : {1, 3, 5, 7}) {
      auto [o1, o2] = zi_oracle(d, i);
      auto r = eval_invariants(zi_expr(d, i));
      CAPTURE(d);
      CAPTURE(i);
      CHECK(r.c1sq() == o1);
      CHECK(r.c2() == o2);
      CHECK(is_integral(r.chi_h()));
    }
}

TEST_CASE("odd Z_i: printed chi_h exceeds the evaluated value by d(d-1)")
{
  for (long long d : {3, 5, 7})
    for (long long i : {1, 3, 5}) {
      auto [c1, c2] = zi_oracle(d, i);
      Rational printed = Rational(d * d * (d - 1) * (2 * d - 1), 3) + d * (d - 1) * (d * i - 1) + d * d * i * i -
                         2 * d * i + 2;
      long long s = d * (d - 1) + d * i - 2;
      CHECK(c1 == 4 * s * s);
      CHECK(printed - Rational(c1 + c2, 12) == d * (d - 1));
    }
}

TEST_CASE("Z_i flags and family data")
{
  auto f = evaluate(zi_expr(3, 1)).flags;
  CHECK(f.pi1 == GroupLabel::cyclic(3));
  CHECK(f.parity == Parity::odd);
  CHECK(f.w2type == W2Type::I);
  auto even = evaluate(zi_expr(2, 21)).flags;
  CHECK(even.parity == Parity::odd);

  auto z = zi_family(3, 1);
  CHECK(z.labels.at("chi_h") == 41);
  for (const auto& [name, c] : z.certificates)
    CHECK(verify_certificate(c).ok);
  CHECK(kind_of([] { zi_expr(3, 2); }) == ErrorKind::BadParity);
  CHECK(kind_of([] { zi_family(5, -1); }) == ErrorKind::BadParity);
}

TEST_CASE("Z_i start index against an exhaustive scan")
{
  for (long long d : {2, 3, 5, 7}) {
    long long start = -1;
    for (long long i = 401; i >= 1; i -= 2) {
      auto [c1, c2] = zi_oracle(d, i);
      if (7 * c1 < 5 * c2)
        start = i;
      else
        break;
    }
    CAPTURE(d);
    CHECK(zi_start_index(d) == start);
  }
  CHECK(zi_start_index(2) == 21);
  CHECK(zi_start_index(3) == 1);
  CHECK(zi_start_index(5) == 11);
  CHECK(zi_start_index(7) == 19);
}

TEST_CASE("main pair family")
{
  auto bp = main_pair_family(3, 1, 1);
  CHECK(bp.certificates.at(0).second.verdict == verdict::homeomorphic);
  CHECK(bp.certificates.at(1).second.verdict == verdict::einstein_obstructed);
  for (const auto& [name, c] : bp.certificates) {
    CAPTURE(name);
    CHECK(verify_certificate(c).ok);
  }
  CHECK(eval_invariants(bp.quotient) == eval_invariants(zi_expr(3, 1)));
  GeographyConfig cfg;
  cfg.n1 = 1000;
  CHECK(kind_of([&] { main_pair_family(3, 1, 1, cfg); }) == ErrorKind::InfeasiblePoint);
  CHECK(kind_of([] { main_pair_family(3, 1, 1, {}, Integer(9 * 41)); }) == ErrorKind::InfeasiblePoint);
}

TEST_CASE("spin families")
{
  for (long long d : {2, 3})
    for (long long n : {1, 3}) {
      auto fam = spin_families(d, n, 1);
      REQUIRE(fam.first.cover_normal_form);
      REQUIRE(fam.second.cover_normal_form);
      CHECK(fam.first.cover_normal_form->form ==
            flat_sum({{prim("K3"), d * (n + 5)}, {prim("S2xS2"), d * (n + 7) - 1}}));
      CHECK(fam.second.cover_normal_form->form ==
            flat_sum({{prim("K3"), d * (2 * n + 5)}, {prim("S2xS2"), d * (2 * n + 6) - 1}}));
      CHECK(fam.first.certificates.at(0).second.verdict == verdict::einstein_obstructed);
      CHECK(fam.second.certificates.at(0).second.verdict == verdict::einstein_obstructed);
      CHECK(fam.first.certificates.at(1).second.verdict == verdict::ht_ok);
      for (const auto& [name, c] : fam.first.certificates)
        CHECK(verify_certificate(c).ok);
    }
  // E(4) keeps the four-piece congruence at even n
  auto even = spin_families(2, 2, 1, {}, prim("E", {4}));
  CHECK(even.first.certificates.at(0).second.verdict == verdict::einstein_obstructed);
  auto k3 = spin_families(2, 2, 1, {}, prim("K3"));
  CHECK(k3.first.certificates.at(0).second.verdict == verdict::none);
  CHECK(kind_of([] { spin_families(1, 1, 1); }) == ErrorKind::InfeasiblePoint);
}

TEST_CASE("group families")
{
  GroupParams g{24, -16, GroupLabel::cyclic(3)};
  auto s = spin_group_family(g, 2, 1);
  CHECK(s.labels.at("ng_b2plus") == 4 * (1 + 2) - 1);
  CHECK(s.certificates.at(0).second.verdict == verdict::einstein_obstructed);
  CHECK(evaluate(s.quotient).flags.pi1 == GroupLabel::cyclic(3));

  // XG(24,-16) #T E(4) #S2 Xk(1) #S2 E(4) #T E(2): chi 252, tau -160, c1^2 24
  GroupParams z2{24, -16, GroupLabel::cyclic(2)};
  auto ns = nonspin_group_family(z2, 1, 9, 3);
  CHECK(ns.labels.at("chain_c1sq") == 24);
  CHECK(eval_invariants(ns.quotient) == InvariantRecord{252 + 27 - 18, -160 - 9, 0});
  CHECK(evaluate(ns.quotient).flags.pi1 == GroupLabel::cyclic(2));
  CHECK(ns.certificates.at(0).second.verdict == verdict::einstein_obstructed);
  for (const auto& [name, c] : ns.certificates)
    CHECK(verify_certificate(c).ok);
  CHECK(kind_of([&] { nonspin_group_family(z2, 1, 24, 3); }) == ErrorKind::BadP);
  CHECK(kind_of([&] { nonspin_group_family(z2, 1, 8, 3); }) == ErrorKind::BadP);
}
