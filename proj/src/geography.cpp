#include "fourman/geography.hpp"

#include "fourman/covers.hpp"
#include "fourman/dsl.hpp"
#include "fourman/error.hpp"
#include "fourman/geography_kernels.hpp"
#include "fourman/obstruction.hpp"
#include "fourman/surgery.hpp"

namespace fourman {

namespace {

nlohmann::json record_input(const Expr& e, const InvariantRecord& rec)
{
  nlohmann::json j;
  j["expr"] = print(e);
  j["chi"] = json_number(rec.chi);
  j["tau"] = json_number(rec.tau);
  j["b1"] = json_number(rec.b1);
  return j;
}

Integer integral_chi_h(const InvariantRecord& rec, const char* what)
{
  auto x = rec.chi_h();
  if (!is_integral(x))
    throw Error(ErrorKind::NonIntegralQuotient, std::string(what) + " has chi_h = " + to_string(x));
  return to_integer(x);
}

Certificate invariant_certificate(const Expr& e, const InvariantRecord& rec, const Integer& chi_h,
                                  const Integer& c1sq, const std::string& citation)
{
  Certificate c;
  c.verdict = verdict::none;
  c.inputs["M"] = record_input(e, rec);
  c.inputs["chi_h"] = json_number(chi_h);
  c.inputs["c1sq"] = json_number(c1sq);
  c.steps.push_back({"invariants of " + print(e), citation, "(M.chi + M.tau)/4 = chi_h; 2*M.chi + 3*M.tau = c1sq"});
  return c;
}

Expr sum_of(std::vector<Summand> parts) { return connected_sum(std::move(parts)); }

void attach_normal_form(FamilyBlueprint& bp, const NormalizeOptions& opts)
{
  auto nf = normalize(bp.cover, opts);
  bp.notes.push_back("cover normal form: " + print_plain(nf.form));
  bp.cover_normal_form = std::move(nf);
}

} // namespace

bool bk_predicate(const Rational& eps_prime, const Rational& c, const Integer& x, const Integer& y)
{
  return x >= 1 && y >= 1 && Rational(y) <= (9 - eps_prime) * x - c;
}

bool free_action_predicate(const GeographyQuery& q, const Integer& n, const Integer& m)
{
  if (n <= 0 || m <= 0 || !divides(q.d, n) || !divides(q.d, m))
    return false;
  return Rational(n) < (6 - q.epsilon) * m - q.n_eps();
}

std::vector<BkPoint> bk_region(const BkQuery& query, bool parallel)
{
  return parallel ? kernels::bk_region_parallel(query) : kernels::bk_region_serial(query);
}

std::vector<FreeActionPoint> free_action_region(const GeographyQuery& query, bool parallel)
{
  return parallel ? kernels::free_action_region_parallel(query) : kernels::free_action_region_serial(query);
}

FamilyBlueprint build_quotient_blueprint(const Integer& n, const Integer& m, const Integer& d, const Integer& j)
{
  if (d < 2)
    throw Error(ErrorKind::InfeasiblePoint, "the group order must be at least 2");
  if (n <= 0 || m <= 0 || !divides(d, n) || !divides(d, m))
    throw Error(ErrorKind::InfeasiblePoint,
                "(n,m) = (" + to_string(n) + "," + to_string(m) + ") needs n, m > 0 divisible by " + to_string(d));
  const Integer x = m / d;
  const Integer y = floor_div(3 * n, 2 * d) + 1;
  const Integer k = kernels::free_action_k(n, d);
  if (k < 1 || y >= 9 * x)
    throw Error(ErrorKind::InfeasiblePoint, "no symplectic block with (chi_h, c1^2) = (" + to_string(x) + "," +
                                                to_string(y) + ")");

  FamilyBlueprint bp;
  Expr block = prim("Sympl", {x, y, j});
  Expr sd = prim("Sd", {d});
  bp.quotient = sum_of({{block, 1}, {sd, 1}, {prim("CP2b"), k}});
  bp.cover = universal_cover(bp.quotient);
  bp.labels = {{"n", n}, {"m", m}, {"d", d}, {"k", k}, {"block_chi_h", x}, {"block_c1sq", y}};

  auto q = evaluate(bp.quotient);
  if (q.record.c1sq() != n / d || integral_chi_h(q.record, "quotient") != x)
    throw Error(ErrorKind::MismatchedInvariants, "quotient invariants are not n/d, m/d");
  bp.certificates.emplace_back("quotient", invariant_certificate(bp.quotient, q.record, x, n / d,
                                                                 "additivity under connected sum"));
  auto up = evaluate(bp.cover);
  bp.certificates.emplace_back("cover", invariant_certificate(bp.cover, up.record, m, n,
                                                              "multiplicativity under finite covers"));
  bp.certificates.emplace_back("lebrun", lebrun_einstein(sum_of({{block, 1}, {sd, 1}}), k, 0));
  bp.notes.push_back("Braungardt-Kotschick block at (chi_h, c1^2) = (" + to_string(x) + "," + to_string(y) + ")");
  if (x < 2)
    bp.notes.push_back("b2+ of the block is 1: Seiberg-Witten invariant not defined, LeBrun does not apply");
  attach_normal_form(bp, {});
  return bp;
}

Expr zi_expr(const Integer& d, const Integer& i)
{
  if (d < 2)
    throw Error(ErrorKind::InvalidExpr, "d must be at least 2");
  if (i < 1 || mod_floor(i, 2) == 0)
    throw Error(ErrorKind::BadParity, "the Z_i family is indexed by odd i, got " + to_string(i));
  if (mod_floor(d, 2) == 1)
    return quotient(bicyclic(d, 2, d, d, d * i, d * i), d);
  Integer odd = d;
  while (mod_floor(odd, 2) == 0)
    odd /= 2;
  if (odd == 1)
    odd = 3;
  return quotient(bicyclic(d, 3, 2 * odd, odd, i, i), d, Action::weighted);
}

Integer zi_start_index(const Integer& d)
{
  // f(i) = 5 c2 - 7 c1^2 of the quotient is a quadratic in i; interpolate it exactly
  auto f = [&](const Integer& i) {
    auto q = zi_expr(d, i).as<Quotient>();
    const auto* b = q->inner.as<BicyclicCover>();
    auto rec = bicyclic_invariants(b->d, b->p, b->a, b->b, b->m, b->n);
    return Rational(5 * rec.c2() - 7 * rec.c1sq(), d);
  };
  Rational f1 = f(1), f3 = f(3), f5 = f(5);
  Rational a = (f5 - 2 * f3 + f1) / 8;
  Rational b = (f3 - f1) / 2 - 4 * a;
  Rational c = f1 - a - b;
  if (a <= 0)
    throw Error(ErrorKind::MismatchedInvariants, "c1^2/chi_h of the Z_i family does not stay below 5");
  // Cauchy bound on the roots
  Rational bound = 1 + std::max(abs(b / a), abs(c / a));
  Integer last_bad = -1;
  for (Integer i = 1; i <= ceil(bound) + 1; i += 2)
    if (a * i * i + b * i + c <= 0)
      last_bad = i;
  return last_bad < 0 ? Integer(1) : last_bad + 2;
}

FamilyBlueprint zi_family(const Integer& d, const Integer& i)
{
  FamilyBlueprint bp;
  bp.quotient = zi_expr(d, i);
  bp.cover = bp.quotient.as<Quotient>()->inner;
  auto z = evaluate(bp.quotient);
  const Integer chi_h = integral_chi_h(z.record, "Z_i");
  const Integer n0 = zi_start_index(d);
  bp.labels = {{"d", d},
               {"i", i},
               {"chi_h", chi_h},
               {"c1sq", z.record.c1sq()},
               {"c2", z.record.c2()},
               {"tau", z.record.tau},
               {"n0", n0}};
  bp.certificates.emplace_back("invariants",
                               invariant_certificate(bp.quotient, z.record, chi_h, z.record.c1sq(),
                                                     "bi-cyclic cover invariants divided by the group order"));
  bp.certificates.emplace_back("hitchin_thorpe", hitchin_thorpe(z.record));
  bp.notes.push_back("Aubin-Yau: ample canonical bundle, so Z_i carries a Kaehler-Einstein metric");
  bp.notes.push_back("universal cover is a bi-cyclic cover, almost completely decomposable (Mandelbaum-Moishezon)");
  if (5 * chi_h <= z.record.c1sq())
    bp.notes.push_back("c1^2 >= 5 chi_h at i = " + to_string(i) + "; the family starts at i = " + to_string(n0));
  return bp;
}

FamilyBlueprint main_pair_family(const Integer& d, const Integer& i, const Integer& j, const GeographyConfig& config,
                                 std::optional<Integer> c1sq_block)
{
  auto z = zi_family(d, i);
  const Integer x = z.labels.at("chi_h");
  const Integer y = c1sq_block.value_or(8 * x);
  if (x <= config.n1)
    throw Error(ErrorKind::InfeasiblePoint, "chi_h(Z_i) = " + to_string(x) + " is not above n1");
  if (y < 8 * x || y >= 9 * x)
    throw Error(ErrorKind::InfeasiblePoint, "block c1^2 must lie in [8 chi_h, 9 chi_h)");
  const Integer k = y - z.labels.at("c1sq");
  if (k < 0)
    throw Error(ErrorKind::InfeasiblePoint, "c1^2 of the block is below c1^2(Z_i)");

  FamilyBlueprint bp;
  Expr block = prim("Sympl", {x, y, j});
  Expr sd = prim("Sd", {d});
  bp.quotient = sum_of({{block, 1}, {sd, 1}, {prim("CP2b"), k}});
  bp.cover = universal_cover(bp.quotient);
  bp.labels = {{"d", d}, {"i", i}, {"j", j}, {"k", k}, {"chi_h", x}, {"block_c1sq", y}, {"n0", z.labels.at("n0")}};
  bp.certificates.emplace_back("homeomorphic_to_Z", homeo_equal(bp.quotient, z.quotient));
  bp.certificates.emplace_back("lebrun", lebrun_einstein(sum_of({{block, 1}, {sd, 1}}), k, 0));

  Certificate bound;
  bound.verdict = verdict::none;
  bound.inputs["k"] = json_number(k);
  bound.inputs["chi_h"] = json_number(x);
  bound.steps.push_back({"k >= 3 chi_h", "c1^2(M') >= 8 chi_h and c1^2(Z_i) <= 5 chi_h", "k >= 3*chi_h"});
  bp.certificates.emplace_back("k_bound", bound);
  for (auto& c : z.certificates)
    bp.certificates.emplace_back("Z_" + c.first, c.second);
  bp.notes = z.notes;
  bp.notes.push_back("Kotschick-Morgan-Taubes: M' # Sd is not symplectic but has non-trivial Seiberg-Witten invariant");
  attach_normal_form(bp, {});
  return bp;
}

SpinFamilies spin_families(const Integer& d, const Integer& n, const Integer& j, const GeographyConfig& config,
                           std::optional<Expr> fourth)
{
  if (d <= config.n0)
    throw Error(ErrorKind::InfeasiblePoint,
                "d = " + to_string(d) + " must exceed the Wall constant n0 = " + to_string(config.n0));
  if (n < 1)
    throw Error(ErrorKind::InfeasiblePoint, "n must be positive");

  const Expr x = prim("X442"), y = prim("Y", {j}), sd = prim("Sd", {d});
  const std::string wall = "Wall constant n0 = " + to_string(config.n0) + " (configured)";
  NormalizeOptions opts;
  opts.wall_n0 = config.n0;

  auto build = [&](std::vector<Summand> parts, std::vector<Expr> pieces, int m, bool first) {
    FamilyBlueprint bp;
    parts.push_back({sd, 1});
    bp.quotient = sum_of(parts);
    bp.cover = universal_cover(bp.quotient);
    std::vector<std::string> assumptions{wall};
    if (pieces.size() == 3) {
      Integer b2 = 0;
      for (const auto& p : pieces)
        b2 += to_integer(evaluate(p).record.b2plus());
      if (first && fourth) {
        pieces.push_back(*fourth);
        assumptions.push_back("fourth Ishida-LeBrun piece supplied by caller: " + print(*fourth));
      } else {
        pieces.push_back(default_fourth_piece(b2));
        assumptions.push_back("fourth Ishida-LeBrun piece chosen by the b2+ congruence: " + print(pieces.back()));
      }
    }
    bp.certificates.emplace_back("spin_einstein", spin_einstein(pieces, m, sd, assumptions));
    bp.certificates.emplace_back("hitchin_thorpe", hitchin_thorpe(evaluate(bp.quotient).record));
    bp.labels = {{"d", d}, {"n", n}, {"j", j}};
    bp.notes.push_back("Mandelbaum: Y_j and E(2n) decompose after one S2xS2; Wall: X442 # n0(S2xS2)");
    attach_normal_form(bp, opts);
    return bp;
  };

  SpinFamilies out{
    build({{x, 1}, {y, 1}, {prim("E", {2 * n}), 1}}, {x, y, prim("E", {2 * n})}, 3, true),
    build({{x, 1}, {prim("E", {2}), 1}, {y, 1}, {prim("E", {2 * (2 * n - 1)}), 1}},
          {x, prim("E", {2}), y, prim("E", {2 * (2 * n - 1)})}, 4, false),
  };
  return out;
}

Expr group_block(const GroupParams& g)
{
  std::vector<Integer> args{g.chi, g.tau};
  if (g.b1 != 0)
    args.push_back(g.b1);
  return prim_group("XG", args, g.group);
}

FamilyBlueprint nonspin_group_family(const GroupParams& g, const Integer& k, const Integer& p, const Integer& j)
{
  Expr e4 = prim("E", {4});
  Expr chain = fiber_sum(group_block(g), e4, 1);
  chain = fiber_sum(chain, prim("Xk", {k}), 2);
  chain = fiber_sum(chain, e4, 2);
  chain = fiber_sum(chain, log_transform(prim("E", {2}), j), 1);
  auto x = evaluate(chain);
  const Integer c1 = x.record.c1sq();
  if (!(3 * p > c1 && p < c1))
    throw Error(ErrorKind::BadP, "p = " + to_string(p) + " must satisfy " + to_string(c1) + " > p > " + to_string(c1) +
                                     "/3");
  FamilyBlueprint bp;
  bp.quotient = sum_of({{chain, 1}, {prim("CP2b"), p}});
  bp.cover = bp.quotient;
  bp.labels = {{"k", k}, {"p", p}, {"j", j}, {"chain_c1sq", c1}};
  bp.certificates.emplace_back("lebrun", lebrun_einstein(chain, p, 0));
  bp.certificates.emplace_back("hitchin_thorpe", hitchin_thorpe(evaluate(bp.quotient).record));
  bp.notes.push_back("Gompf: symplectic sums along tori and genus-2 surfaces; pi1 = " + x.flags.pi1.str());
  return bp;
}

FamilyBlueprint spin_group_family(const GroupParams& g, const Integer& i, const Integer& j, std::optional<Expr> fourth)
{
  if (i < 1)
    throw Error(ErrorKind::InfeasiblePoint, "i must be positive");
  Expr x2 = prim("Xk", {2});
  Expr ng = fiber_sum(group_block(g), prim("E", {2 * i}), 1);
  Expr y = prim("Y", {j});
  FamilyBlueprint bp;
  bp.quotient = sum_of({{x2, 1}, {ng, 1}, {y, 1}});
  bp.cover = bp.quotient;
  std::vector<Expr> pieces{x2, ng, y};
  std::vector<std::string> assumptions;
  Integer b2 = 0;
  for (const auto& p : pieces)
    b2 += to_integer(evaluate(p).record.b2plus());
  if (fourth) {
    pieces.push_back(*fourth);
    assumptions.push_back("fourth Ishida-LeBrun piece supplied by caller: " + print(*fourth));
  } else {
    pieces.push_back(default_fourth_piece(b2));
    assumptions.push_back("fourth Ishida-LeBrun piece chosen by the b2+ congruence: " + print(pieces.back()));
  }
  auto nge = evaluate(ng);
  bp.labels = {{"i", i}, {"j", j}, {"ng_b2plus", to_integer(nge.record.b2plus())}};
  bp.certificates.emplace_back("spin_einstein", spin_einstein(pieces, 3, prim("S4"), assumptions));
  bp.certificates.emplace_back("hitchin_thorpe", hitchin_thorpe(evaluate(bp.quotient).record));
  return bp;
}

} // namespace fourman
