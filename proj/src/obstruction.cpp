#include "fourman/obstruction.hpp"

#include "fourman/dsl.hpp"
#include "fourman/error.hpp"

#include <algorithm>

namespace fourman {

namespace {

constexpr const char* lebrun_cite =
  "LeBrun: X # k CP2b # l(S1xS3) admits no Einstein metric when X has non-trivial Seiberg-Witten invariant, "
  "(2chi+3tau)(X) > 0 and k + 4l >= (2chi+3tau)(X)/3";
constexpr const char* ishida_lebrun_cite =
  "Ishida-LeBrun: sums of m in {2,3,4} almost-complex pieces with non-zero mod-2 Seiberg-Witten invariant, "
  "b1 = 0, b2+ = 3 mod 4, four-piece b2+ sum = 4 mod 8, with N of b2+ = 0";

nlohmann::json record_json(const InvariantRecord& rec)
{
  nlohmann::json j;
  j["chi"] = json_number(rec.chi);
  j["tau"] = json_number(rec.tau);
  j["b1"] = json_number(rec.b1);
  j["b2plus"] = json_number(rec.b2plus());
  j["b2minus"] = json_number(rec.b2minus());
  return j;
}

nlohmann::json expr_json(const Expr& e, const InvariantRecord& rec)
{
  auto j = record_json(rec);
  j["expr"] = print(e);
  return j;
}

} // namespace

Certificate hitchin_thorpe(const InvariantRecord& rec)
{
  Certificate c;
  c.inputs = record_json(rec);
  const Integer plus = 2 * rec.chi + 3 * rec.tau;
  const Integer minus = 2 * rec.chi - 3 * rec.tau;
  const char* cite = "Hitchin-Thorpe: an Einstein 4-manifold satisfies 2chi >= 3|tau|";
  c.steps.push_back({"evaluate", cite,
                     "2*chi + 3*tau = " + to_string(plus) + "; 2*chi - 3*tau = " + to_string(minus)});
  if (plus >= 0 && minus >= 0 && rec.chi >= 0) {
    c.verdict = verdict::ht_ok;
    c.steps.push_back({"inequalities hold", cite, "2*chi + 3*tau >= 0; 2*chi - 3*tau >= 0; chi >= 0"});
  } else {
    c.verdict = verdict::ht_violated;
    std::string failing = plus < 0 ? "2*chi + 3*tau < 0" : minus < 0 ? "2*chi - 3*tau < 0" : "chi < 0";
    c.steps.push_back({"inequality fails", cite, failing});
  }
  return c;
}

SwVerdict sw_status(const Expr& expr, const PrimitiveRegistry& registry)
{
  auto e = evaluate(expr, registry);
  std::string cite = e.flags.citation("sw_nontrivial");
  std::string rule = cite.substr(0, cite.find(':'));
  return {e.flags.sw_nontrivial, e.flags.sw_nontrivial == Tri::unknown ? "" : rule, cite};
}

Certificate lebrun_einstein(const Expr& x, const Integer& k, const Integer& l, const PrimitiveRegistry& registry)
{
  auto e = evaluate(x, registry);
  Certificate c;
  c.inputs["X"] = expr_json(x, e.record);
  c.inputs["k"] = json_number(k);
  c.inputs["l"] = json_number(l);

  if (k < 0 || l < 0)
    throw Error(ErrorKind::InvalidExpr, "k and l must be nonnegative");
  if (e.flags.sw_nontrivial != Tri::yes || e.record.b2plus() <= 1) {
    c.verdict = verdict::none;
    c.steps.push_back({"hypothesis: Seiberg-Witten invariant of X",
                       "no rule derives a non-trivial Seiberg-Witten invariant for X",
                       "X.b2plus = " + to_string(e.record.b2plus())});
    return c;
  }
  c.steps.push_back({"hypothesis: Seiberg-Witten invariant of X", e.flags.citation("sw_nontrivial"),
                     "X.b2plus > 1"});
  const Integer c1sq = e.record.c1sq();
  c.steps.push_back({"evaluate", "c1^2 = 2chi + 3tau", "2*X.chi + 3*X.tau = " + to_string(c1sq)});
  if (c1sq <= 0) {
    c.verdict = verdict::none;
    c.steps.push_back({"hypothesis: (2chi+3tau)(X) > 0", lebrun_cite, "2*X.chi + 3*X.tau <= 0"});
    return c;
  }
  c.steps.push_back({"hypothesis: (2chi+3tau)(X) > 0", lebrun_cite, "2*X.chi + 3*X.tau > 0"});
  if (Rational(k + 4 * l) >= Rational(c1sq, 3)) {
    c.verdict = verdict::einstein_obstructed;
    c.steps.push_back({"LeBrun bound", lebrun_cite, "k + 4*l >= (2*X.chi + 3*X.tau)/3"});
  } else {
    c.verdict = verdict::none;
    c.steps.push_back({"LeBrun bound fails", lebrun_cite, "k + 4*l < (2*X.chi + 3*X.tau)/3"});
  }
  return c;
}

std::vector<Split> decompose_for_obstruction(const Expr& expr, const PrimitiveRegistry& registry)
{
  if (!expr.is<ConnectedSum>())
    throw Error(ErrorKind::NoSplit, "not a connected sum");
  const Expr cp2b = prim("CP2b");
  const Expr s1s3 = prim("S1xS3");
  Integer total_k = 0, total_l = 0;
  std::vector<Summand> rest;
  for (const auto& part : flatten_sum(expr)) {
    if (part.expr == cp2b)
      total_k += part.multiplicity;
    else if (part.expr == s1s3)
      total_l += part.multiplicity;
    else
      rest.push_back(part);
  }

  std::vector<Split> out;
  for (Integer k = 0; k <= total_k; ++k) {
    for (Integer l = 0; l <= total_l; ++l) {
      std::vector<Summand> x = rest;
      if (total_k - k > 0)
        x.push_back({cp2b, total_k - k});
      if (total_l - l > 0)
        x.push_back({s1s3, total_l - l});
      if (x.empty())
        continue;
      Expr xe = flat_sum(x);
      auto e = evaluate(xe, registry);
      if (e.flags.sw_nontrivial != Tri::yes || e.record.c1sq() <= 0)
        continue;
      if (3 * (k + 4 * l) >= e.record.c1sq())
        out.push_back({xe, k, l});
    }
  }
  if (out.empty())
    throw Error(ErrorKind::NoSplit, "no splitting X # k CP2b # l(S1xS3) satisfies the LeBrun bound");
  std::stable_sort(out.begin(), out.end(), [](const Split& a, const Split& b) {
    Integer wa = a.k + 4 * a.l, wb = b.k + 4 * b.l;
    return wa != wb ? wa > wb : a.k > b.k;
  });
  return out;
}

Expr default_fourth_piece(const Integer& b2plus_sum_of_three)
{
  if (mod_floor(b2plus_sum_of_three + 3, 8) == 4)
    return prim("K3");
  return prim("E", {4});
}

Certificate spin_einstein(const std::vector<Expr>& pieces, int m, const Expr& n,
                          const std::vector<std::string>& assumptions, const PrimitiveRegistry& registry)
{
  if (pieces.size() != 4)
    throw Error(ErrorKind::InvalidExpr, "Ishida-LeBrun needs exactly four candidate pieces");
  Certificate c;
  c.assumptions = assumptions;
  c.inputs["m"] = m;
  std::vector<Evaluation> evals;
  for (std::size_t i = 0; i < 4; ++i) {
    evals.push_back(evaluate(pieces[i], registry));
    c.inputs["P" + std::to_string(i + 1)] = expr_json(pieces[i], evals.back().record);
  }
  auto ne = evaluate(n, registry);
  c.inputs["N"] = expr_json(n, ne.record);

  auto fail = [&](std::string rule, std::string arithmetic) {
    c.verdict = verdict::none;
    c.steps.push_back({std::move(rule), ishida_lebrun_cite, std::move(arithmetic)});
    return c;
  };

  if (m < 2 || m > 4)
    return fail("hypothesis: m in {2,3,4}", m < 2 ? "m < 2" : "m > 4");
  c.steps.push_back({"hypothesis: m in {2,3,4}", ishida_lebrun_cite, "m >= 2; m <= 4"});

  std::string b2_sum;
  std::string c1_sum;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string p = "P" + std::to_string(i + 1);
    const auto& e = evals[i];
    if (e.flags.sw_mod2_nontrivial != Tri::yes)
      return fail("hypothesis: mod-2 Seiberg-Witten invariant of " + p, p + ".b2plus = " + to_string(e.record.b2plus()));
    c.steps.push_back({"hypothesis: mod-2 Seiberg-Witten invariant of " + p, e.flags.citation("sw_mod2_nontrivial"),
                       p + ".b2plus > 1"});
    if (e.record.b1 != 0)
      return fail("hypothesis: b1(" + p + ") = 0", p + ".b1 != 0");
    auto bp = e.record.b2plus();
    if (!is_integral(bp) || mod_floor(to_integer(bp), 4) != 3)
      return fail("hypothesis: b2+(" + p + ") = 3 mod 4", "mod(" + p + ".b2plus, 4) != 3");
    c.steps.push_back({"hypothesis: b1 = 0, b2+ = 3 mod 4 for " + p, ishida_lebrun_cite,
                       p + ".b1 = 0; mod(" + p + ".b2plus, 4) = 3"});
    b2_sum += (i ? " + " : "") + p + ".b2plus";
    if (static_cast<int>(i) < m)
      c1_sum += (i ? " + " : "") + std::string("(2*" + p + ".chi + 3*" + p + ".tau)");
  }
  Integer total = 0;
  for (const auto& e : evals)
    total += to_integer(e.record.b2plus());
  if (mod_floor(total, 8) != 4)
    return fail("hypothesis: four-piece b2+ sum = 4 mod 8", "mod(" + b2_sum + ", 8) != 4");
  c.steps.push_back({"hypothesis: four-piece b2+ sum = 4 mod 8", ishida_lebrun_cite, "mod(" + b2_sum + ", 8) = 4"});

  auto nb = ne.record.b2plus();
  if (nb != 0)
    return fail("hypothesis: b2+(N) = 0", "N.b2plus != 0");
  c.steps.push_back({"hypothesis: b2+(N) = 0", ishida_lebrun_cite, "N.b2plus = 0"});

  Rational lhs = 4 * m - ne.record.c1sq();
  Rational rhs = 0;
  for (int i = 0; i < m; ++i)
    rhs += evals[static_cast<std::size_t>(i)].record.c1sq();
  rhs /= 3;
  const std::string bound = "4*m - (2*N.chi + 3*N.tau)";
  if (lhs >= rhs) {
    c.verdict = verdict::einstein_obstructed;
    c.steps.push_back({"Ishida-LeBrun bound", ishida_lebrun_cite, bound + " >= (" + c1_sum + ")/3"});
  } else {
    c.verdict = verdict::none;
    c.steps.push_back({"Ishida-LeBrun bound fails", ishida_lebrun_cite, bound + " < (" + c1_sum + ")/3"});
  }
  return c;
}

Certificate check_einstein(const Expr& expr, const PrimitiveRegistry& registry)
{
  if (expr.is<ConnectedSum>()) {
    try {
      auto splits = decompose_for_obstruction(expr, registry);
      return lebrun_einstein(splits.front().x, splits.front().k, splits.front().l, registry);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoSplit)
        throw;
    }

    std::vector<Expr> pieces;
    std::vector<Summand> rest;
    for (const auto& part : flatten_sum(expr)) {
      auto e = evaluate(part.expr, registry);
      auto bp = e.record.b2plus();
      bool piece = e.flags.sw_mod2_nontrivial == Tri::yes && e.record.b1 == 0 && is_integral(bp) &&
                   mod_floor(to_integer(bp), 4) == 3;
      if (piece)
        for (Integer i = 0; i < part.multiplicity; ++i)
          pieces.push_back(part.expr);
      else
        rest.push_back(part);
    }
    if (pieces.size() >= 2 && pieces.size() <= 4) {
      int m = static_cast<int>(pieces.size());
      std::vector<std::string> assumptions;
      if (m < 4) {
        Integer sum = 0;
        for (const auto& p : pieces)
          sum += to_integer(eval_invariants(p, registry).b2plus());
        while (pieces.size() < 3) {
          pieces.push_back(prim("K3"));
          sum += 3;
        }
        pieces.push_back(default_fourth_piece(sum));
        assumptions.push_back("extra Ishida-LeBrun candidate pieces supplied: " + print(pieces.back()));
      }
      Expr n = rest.empty() ? prim("S4") : flat_sum(rest);
      if (rest.empty())
        assumptions.push_back("N = S4 (no b2+ = 0 summand)");
      return spin_einstein(pieces, m, n, assumptions, registry);
    }
  }
  auto e = evaluate(expr, registry);
  Certificate c;
  c.verdict = verdict::none;
  c.inputs["M"] = expr_json(expr, e.record);
  c.steps.push_back({"no obstruction pattern", "neither the LeBrun nor the Ishida-LeBrun pattern matches",
                     "M.b2plus = " + to_string(e.record.b2plus())});
  return c;
}

namespace {

int parity_code(Parity p)
{
  return p == Parity::odd ? 1 : 0;
}

int w2_code(W2Type w)
{
  return w == W2Type::I ? 1 : w == W2Type::II ? 2 : 3;
}

struct Keyed {
  Evaluation eval;
  Integer plus, minus, order;
};

Keyed numeric_key(const Expr& expr, const PrimitiveRegistry& registry)
{
  auto e = evaluate(expr, registry);
  const auto& g = e.flags.pi1;
  if (g.kind == GroupLabel::Kind::unknown)
    throw Error(ErrorKind::UnknownFlag, "pi1 of " + print(expr) + " is unknown");
  if (!g.is_trivial() && !g.is_cyclic())
    throw Error(ErrorKind::UnsupportedGroup, "homeomorphism keys need trivial or finite cyclic pi1, got " + g.str());
  auto plus = b2plus_int(e.record);
  auto minus = b2minus_int(e.record);
  if (!plus || !minus)
    throw Error(ErrorKind::InvalidExpr, "non-integral b2 parts for " + print(expr));
  return {e, *plus, *minus, *g.finite_order()};
}

void require_flags(const Expr& expr, const StructureFlags& f)
{
  if (f.parity == Parity::unknown)
    throw Error(ErrorKind::UnknownFlag, "parity of " + print(expr) + " is unknown");
  if (f.w2type == W2Type::unknown)
    throw Error(ErrorKind::UnknownFlag, "w2-type of " + print(expr) + " is unknown");
}

} // namespace

HomeoKey homeo_key(const Expr& expr, const PrimitiveRegistry& registry)
{
  auto k = numeric_key(expr, registry);
  require_flags(expr, k.eval.flags);
  return {k.eval.flags.pi1, k.plus, k.minus, k.eval.flags.parity, k.eval.flags.w2type};
}

Certificate homeo_equal(const Expr& a, const Expr& b, const PrimitiveRegistry& registry)
{
  auto ka = numeric_key(a, registry);
  auto kb = numeric_key(b, registry);
  Certificate c;
  auto side = [](const Expr& e, const Keyed& k) {
    nlohmann::json j;
    j["expr"] = print(e);
    j["pi1"] = k.eval.flags.pi1.str();
    j["pi1_order"] = json_number(k.order);
    j["b2plus"] = json_number(k.plus);
    j["b2minus"] = json_number(k.minus);
    return j;
  };
  c.inputs["A"] = side(a, ka);
  c.inputs["B"] = side(b, kb);
  const char* cite = "Hambleton-Kreck: finite cyclic pi1, classified by pi1, b2+-, parity and w2-type";

  if (ka.order != kb.order) {
    c.verdict = verdict::not_homeomorphic;
    c.steps.push_back({"fundamental groups differ", "pi1 is a homotopy invariant", "A.pi1_order != B.pi1_order"});
    return c;
  }
  if (ka.plus != kb.plus || ka.minus != kb.minus) {
    c.verdict = verdict::not_homeomorphic;
    c.steps.push_back({"Betti numbers differ", "b2+ and b2- are homotopy invariants",
                       ka.plus != kb.plus ? "A.b2plus != B.b2plus" : "A.b2minus != B.b2minus"});
    return c;
  }
  require_flags(a, ka.eval.flags);
  require_flags(b, kb.eval.flags);
  c.inputs["A"]["parity_odd"] = parity_code(ka.eval.flags.parity);
  c.inputs["B"]["parity_odd"] = parity_code(kb.eval.flags.parity);
  c.inputs["A"]["w2type"] = w2_code(ka.eval.flags.w2type);
  c.inputs["B"]["w2type"] = w2_code(kb.eval.flags.w2type);
  c.steps.push_back({"same group and Betti numbers", cite,
                     "A.pi1_order = B.pi1_order; A.b2plus = B.b2plus; A.b2minus = B.b2minus"});
  if (ka.eval.flags.parity != kb.eval.flags.parity || ka.eval.flags.w2type != kb.eval.flags.w2type) {
    c.verdict = verdict::not_homeomorphic;
    c.steps.push_back({"form type differs", cite,
                       ka.eval.flags.parity != kb.eval.flags.parity ? "A.parity_odd != B.parity_odd"
                                                                    : "A.w2type != B.w2type"});
    return c;
  }
  c.steps.push_back({"same parity and w2-type", cite, "A.parity_odd = B.parity_odd; A.w2type = B.w2type"});
  if (ka.plus == 0 || ka.minus == 0) {
    c.verdict = verdict::none;
    c.steps.push_back({"definite form", "the classification needs an indefinite form",
                       ka.plus == 0 ? "A.b2plus = 0" : "A.b2minus = 0"});
    return c;
  }
  c.verdict = verdict::homeomorphic;
  c.steps.push_back({"indefinite form", ka.order == 1 ? "Freedman: simply connected, same form" : cite,
                     "A.b2plus > 0; A.b2minus > 0"});
  return c;
}

} // namespace fourman
