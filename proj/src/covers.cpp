#include "fourman/covers.hpp"

#include "fourman/error.hpp"

namespace fourman {

Integer branch_curve_euler(const DivisorClass& cls)
{
  if (cls.base == Base::CP2) {
    const Integer& k = cls.degrees.at(0);
    return 2 - (k - 1) * (k - 2);
  }
  const Integer& p = cls.degrees.at(0);
  const Integer& q = cls.degrees.at(1);
  return 2 * (p + q) - 2 * p * q;
}

InvariantRecord base_record(Base base)
{
  return base == Base::CP2 ? InvariantRecord{3, 1, 0} : InvariantRecord{4, 0, 0};
}

DivisorClass base_c1(Base base)
{
  return base == Base::CP2 ? DivisorClass::on_cp2(3) : DivisorClass::on_quadric(2, 2);
}

namespace {

void require_positive(const DivisorClass& cls, const char* what)
{
  for (const auto& v : cls.degrees)
    if (v < 1)
      throw Error(ErrorKind::NegativeDegree, std::string(what) + " " + cls.str() + " needs degrees >= 1");
}

void require_positive(std::initializer_list<const Integer*> values, const char* what)
{
  for (const auto* v : values)
    if (*v < 1)
      throw Error(ErrorKind::NegativeDegree, std::string(what) + " parameters must be >= 1, got " + to_string(*v));
}

} // namespace

InvariantRecord cyclic_cover_invariants(const InvariantRecord& base_rec, const DivisorClass& c1, const Integer& d,
                                        const DivisorClass& L)
{
  if (d < 1)
    throw Error(ErrorKind::NegativeDegree, "cover degree must be >= 1");
  if (d == 1)
    return base_rec;
  require_positive(L, "line bundle");
  Integer chi_d = branch_curve_euler(L.scaled(d));
  Integer c2 = d * base_rec.c2() - (d - 1) * chi_d;
  DivisorClass k = c1 - L.scaled(d - 1);
  Integer c1sq = d * intersect(k, k);
  return record_from_chern(c1sq, c2, 0);
}

InvariantRecord cyclic_cover_invariants(Base base, const Integer& d, const DivisorClass& branch)
{
  if (d < 1)
    throw Error(ErrorKind::NegativeDegree, "cover degree must be >= 1");
  if (branch.base != base)
    throw Error(ErrorKind::InvalidExpr, "branch class " + branch.str() + " does not live on " +
                                            std::string(base_name(base)));
  require_positive(branch, "branch class");
  if (!branch.divisible_by(d))
    throw Error(ErrorKind::NonDivisibleBranch, "branch class " + branch.str() + " is not divisible by " + to_string(d));
  return cyclic_cover_invariants(base_record(base), base_c1(base), d, branch.divided(d));
}

Integer proper_transform_euler(const Integer& d, const Integer& chi_d, const Integer& c_dot_d)
{
  return d * chi_d - (d - 1) * c_dot_d;
}

InvariantRecord bicyclic_invariants(const Integer& d, const Integer& p, const Integer& a, const Integer& b,
                                    const Integer& m, const Integer& n)
{
  require_positive({&d, &p, &a, &b, &m, &n}, "bi-cyclic");
  Integer c1sq = 2 * p * d * ((d - 1) * a + (p - 1) * m - 2) * ((d - 1) * b + (p - 1) * n - 2);
  Integer c2 = p * d *
               (4 - 2 * (d - 1) * (a + b - d * a * b) - 2 * (p - 1) * (m + n - p * m * n) +
                (p - 1) * (d - 1) * (a * n + b * m));
  return record_from_chern(c1sq, c2, 0);
}

Admissibility action_admissibility(const Integer& d, const Integer& a, const Integer& b, Action action)
{
  struct Term {
    std::string text;
    Integer value;
  };
  std::vector<Term> terms;
  if (action == Action::standard)
    terms = {{"a+1", a + 1}, {"b+1", b + 1}, {"a+b+1", a + b + 1}};
  else
    terms = {{"a+1", a + 1}, {"2b+1", 2 * b + 1}, {"a+2b+1", a + 2 * b + 1}};
  for (const auto& t : terms) {
    Integer g = gcd(t.value, d);
    if (g != 1)
      return {false, "gcd(" + t.text + ",d)", g};
  }
  return {};
}

InvariantRecord quotient_invariants(const InvariantRecord& inner, const Integer& d)
{
  if (d < 1)
    throw Error(ErrorKind::NegativeDegree, "quotient order must be >= 1");
  if (d == 1)
    return inner;
  if (!divides(d, inner.c2()) || !divides(d, inner.c1sq()))
    throw Error(ErrorKind::NonIntegralQuotient, "c2=" + to_string(inner.c2()) + " and c1^2=" +
                                                    to_string(inner.c1sq()) + " are not both divisible by " +
                                                    to_string(d));
  InvariantRecord out = record_from_chern(inner.c1sq() / d, inner.c2() / d, 0);
  if (!is_integral(out.chi_h()))
    throw Error(ErrorKind::NonIntegralQuotient, "quotient chi_h = " + to_string(out.chi_h()) + " is not integral");
  return out;
}

bool ample_canonical(const Integer& d, const Integer& p, const Integer& a, const Integer& b, const Integer& m,
                     const Integer& n, AmpleMode mode)
{
  if (mode == AmpleMode::cover)
    return (d - 1) * a + (p - 1) * m >= 3 && (d - 1) * b + (p - 1) * n >= 3;
  return (d - 1) * a + d * (p - 1) * m > 2 && (d - 1) * b + d * (p - 1) * n > 2;
}

bool ample_canonical(Base base, const Integer& d, const DivisorClass& branch)
{
  if (!branch.divisible_by(d))
    return false;
  DivisorClass k = branch.divided(d).scaled(d - 1) - base_c1(base);
  for (const auto& v : k.degrees)
    if (v <= 0)
      return false;
  return true;
}

std::optional<std::string> bicyclic_nonspin_reason(const Integer& d, const Integer& p, const Integer& a,
                                                   const Integer& b, const Integer& m, const Integer& n)
{
  // K_N = pi^*O(alpha, beta); a fiber component A of the deformed branch curve has
  // K.A'' = (deg of the other cover) * beta (or alpha).
  Integer alpha = (d - 1) * a + (p - 1) * m - 2;
  Integer beta = (d - 1) * b + (p - 1) * n - 2;
  auto odd = [](const Integer& v) { return v % 2 != 0; };
  if (!odd(d) && odd(p)) {
    if (odd(p * beta))
      return "K.A'' = p((d-1)b+(p-1)n-2) = " + to_string(p * beta) + " is odd";
    if (odd(p * alpha))
      return "K.B'' = p((d-1)a+(p-1)m-2) = " + to_string(p * alpha) + " is odd";
  }
  if (!odd(p) && odd(d)) {
    if (odd(d * beta))
      return "K.A'' = d((d-1)b+(p-1)n-2) = " + to_string(d * beta) + " is odd";
    if (odd(d * alpha))
      return "K.B'' = d((d-1)a+(p-1)m-2) = " + to_string(d * alpha) + " is odd";
  }
  return std::nullopt;
}

bool CoverBlueprint::constructible() const
{
  for (const auto& c : preconditions)
    if (!c.pass)
      return false;
  return true;
}

CoverBlueprint cover_blueprint(const Expr& expr)
{
  CoverBlueprint bp{expr, {}};
  auto& checks = bp.preconditions;
  auto positive = [](std::initializer_list<const Integer*> vs) {
    for (const auto* v : vs)
      if (*v < 1)
        return false;
    return true;
  };

  if (const auto* c = expr.as<CyclicCover>()) {
    checks.push_back({"degrees positive", positive({&c->degree}) && [&] {
                        for (const auto& v : c->branch.degrees)
                          if (v < 1)
                            return false;
                        return true;
                      }(), false, "branch class must be effective", c->branch.str()});
    checks.push_back({"d-divisibility", c->branch.divisible_by(c->degree), false,
                      "O(D) = L^d", c->branch.str() + " / " + to_string(c->degree)});
    checks.push_back({"smooth branch", true, true, "Bertini: generic member of a very ample class", ""});
    checks.push_back({"simply connected", true, true, "Catanese: flexible branch data", ""});
    return bp;
  }
  if (const auto* b = expr.as<BicyclicCover>()) {
    bool pos = positive({&b->d, &b->p, &b->a, &b->b, &b->m, &b->n});
    checks.push_back({"degrees positive", pos, false, "all bi-degrees >= 1", ""});
    checks.push_back({"smooth transversal branch", true, true, "Bertini: generic members intersect transversally", ""});
    checks.push_back({"simply connected", pos, true, "Catanese: flexible branch data, all degrees >= 1",
                      ""});
    return bp;
  }
  if (const auto* q = expr.as<Quotient>()) {
    const auto* inner = q->inner.as<BicyclicCover>();
    checks.push_back({"inner is a bi-cyclic cover", inner != nullptr, false, "free quotients of bi-cyclic covers",
                      ""});
    if (!inner)
      return bp;
    checks.push_back({"order matches the first cover", inner->d == q->degree, false,
                      "the Z/d action lifts through the d-cover",
                      "d=" + to_string(inner->d) + ", order=" + to_string(q->degree)});
    if (q->degree >= 2) {
      auto adm = action_admissibility(q->degree, inner->a, inner->b, q->action);
      checks.push_back({q->action == Action::standard ? "gcd admissibility (standard)" : "gcd admissibility (weighted)",
                        adm.pass, false, "free action on the branch data",
                        adm.pass ? "all gcds equal 1" : adm.check + " = " + to_string(adm.witness)});
    }
    if (q->action == Action::standard)
      checks.push_back({"second branch divisible by d", divides(q->degree, inner->m) && divides(q->degree, inner->n),
                        false, "O(C) = O(pdm, pdn)", "(m,n) = (" + to_string(inner->m) + "," + to_string(inner->n) + ")"});
    return bp;
  }
  throw Error(ErrorKind::InvalidExpr, "blueprints exist only for covers and quotients");
}

} // namespace fourman
