#include "fourman/evaluate.hpp"

#include "fourman/covers.hpp"
#include "fourman/error.hpp"
#include "fourman/surgery.hpp"
#include "fourman/sw_rules.hpp"

namespace fourman {

namespace {

void apply_block_sw(Evaluation& e)
{
  auto& f = e.flags;
  if (f.sw_nontrivial == Tri::unknown) {
    auto sw = sw_block(e.record, f);
    if (sw.value != Tri::unknown) {
      f.sw_nontrivial = sw.value;
      f.cite("sw_nontrivial", sw.rule + ": " + sw.citation);
    }
  }
  if (f.sw_mod2_nontrivial == Tri::unknown) {
    auto sw = sw_mod2_block(e.record, f);
    if (sw.value != Tri::unknown) {
      f.sw_mod2_nontrivial = sw.value;
      f.cite("sw_mod2_nontrivial", sw.rule + ": " + sw.citation);
    }
  }
}

void complex_surface_flags(StructureFlags& f, const std::string& source)
{
  f.complex_surface = true;
  f.kahler = Tri::yes;
  f.cite("kahler", source);
  f.symplectic = Tri::yes;
  f.cite("symplectic", "Kaehler forms are symplectic");
}

struct Evaluator {
  const PrimitiveRegistry& registry;

  Evaluation operator()(const Primitive& p) const
  {
    auto entry = registry.lookup(p);
    Evaluation e{entry.record, entry.flags, entry.caps};
    apply_block_sw(e);
    return e;
  }

  Evaluation operator()(const CyclicCover& c) const
  {
    if (c.degree == 1)
      return (*this)(Primitive{c.base == Base::CP2 ? "CP2" : "S2xS2", {}, std::nullopt});
    Evaluation e;
    e.record = cyclic_cover_invariants(c.base, c.degree, c.branch);
    auto& f = e.flags;
    f.pi1 = GroupLabel::trivial();
    f.cite("pi1", "Catanese: cyclic covers with flexible branch data are simply connected");
    complex_surface_flags(f, "branched cover of a projective surface");
    f.acd = Tri::yes;
    f.cite("acd", "R-D: Mandelbaum, cyclic covers branched along hypersurface sections are almost completely decomposable");
    if (ample_canonical(c.base, c.degree, c.branch)) {
      f.minimal_general_type = Tri::yes;
      f.cite("minimal_general_type", "ample canonical bundle (d-1)L - c1(Y) > 0");
    }
    complete_flags(e.record, f);
    apply_block_sw(e);
    return e;
  }

  Evaluation operator()(const BicyclicCover& b) const
  {
    Evaluation e;
    e.record = bicyclic_invariants(b.d, b.p, b.a, b.b, b.m, b.n);
    auto& f = e.flags;
    f.pi1 = GroupLabel::trivial();
    f.cite("pi1", "Catanese: bi-cyclic covers with all degrees >= 1 are simply connected");
    complex_surface_flags(f, "bi-cyclic cover of CP1xCP1");
    f.acd = Tri::yes;
    f.cite("acd", "R-C: iterated cyclic covers of CP1xCP1 are almost completely decomposable (Mandelbaum-Moishezon induction)");
    if (ample_canonical(b.d, b.p, b.a, b.b, b.m, b.n)) {
      f.minimal_general_type = Tri::yes;
      f.cite("minimal_general_type", "ample canonical bundle");
    }
    if (auto why = bicyclic_nonspin_reason(b.d, b.p, b.a, b.b, b.m, b.n)) {
      f.spin = Tri::no;
      f.cite("spin", "w2 pairs non-trivially with a fiber class: " + *why);
    }
    complete_flags(e.record, f);
    apply_block_sw(e);
    return e;
  }

  Evaluation operator()(const Quotient& q) const
  {
    if (q.degree < 1)
      throw Error(ErrorKind::NegativeDegree, "quotient order must be >= 1");
    if (!q.inner.is<BicyclicCover>())
      throw Error(ErrorKind::InvalidExpr, "quotients are defined for bi-cyclic covers only");
    auto inner = std::visit(*this, q.inner.node());
    if (q.degree == 1)
      return inner;
    auto bp = cover_blueprint(Expr(q));
    for (const auto& check : bp.preconditions)
      if (!check.pass)
        throw Error(ErrorKind::AdmissibilityFail, check.name + " fails: " + check.detail);
    Evaluation e;
    e.record = quotient_invariants(inner.record, q.degree);
    auto& f = e.flags;
    f.pi1 = GroupLabel::cyclic(q.degree);
    f.cite("pi1", "free Z/" + to_string(q.degree) + " quotient of a simply connected cover");
    complex_surface_flags(f, "free holomorphic quotient of a Kaehler surface");
    if (inner.flags.spin != Tri::unknown) {
      f.cover_spin = inner.flags.spin;
      f.cite("cover_spin", "universal cover is the bi-cyclic cover");
    }
    if (inner.flags.minimal_general_type == Tri::yes) {
      f.minimal_general_type = Tri::yes;
      f.cite("minimal_general_type", "ample canonical bundle descends to free quotients");
    }
    complete_flags(e.record, f);
    apply_block_sw(e);
    return e;
  }

  static void check_multiplicities(const ConnectedSum& s)
  {
    for (const auto& part : s.parts) {
      if (part.multiplicity < 1)
        throw Error(ErrorKind::InvalidExpr, "connected sum multiplicities must be >= 1");
      if (const auto* inner = part.expr.as<ConnectedSum>())
        check_multiplicities(*inner);
    }
  }

  // Nested sums are flattened first so flags do not depend on the bracketing.
  Evaluation operator()(const ConnectedSum& s) const
  {
    check_multiplicities(s);
    std::vector<WeightedPart> parts;
    for (const auto& part : flatten_sum(connected_sum(s.parts)))
      parts.push_back({std::visit(*this, part.expr.node()), part.multiplicity});
    return connected_sum(parts);
  }

  Evaluation operator()(const FiberSum& s) const
  {
    return fiber_sum(std::visit(*this, s.left.node()), std::visit(*this, s.right.node()), s.genus);
  }

  Evaluation operator()(const LogTransform& t) const
  {
    return log_transform(std::visit(*this, t.inner.node()), t.multiplicity);
  }
};

} // namespace

Evaluation evaluate(const Expr& expr, const PrimitiveRegistry& registry)
{
  return std::visit(Evaluator{registry}, expr.node());
}

InvariantRecord eval_invariants(const Expr& expr, const PrimitiveRegistry& registry)
{
  return evaluate(expr, registry).record;
}

StructureFlags infer_flags(const Expr& expr, const PrimitiveRegistry& registry)
{
  return evaluate(expr, registry).flags;
}

} // namespace fourman
